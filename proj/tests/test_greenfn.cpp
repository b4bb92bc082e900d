#include <doctest.h>

#include <cmath>

#include "zeeman2d/greenfn.hpp"
#include "zeeman2d/perturb.hpp"

using namespace zeeman2d;

TEST_CASE("Gauss-Laguerre rules integrate monomials exactly") {
  for (int alpha = 0; alpha <= 7; ++alpha) {
    for (int points : {1, 5, 20, 60}) {
      const auto rule = gauss_laguerre<double>(points, alpha);
      REQUIRE(rule.nodes.size() == static_cast<std::size_t>(points));
      for (int m = 0; m <= std::min(2 * points - 1, 40); ++m) {
        const double exact = std::tgamma(alpha + m + 1.0);
        const double got = rule.integrate([m](double x) { return std::pow(x, m); });
        CHECK(got == doctest::Approx(exact).epsilon(1e-11));
      }
    }
  }
  const auto big = gauss_laguerre<double>(200, 3);
  CHECK(big.integrate([](double) { return 1.0; }) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("plain Green function is symmetric") {
  for (int l = 0; l <= 3; ++l) {
    const auto cfg = GreenEvalConfig::plain(l, 1, Rational(-3, 10), 25);
    const SturmianGreenFunction<double> g(cfg);
    for (double r : {0.2, 1.0, 3.5, 8.0}) {
      for (double rp : {0.1, 0.7, 2.0, 6.0}) {
        const double a = g(r, rp);
        const double b = g(rp, r);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
      }
    }
  }
}

TEST_CASE("reduced Green function is symmetric") {
  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l < n; ++l) {
      const ReducedGreenFunction<double> g(GreenEvalConfig::reduced(n, l, 1, 20));
      for (double r : {0.3, 1.5, 4.0}) {
        for (double rp : {0.2, 2.5, 7.0}) {
          const double a = g(r, rp);
          CHECK(std::abs(a - g(rp, r)) <= 1e-12 * std::max(1.0, std::abs(a)));
        }
      }
    }
  }
}

TEST_CASE("plain Green function inverts on each Sturmian") {
  // \int G(r, r') (Z / r') S_j(r') dr' = S_j(r) / (mu_j - 1)
  const Rational Z = 2;
  const Rational E(-9, 8);
  for (int l = 0; l <= 2; ++l) {
    const SturmianGreenFunction<double> g(GreenEvalConfig::plain(l, Z, E, 15));
    const auto rule = gauss_laguerre<double>(40, 2 * l);
    for (int j = 0; j < 15; ++j) {
      const RadialFunction& S = g.sturmians()[static_cast<std::size_t>(j)];
      for (double x : {0.5, 2.0, 6.0}) {
        const double lhs = Z.to_double() * rule.integrate([&](double xp) {
          return g.unweighted(x, xp) * S.unweighted_at_x(xp) / std::pow(xp, 2 * l + 1);
        });
        const double rhs = S.unweighted_at_x(x) / (sturmian_mu(j, l, E, Z).value - 1);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("residue at a Coulomb level") {
  // (E - E_n) / (mu_{n_r}(E) - 1) = E_n (mu + 1), exactly at rational mu.
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) {
      const RadialLevel level(n, l);
      const Rational En = energy0(level, 1);
      for (const Rational k : {Rational(1, 3), Rational(2, 7), Rational(5, 4)}) {
        const Rational E = -(k * k) / Rational(2);
        if (E == En) continue;
        const SturmianEigenvalue mu = sturmian_mu(level.n_r(), l, E, 1);
        REQUIRE(mu.exact);
        CHECK((E - En) / (*mu.exact - Rational(1)) == En * (*mu.exact + Rational(1)));
      }
    }
  }
  // Numerically, (E - E_n) G -> 2 E_n S S' with S taken at E_n.
  const RadialLevel level(2, 0);
  const double En = energy0(level, 1).to_double();
  const Rational E = Rational::from_double(En * (1 + 1e-7));
  const SturmianGreenFunction<double> g(GreenEvalConfig::plain(0, 1, E, 30));
  const RadialFunction S = sturmian(level.n_r(), 0, energy0(level, 1), 1);
  for (double r : {0.5, 2.0, 5.0}) {
    const double lhs = (E.to_double() - En) * g(r, 1.3);
    CHECK(lhs == doctest::Approx(2 * En * S(r) * S(1.3)).epsilon(1e-5));
  }
}

TEST_CASE("pole and truncation errors") {
  const RadialLevel level(3, 1);
  try {
    green_eval<double>(GreenEvalConfig::plain(1, 1, energy0(level, 1), 10), 1.0, 2.0);
    FAIL("expected a pole error");
  } catch (const PoleError& e) {
    CHECK(e.resonant_n_r == level.n_r());
  }
  CHECK_THROWS_AS(GreenEvalConfig::plain(0, 1, Rational(1, 10), 10), std::domain_error);
  CHECK_THROWS_AS(ReducedGreenFunction<double>(GreenEvalConfig::reduced(3, 0, 1, 5)), std::invalid_argument);
  CHECK_NOTHROW(ReducedGreenFunction<double>(GreenEvalConfig::reduced(3, 0, 1, 6)));
}

TEST_CASE("reduced Green function is orthogonal to its eigenstate") {
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      const RadialLevel level(n, l);
      const ReducedGreenFunction<double> g(GreenEvalConfig::reduced(n, l, 1, level.n_r() + 12));
      const RadialFunction P = bound_radial(level, 1);
      const auto rule = gauss_laguerre<double>(60, 2 * l + 1);
      for (double x : {0.4, 1.5, 3.0, 7.5}) {
        double scale = 0;
        const double proj = rule.integrate([&](double xp) {
          const double v = g.unweighted(x, xp) * P.unweighted_at_x(xp) / std::pow(xp, 2 * l + 1);
          scale = std::max(scale, std::abs(v));
          return v;
        });
        CHECK(std::abs(proj) <= 1e-8 * std::max(1.0, scale));
      }
    }
  }
}

TEST_CASE("double integral over the reduced Green function gives eps4") {
  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l < n; ++l) {
      const double exact = eps4_closed(n, l).to_double();
      const int n_r = n - l - 1;
      const double value = eps4_green_quadrature<double>(n, l, n_r + 6, 60);
      CHECK(std::abs(value - exact) <= 1e-8 * std::abs(exact));
      const double wider = eps4_green_quadrature<double>(n, l, n_r + 16, 60);
      CHECK(std::abs(wider - value) <= 1e-12 * std::abs(exact));
    }
  }
}
