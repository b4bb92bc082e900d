#include <doctest.h>

#include "zeeman2d/laguerre.hpp"
#include "zeeman2d/oracle.hpp"
#include "zeeman2d/perturb.hpp"

using namespace zeeman2d;

TEST_CASE("1x1 generalized problem") {
  MatrixX<double> H(1, 1), O(1, 1);
  H(0, 0) = -0.75;
  O(0, 0) = 1;
  const auto r = solve_generalized<double>(H, O, true);
  CHECK(r.eigenvalues(0) == -0.75);
  CHECK(r.max_residual == 0);
}

TEST_CASE("factorization failure reports the pivot") {
  MatrixX<double> H = MatrixX<double>::Identity(3, 3);
  MatrixX<double> O = MatrixX<double>::Identity(3, 3);
  O(2, 2) = -1;
  try {
    solve_generalized<double>(H, O);
    FAIL("expected a factorization error");
  } catch (const FactorizationError& e) {
    CHECK(e.pivot_index == 2);
  }
  CHECK_THROWS_AS(solve_generalized<double>(MatrixX<double>::Identity(2, 2), O), std::invalid_argument);
}

TEST_CASE("configuration validation") {
  GalerkinConfig cfg = GalerkinConfig::for_level(RadialLevel(2, 1), 1, 0, 40);
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.reference_energy == Rational(-2, 9));
  cfg.basis_size = 19;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.basis_size = 40;
  cfg.reference_energy = Rational(1, 2);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.reference_energy = Rational(-1);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // sqrt(2) scale
  cfg.reference_energy = Rational(-2, 9);
  cfg.b = Rational(-1);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("matrix structure") {
  GalerkinConfig cfg = GalerkinConfig::for_level(RadialLevel(3, 1), 1, Rational(1, 100), 30);
  const auto m = build_matrices<double>(cfg);
  CHECK((m.H - m.H.transpose()).cwiseAbs().maxCoeff() == 0);
  CHECK((m.O - m.O.transpose()).cwiseAbs().maxCoeff() == 0);
  for (int i = 0; i < 30; ++i) {
    for (int j = 0; j < 30; ++j) {
      if (std::abs(i - j) > 1) CHECK(m.O(i, j) == 0);
      if (std::abs(i - j) > 3) CHECK(m.H(i, j) == 0);
    }
  }
  const GalerkinSolver<double> solver(1, 1, Rational(-2, 25), 30);
  bool r2_band_full = true;
  for (int i = 0; i + 3 < 30; ++i) r2_band_full = r2_band_full && solver.r2()(i, i + 3) != 0;
  CHECK(r2_band_full);
}

TEST_CASE("exact entries agree with brute-force integrals") {
  const int l = 1;
  const Rational E(-2, 9);
  const GalerkinExactBlocks blocks = exact_galerkin_blocks(l, 1, E, 12);
  const Rational two_k = Rational(2) * blocks.k;
  CHECK(blocks.k == Rational(2, 3));
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      const LaguerreSpec a{i, 2 * l}, b{j, 2 * l};
      CHECK(blocks.overlap_entry(i, j) == brute_force_integral(2 * l + 1, a, b) / two_k);
      CHECK(blocks.r2_entry(i, j) == brute_force_integral(2 * l + 3, a, b) / two_k.pow(3));
    }
    CHECK(blocks.shifted_mu[static_cast<std::size_t>(i)] == Rational(2 * (i + l) + 1, 2) / Rational(3, 2) - Rational(1));
  }
}

TEST_CASE("zero-field spectrum") {
  for (const Rational Z : {Rational(1), Rational(2)}) {
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) {
        const RadialLevel level(n, l);
        const auto r = galerkin_solve<double>(GalerkinConfig::for_level(level, Z, 0, 120));
        CHECK(std::abs(r.tracked_energy - energy0(level, Z).to_double()) <= 1e-12);
      }
    }
  }
  // Spectrum head for l = 0 with one anchor.
  const auto r = galerkin_solve<double>(GalerkinConfig::for_level(RadialLevel(1, 0), 1, 0, 120));
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(r.eigenvalues[static_cast<std::size_t>(i)] - energy0(RadialLevel(i + 1, 0), 1).to_double()) <= 1e-10);
  }
}

TEST_CASE("eigenpair residuals") {
  GalerkinConfig cfg = GalerkinConfig::for_level(RadialLevel(2, 0), 1, Rational(1, 200), 60);
  const auto m = build_matrices<double>(cfg);
  const auto r = solve_generalized<double>(m.H, m.O, true);
  CHECK(r.max_residual <= 1e-10);
  for (Eigen::Index i = 1; i < r.eigenvalues.size(); ++i) CHECK(r.eigenvalues(i - 1) <= r.eigenvalues(i));
}

TEST_CASE("diamagnetic shift is upward") {
  for (int l = 0; l <= 2; ++l) {
    const RadialLevel level(l + 1, l);
    const GalerkinSolver<double> solver(l, 1, energy0(level, 1), 80);
    const auto e0 = solver.eigenvalues(0);
    const auto e1 = solver.eigenvalues(Rational(1, 1000));
    for (int i = 0; i < 3; ++i) CHECK(e1[static_cast<std::size_t>(i)] > e0[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("basis convergence and variational monotonicity") {
  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l < n; ++l) {
      const RadialLevel level(n, l);
      const Rational b = Rational(1, 20) / level.effective_n().pow(4);
      const int n_r = level.n_r();
      double previous = 1e300;
      for (int M : {30, 60, 120}) {
        const GalerkinSolver<double> solver(l, 1, energy0(level, 1), M);
        const double e = solver.eigenvalues(b)[static_cast<std::size_t>(n_r)];
        CHECK(e <= previous + 1e-13);
        previous = e;
      }
      const auto half = galerkin_solve<double>(GalerkinConfig::for_level(level, 1, b, 120), true);
      REQUIRE(half.convergence_delta);
      CHECK(*half.convergence_delta < 1e-11);
      const GalerkinSolver<double> doubled(l, 1, energy0(level, 1), 240);
      CHECK(std::abs(doubled.eigenvalues(b)[static_cast<std::size_t>(n_r)] - half.tracked_energy) < 1e-11);
    }
  }
}

TEST_CASE("level tracking detects crossings") {
  const std::vector<std::vector<double>> clean = {{-2, -1}, {-1.9, -1.1}, {-1.8, -1.2}};
  CHECK(track_level(clean, 0) == std::vector<double>{-2, -1.9, -1.8});
  const std::vector<std::vector<double>> crossing = {{-2, -1}, {-1.5, -1.45}};
  CHECK_THROWS_AS(track_level(crossing, 0), LevelCrossingError);
}

TEST_CASE("field-series fit in double precision") {
  const RadialLevel level(1, 0);
  FitOptions opt;
  opt.basis_size = 60;
  const auto fit = fit_field_series<double>(level, 1, default_field_grid(level), opt);
  CHECK(fit.coefficient(0) == doctest::Approx(-2).epsilon(1e-12));
  CHECK(std::abs(fit.coefficient(2) - 3.0 / 64) < 1e-6 * 3.0 / 64);
  CHECK(fit.condition > 1);
  CHECK(fit.energies.size() == 11);
  CHECK_THROWS_AS(fit_field_series<double>(level, 1, {Rational(1, 100), Rational(1, 50)}, opt), std::invalid_argument);
  FitOptions strict = opt;
  strict.max_condition = 1.5;
  CHECK_THROWS_AS(fit_field_series<double>(level, 1, default_field_grid(level), strict), IllConditionedFitError);
  const auto refitted = refit(fit, {0, 2, 4});
  CHECK(refitted.coefficients.size() == 3);
}

TEST_CASE("field grid") {
  const auto grid = default_field_grid(RadialLevel(1, 0));
  CHECK(grid.size() == 11);
  CHECK(grid.front().is_zero());
  CHECK(grid.back() == Rational(1, 20));
  CHECK(default_field_grid(RadialLevel(2, 0)).back() == Rational(1, 20) / Rational(81));
  CHECK_THROWS(default_field_grid(RadialLevel(1, 0), 3));
}
