#include <doctest.h>

#include "zeeman2d/laguerre.hpp"

using namespace zeeman2d;

TEST_CASE("coefficients follow the three-term recurrence") {
  const RationalPolynomial x = RationalPolynomial::monomial(1);
  for (int alpha = 0; alpha <= 8; ++alpha) {
    CHECK(laguerre_coeffs({0, alpha}) == RationalPolynomial({Rational(1)}));
    CHECK(laguerre_coeffs({1, alpha}) == RationalPolynomial({Rational(1 + alpha), Rational(-1)}));
    for (int k = 1; k < 12; ++k) {
      const RationalPolynomial lhs = laguerre_coeffs({k + 1, alpha}).scaled(Rational(k + 1));
      const RationalPolynomial rhs =
          (RationalPolynomial({Rational(2 * k + 1 + alpha)}) - x) * laguerre_coeffs({k, alpha}) -
          laguerre_coeffs({k - 1, alpha}).scaled(Rational(k + alpha));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("derivative identity") {
  for (int alpha = 0; alpha <= 6; ++alpha) {
    for (int k = 1; k <= 10; ++k) {
      CHECK(laguerre_coeffs({k, alpha}).derivative() == laguerre_coeffs({k - 1, alpha + 1}).scaled(Rational(-1)));
    }
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(LaguerreSpec(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(LaguerreSpec(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(cross_integral(-1, {0, 0}, {0, 0}), std::domain_error);
  CHECK_THROWS(gamma_int(0));
}

TEST_CASE("gamma and small integrals") {
  CHECK(gamma_int(1) == Rational(1));
  CHECK(gamma_int(6) == Rational(120));
  CHECK(cross_integral(0, {0, 0}, {0, 0}) == Rational(1));
  CHECK(moment3_diag({0, 1}) == Rational(24));
  CHECK(moment3_diag({1, 0}) == Rational(78));
  CHECK(moment3_band(2, 1, 2) == Rational(-3240));
  CHECK(brute_force_integral(3, {0, 0}, {3, 0}) == Rational(-6));
  CHECK(brute_force_integral(1, {1, 0}, {0, 0}) == Rational(-1));
}

TEST_CASE("orthogonality at gamma = alpha") {
  for (int alpha = 0; alpha <= 8; ++alpha) {
    for (int k = 0; k <= 10; ++k) {
      for (int kp = 0; kp <= 10; ++kp) {
        const Rational v = cross_integral(alpha, {k, alpha}, {kp, alpha});
        if (k != kp) {
          CHECK(v.is_zero());
        } else {
          CHECK(v == Rational(factorial(static_cast<unsigned long>(k + alpha))) /
                         Rational(factorial(static_cast<unsigned long>(k))));
        }
      }
    }
  }
}

TEST_CASE("closed forms agree with brute force over the full sweep") {
  for (int alpha = 0; alpha <= 8; ++alpha) {
    for (int k = 0; k <= 10; ++k) {
      CHECK(moment3_diag({k, alpha}) == brute_force_integral(alpha + 3, {k, alpha}, {k, alpha}));
      for (int kp = 0; kp <= 10; ++kp) {
        const Rational brute = brute_force_integral(alpha + 3, {k, alpha}, {kp, alpha});
        CHECK(moment3_band(k, kp, alpha) == brute);
        if (std::abs(k - kp) > 3) CHECK(brute.is_zero());
        if (k <= kp) CHECK(moment3_band_as_printed(k, kp, alpha) == brute);
        for (int gamma = 0; gamma <= 12; ++gamma) {
          CHECK(cross_integral(gamma, {k, alpha}, {kp, alpha}) == brute_force_integral(gamma, {k, alpha}, {kp, alpha}));
        }
      }
    }
  }
}

TEST_CASE("cross integral with mixed orders is symmetric") {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int gamma = 0; gamma <= 6; ++gamma) {
        CHECK(cross_integral(gamma, {3, a}, {2, b}) == cross_integral(gamma, {2, b}, {3, a}));
        CHECK(cross_integral(gamma, {3, a}, {2, b}) == brute_force_integral(gamma, {3, a}, {2, b}));
      }
    }
  }
}
