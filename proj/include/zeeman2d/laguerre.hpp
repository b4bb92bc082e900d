#pragma once

#include "zeeman2d/exactmath.hpp"

namespace zeeman2d {

/// Generalized Laguerre polynomial L_k^(alpha) with integer alpha >= 0.
struct LaguerreSpec {
  int k = 0;
  int alpha = 0;

  LaguerreSpec() = default;
  LaguerreSpec(int degree, int superscript);
  friend bool operator==(const LaguerreSpec&, const LaguerreSpec&) = default;
};

/// Coefficients c_j = (-1)^j C(k+alpha, k-j) / j!.
RationalPolynomial laguerre_coeffs(const LaguerreSpec& spec);

/// Gamma(m+1) for integer m >= 0, as an exact rational.
Rational gamma_int(int argument);

// Exact closed forms for
//   I(gamma; a, b) = \int_0^\infty x^gamma e^{-x} L_{a.k}^{(a.alpha)}(x) L_{b.k}^{(b.alpha)}(x) dx
// restricted to integer gamma >= 0.

/// Finite-sum formula with generalized binomials (C(gamma-alpha, k-m) may have a
/// negative upper argument).
Rational cross_integral(int gamma, const LaguerreSpec& a, const LaguerreSpec& b);

/// Diagonal x^{alpha+3} moment of [L_k^(alpha)]^2.
Rational moment3_diag(const LaguerreSpec& spec);

/// Off-diagonal x^{alpha+3} moment of L_k^(alpha) L_{k'}^(alpha). Seven-term band:
/// vanishes whenever |k - k'| > 3.
Rational moment3_band(int k, int kp, int alpha);

/// The seven-term formula evaluated literally for the given ordering (both the
/// k' < k and k' > k branches). moment3_band symmetrizes onto this.
Rational moment3_band_as_printed(int k, int kp, int alpha);

/// Independent route: expand both polynomials and integrate term by term with
/// \int x^m e^{-x} dx = m!.
Rational brute_force_integral(int gamma, const LaguerreSpec& a, const LaguerreSpec& b);

}  // namespace zeeman2d
