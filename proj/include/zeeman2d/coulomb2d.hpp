#pragma once

// Planar Coulomb bound states and discrete radial Coulomb Sturmians.
//
// Units: hbar = m = e = 4 pi eps0 = 1 throughout, so lengths are in Bohr radii,
// energies in Hartree and fields in units of B0 = hbar / (e a0^2).

#include <optional>

#include "zeeman2d/exactmath.hpp"
#include "zeeman2d/laguerre.hpp"
#include "zeeman2d/scalar.hpp"

namespace zeeman2d {

/// Atomic unit of magnetic induction in tesla (CODATA 2018).
inline constexpr double kAtomicUnitOfInductionTesla = 2.3505175675e5;

/// Radial channel (n, l) with 0 <= l <= n - 1.
class RadialLevel {
 public:
  RadialLevel(int n, int l);

  int n() const { return n_; }
  int l() const { return l_; }
  int n_r() const { return n_ - l_ - 1; }
  /// Effective principal number N_n = n - 1/2.
  Rational effective_n() const { return Rational(2 * n_ - 1, 2); }

  friend bool operator==(const RadialLevel&, const RadialLevel&) = default;

 private:
  int n_;
  int l_;
};

enum class SpinProjection { Down, Up };

inline Rational spin_value(SpinProjection s) { return s == SpinProjection::Up ? Rational(1, 2) : Rational(-1, 2); }

/// Full label (n, l, m_l[, m_s]) of a planar hydrogenic level; |m_l| = l.
class QuantumState {
 public:
  QuantumState(int n, int l, int m_l, std::optional<SpinProjection> m_s = std::nullopt);

  const RadialLevel& level() const { return level_; }
  int n() const { return level_.n(); }
  int l() const { return level_.l(); }
  int n_r() const { return level_.n_r(); }
  int m_l() const { return m_l_; }
  const std::optional<SpinProjection>& m_s() const { return m_s_; }
  Rational effective_n() const { return level_.effective_n(); }

 private:
  RadialLevel level_;
  int m_l_;
  std::optional<SpinProjection> m_s_;
};

/// a * sqrt(radicand), with both parts exact. Used for integrals whose
/// normalization constants are square roots of rationals.
struct SurdValue {
  Rational factor;
  Rational radicand = 1;

  Rational square() const { return factor * factor * radicand; }
  int sign() const { return radicand.is_zero() ? 0 : factor.sign(); }
  template <typename Scalar = double>
  Scalar value() const {
    using std::sqrt;
    return to_scalar<Scalar>(factor) * sqrt(to_scalar<Scalar>(radicand));
  }
};

/// f(r) = sqrt(norm_squared) x^{l+1/2} e^{-x/2} L_{n_r}^{(2l)}(x),  x = 2 k r,
/// with k^2 = scale_squared. Bound functions are normalized as
/// \int f^2 dr = 1; Sturmians as \int (Z/r) f^2 dr = 1.
struct RadialFunction {
  enum class Kind { Bound, Sturmian };

  Kind kind = Kind::Bound;
  int l = 0;
  int n_r = 0;
  Rational scale_squared;
  Rational norm_squared;
  RationalPolynomial poly;

  LaguerreSpec laguerre() const { return {n_r, 2 * l}; }
  std::optional<Rational> exact_scale() const;

  template <typename Scalar>
  Scalar scale() const {
    using std::sqrt;
    return sqrt(to_scalar<Scalar>(scale_squared));
  }

  /// f(r) without the e^{-x/2} factor, as a function of x.
  template <typename Scalar>
  Scalar unweighted_at_x(const Scalar& x) const;
  /// r df/dr without the e^{-x/2} factor, as a function of x.
  template <typename Scalar>
  Scalar unweighted_r_derivative_at_x(const Scalar& x) const;

  template <typename Scalar>
  Scalar operator()(const Scalar& r) const {
    using std::exp;
    const Scalar x = 2 * scale<Scalar>() * r;
    return unweighted_at_x(x) * exp(-x / 2);
  }
  template <typename Scalar>
  Scalar r_derivative(const Scalar& r) const {
    using std::exp;
    const Scalar x = 2 * scale<Scalar>() * r;
    return unweighted_r_derivative_at_x(x) * exp(-x / 2);
  }
};

/// L_k^(alpha)(x) by the three-term recurrence.
template <typename Scalar>
Scalar laguerre_value(int k, int alpha, const Scalar& x) {
  if (k < 0) return Scalar(0);
  Scalar prev(1);
  if (k == 0) return prev;
  Scalar cur = Scalar(1 + alpha) - x;
  for (int j = 1; j < k; ++j) {
    Scalar next = ((Scalar(2 * j + 1 + alpha) - x) * cur - Scalar(j + alpha) * prev) / Scalar(j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

template <typename Scalar>
Scalar RadialFunction::unweighted_at_x(const Scalar& x) const {
  using std::pow;
  using std::sqrt;
  return sqrt(to_scalar<Scalar>(norm_squared)) * pow(x, Scalar(l) + Scalar(0.5)) *
         laguerre_value(n_r, 2 * l, x);
}

template <typename Scalar>
Scalar RadialFunction::unweighted_r_derivative_at_x(const Scalar& x) const {
  using std::pow;
  using std::sqrt;
  // x d/dx [x^{l+1/2} e^{-x/2} L(x)] with dL_k^(a)/dx = -L_{k-1}^(a+1).
  const Scalar value = laguerre_value(n_r, 2 * l, x);
  const Scalar slope = -laguerre_value(n_r - 1, 2 * l + 1, x);
  return sqrt(to_scalar<Scalar>(norm_squared)) * pow(x, Scalar(l) + Scalar(0.5)) *
         ((Scalar(l) + Scalar(0.5) - x / 2) * value + x * slope);
}

/// E^(0)_n = -Z^2 / (2 N_n^2).
Rational energy0(const RadialLevel& level, const Rational& Z);
inline Rational energy0(const QuantumState& state, const Rational& Z) { return energy0(state.level(), Z); }

RadialFunction bound_radial(const RadialLevel& level, const Rational& Z);

/// Sturmian S_{n_r l}(E, r); requires E < 0.
RadialFunction sturmian(int n_r, int l, const Rational& E, const Rational& Z);

struct SturmianEigenvalue {
  Rational mu_squared;
  std::optional<Rational> exact;  // present when mu is rational
  double value = 0;
};

/// mu_{n_r l}(E) = (n_r + l + 1/2) k / Z with k = sqrt(-2E).
SturmianEigenvalue sturmian_mu(int n_r, int l, const Rational& E, const Rational& Z);

/// \int_0^\infty r^power f(r) g(r) dr for two radial functions of the same l
/// and the same exponential scale (exact, via the Laguerre cross integral).
SurdValue radial_moment(const RadialFunction& f, const RadialFunction& g, int power);

/// \int r^2 P^(0)_{nl}(r) S_{n_r' l}(E^(0)_n, r) dr, evaluated with the seven-term
/// band formula. Zero for |n_r' - n_r| > 3.
SurdValue r2_element(const RadialLevel& level, int n_r_prime, const Rational& Z);

}  // namespace zeeman2d
