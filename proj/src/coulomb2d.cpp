#include "zeeman2d/coulomb2d.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace zeeman2d {

RadialLevel::RadialLevel(int n, int l) : n_(n), l_(l) {
  if (n < 1) throw std::invalid_argument("principal quantum number must satisfy n >= 1 (got " + std::to_string(n) + ")");
  if (l < 0 || l > n - 1) {
    throw std::invalid_argument("l must satisfy 0 <= l <= n-1 (got n=" + std::to_string(n) + ", l=" +
                                std::to_string(l) + ")");
  }
}

QuantumState::QuantumState(int n, int l, int m_l, std::optional<SpinProjection> m_s)
    : level_(n, l), m_l_(m_l), m_s_(m_s) {
  if (std::abs(m_l) != l) {
    throw std::invalid_argument("|m_l| must equal l (got l=" + std::to_string(l) + ", m_l=" + std::to_string(m_l) +
                                ")");
  }
}

std::optional<Rational> RadialFunction::exact_scale() const {
  if (!scale_squared.is_perfect_square()) return std::nullopt;
  return scale_squared.sqrt_exact();
}

Rational energy0(const RadialLevel& level, const Rational& Z) {
  const Rational N = level.effective_n();
  return -(Z * Z) / (Rational(2) * N * N);
}

namespace {

void require_positive_charge(const Rational& Z) {
  if (Z.sign() <= 0) throw std::invalid_argument("nuclear charge Z must be positive");
}

Rational factorial_ratio(int n_r, int l) {
  // n_r! / (n_r + 2l)!
  return Rational(factorial(static_cast<unsigned long>(n_r)), factorial(static_cast<unsigned long>(n_r + 2 * l)));
}

}  // namespace

RadialFunction bound_radial(const RadialLevel& level, const Rational& Z) {
  require_positive_charge(Z);
  const Rational N = level.effective_n();
  RadialFunction f;
  f.kind = RadialFunction::Kind::Bound;
  f.l = level.l();
  f.n_r = level.n_r();
  f.scale_squared = (Z / N).pow(2);
  f.norm_squared = Z * factorial_ratio(f.n_r, f.l) / (N * N);
  f.poly = laguerre_coeffs(f.laguerre());
  return f;
}

RadialFunction sturmian(int n_r, int l, const Rational& E, const Rational& Z) {
  require_positive_charge(Z);
  if (n_r < 0 || l < 0) throw std::invalid_argument("sturmian: n_r and l must be non-negative");
  if (E.sign() >= 0) throw std::domain_error("sturmian: energy must be negative (got " + E.to_string() + ")");
  RadialFunction f;
  f.kind = RadialFunction::Kind::Sturmian;
  f.l = l;
  f.n_r = n_r;
  f.scale_squared = Rational(-2) * E;
  f.norm_squared = factorial_ratio(n_r, l) / Z;
  f.poly = laguerre_coeffs(f.laguerre());
  return f;
}

SturmianEigenvalue sturmian_mu(int n_r, int l, const Rational& E, const Rational& Z) {
  require_positive_charge(Z);
  if (E.sign() >= 0) throw std::domain_error("sturmian_mu: energy must be negative");
  const Rational nu(2 * (n_r + l) + 1, 2);
  SturmianEigenvalue mu;
  mu.mu_squared = nu * nu * Rational(-2) * E / (Z * Z);
  if (mu.mu_squared.is_perfect_square()) mu.exact = mu.mu_squared.sqrt_exact();
  mu.value = std::sqrt(mu.mu_squared.to_double());
  return mu;
}

SurdValue radial_moment(const RadialFunction& f, const RadialFunction& g, int power) {
  if (f.l != g.l) throw std::invalid_argument("radial_moment: functions belong to different l channels");
  if (f.scale_squared != g.scale_squared) {
    throw std::invalid_argument("radial_moment: functions have different exponential scales");
  }
  const int gamma = 2 * f.l + 1 + power;
  // r^power dr = x^power dx / (2k)^{power+1}
  const Rational four_k2 = Rational(4) * f.scale_squared;
  SurdValue out;
  out.factor = cross_integral(gamma, f.laguerre(), g.laguerre());
  out.radicand = f.norm_squared * g.norm_squared * four_k2.pow(-(power + 1));
  return out;
}

SurdValue r2_element(const RadialLevel& level, int n_r_prime, const Rational& Z) {
  require_positive_charge(Z);
  if (n_r_prime < 0) throw std::invalid_argument("r2_element: n_r' must be non-negative");
  const RadialFunction P = bound_radial(level, Z);
  const RadialFunction S = sturmian(n_r_prime, level.l(), energy0(level, Z), Z);
  // Both factors decay with the same k = Z/N_n, so x = 2Zr/N_n maps the
  // integral onto the x^{2l+3} Laguerre moment with prefactor (N_n/2Z)^3.
  const Rational half_length = level.effective_n() / (Rational(2) * Z);
  SurdValue out;
  out.factor = half_length.pow(3) * moment3_band(level.n_r(), n_r_prime, 2 * level.l());
  out.radicand = P.norm_squared * S.norm_squared;
  return out;
}

}  // namespace zeeman2d
