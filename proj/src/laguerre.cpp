#include "zeeman2d/laguerre.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace zeeman2d {

LaguerreSpec::LaguerreSpec(int degree, int superscript) : k(degree), alpha(superscript) {
  if (k < 0 || alpha < 0) {
    throw std::invalid_argument("LaguerreSpec requires k >= 0 and alpha >= 0 (got k=" + std::to_string(k) +
                                ", alpha=" + std::to_string(alpha) + ")");
  }
}

Rational gamma_int(int argument) {
  if (argument < 1) throw std::domain_error("gamma_int: argument must be a positive integer");
  return Rational(factorial(static_cast<unsigned long>(argument - 1)));
}

RationalPolynomial laguerre_coeffs(const LaguerreSpec& spec) {
  std::vector<Rational> c(static_cast<std::size_t>(spec.k) + 1);
  for (int j = 0; j <= spec.k; ++j) {
    Rational term = gen_binomial(spec.k + spec.alpha, static_cast<unsigned long>(spec.k - j)) /
                    Rational(factorial(static_cast<unsigned long>(j)));
    c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? term : -term;
  }
  return RationalPolynomial(std::move(c));
}

Rational cross_integral(int gamma, const LaguerreSpec& a, const LaguerreSpec& b) {
  if (gamma < 0) {
    throw std::domain_error("cross_integral: gamma must be >= 0 (got " + std::to_string(gamma) + ")");
  }
  Rational sum;
  for (int m = 0; m <= std::min(a.k, b.k); ++m) {
    const Rational weight = Rational(factorial(static_cast<unsigned long>(m + gamma))) /
                            Rational(factorial(static_cast<unsigned long>(m)));
    sum += weight * gen_binomial(gamma - a.alpha, static_cast<unsigned long>(a.k - m)) *
           gen_binomial(gamma - b.alpha, static_cast<unsigned long>(b.k - m));
  }
  return ((a.k + b.k) % 2 == 0) ? sum : -sum;
}

Rational moment3_diag(const LaguerreSpec& spec) {
  const long k = spec.k;
  const long a = spec.alpha;
  const Rational poly = Rational((2 * k + a + 1) * (10 * k * k + 10 * k + 10 * a * k + a * a + 5 * a + 6));
  return poly * gamma_int(spec.k + spec.alpha + 1) / Rational(factorial(static_cast<unsigned long>(k)));
}

Rational moment3_band_as_printed(int k, int kp, int alpha) {
  if (k < 0 || kp < 0 || alpha < 0) throw std::invalid_argument("moment3_band: negative index");
  const long K = k;
  const long a = alpha;
  // Terms whose 1/(k-j)! has a negative argument are absent.
  auto inv_fact = [](int m) { return Rational(1) / Rational(factorial(static_cast<unsigned long>(m))); };
  switch (kp - k) {
    case -3:
      return k >= 3 ? -gamma_int(k + alpha + 1) * inv_fact(k - 3) : Rational(0);
    case -2:
      return k >= 2 ? Rational(3 * (2 * K + a - 1)) * gamma_int(k + alpha + 1) * inv_fact(k - 2) : Rational(0);
    case -1:
      return k >= 1 ? Rational(-3 * (5 * K * K + 5 * a * K + a * a + 1)) * gamma_int(k + alpha + 1) * inv_fact(k - 1)
                    : Rational(0);
    case 0:
      return Rational((2 * K + a + 1) * (10 * K * K + 10 * K + 10 * a * K + a * a + 5 * a + 6)) *
             gamma_int(k + alpha + 1) * inv_fact(k);
    case 1:
      return Rational(-3 * (5 * K * K + 10 * K + 5 * a * K + a * a + 5 * a + 6)) * gamma_int(k + alpha + 2) *
             inv_fact(k);
    case 2:
      return Rational(3 * (2 * K + a + 3)) * gamma_int(k + alpha + 3) * inv_fact(k);
    case 3:
      return -gamma_int(k + alpha + 4) * inv_fact(k);
    default:
      return 0;
  }
}

Rational moment3_band(int k, int kp, int alpha) {
  // The integral is symmetric in (k, k'); evaluate on the k' >= k branches.
  return moment3_band_as_printed(std::min(k, kp), std::max(k, kp), alpha);
}

Rational brute_force_integral(int gamma, const LaguerreSpec& a, const LaguerreSpec& b) {
  if (gamma < 0) throw std::domain_error("brute_force_integral: gamma must be >= 0");
  const RationalPolynomial product = laguerre_coeffs(a) * laguerre_coeffs(b);
  Rational sum;
  for (int m = 0; m <= product.degree(); ++m) {
    sum += product.coeff(m) * Rational(factorial(static_cast<unsigned long>(m + gamma)));
  }
  return sum;
}

}  // namespace zeeman2d
