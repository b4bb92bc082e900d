#include "zeeman2d/perturb.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "zeeman2d/laguerre.hpp"

namespace zeeman2d {

namespace {

Rational half_odd(int n) { return Rational(2 * n - 1, 2); }

}  // namespace

Rational eps0(int n) {
  const RadialLevel level(n, 0);
  return energy0(level, 1);
}

Rational eps1(int m_l, std::optional<SpinProjection> m_s) {
  Rational twice = Rational(m_l);
  if (m_s) twice += Rational(2) * spin_value(*m_s);
  return twice / Rational(2);
}

Rational eps2_closed(int n, int l) {
  const RadialLevel level(n, l);
  const long N = n;
  const long L = l;
  return half_odd(n).pow(2) * Rational(5 * N * N - 5 * N - 3 * L * L + 3) / Rational(16);
}

Rational eps2_integral(int n, int l) {
  const RadialLevel level(n, l);
  const RadialFunction P = bound_radial(level, 1);
  // x = 2r/N maps \int r^2 P^2 dr to (N/2)^3 times the x^{2l+3} moment.
  const Rational expectation_r2 =
      P.norm_squared * (level.effective_n() / Rational(2)).pow(3) * moment3_diag(P.laguerre());
  return expectation_r2 / Rational(8);
}

Rational eps2_circular(int n) {
  const RadialLevel level(n, n - 1);
  return Rational(n) * Rational(2 * n + 1, 2) * half_odd(n).pow(2) / Rational(8);
}

Rational eps4_closed(int n, int l) {
  const RadialLevel level(n, l);
  const long N = n;
  const long L = l;
  const long poly = 143 * N * N * N * N - 286 * N * N * N - 90 * N * N * L * L + 582 * N * N + 90 * N * L * L -
                    439 * N - 21 * L * L * L * L - 138 * L * L + 159;
  return -half_odd(n).pow(6) * Rational(poly) / Rational(1024);
}

Rational eps4_sturmian(int n, int l) {
  const RadialLevel level(n, l);
  const int n_r = level.n_r();
  Rational off_diagonal;
  for (int j = std::max(0, n_r - 3); j <= n_r + 3; ++j) {
    if (j == n_r) continue;
    off_diagonal += r2_element(level, j, 1).square() / Rational(j - n_r);
  }
  const Rational diagonal = r2_element(level, n_r, 1).square();
  const Rational bracket = level.effective_n() * off_diagonal - Rational(5, 2) * diagonal;
  // (e^2 B^2 / 8m)^2 -> b^4 / 64 in atomic units.
  return -bracket / Rational(64);
}

Rational eps4_circular(int n) {
  const RadialLevel level(n, n - 1);
  const long N = n;
  return -Rational(n) * Rational(2 * n + 1, 2) * half_odd(n).pow(6) * Rational(16 * N * N + 26 * N + 11) /
         Rational(512);
}

const CoefficientSet& coefficients(int n, int l, Provenance provenance) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, Provenance>, std::unique_ptr<const CoefficientSet>> cache;

  const RadialLevel level(n, l);
  const auto key = std::make_tuple(n, l, provenance);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto set = std::make_unique<CoefficientSet>();
  set->n = n;
  set->l = l;
  set->provenance = provenance;
  set->eps0 = eps0(n);
  if (provenance == Provenance::ClosedForm) {
    set->eps2 = eps2_closed(n, l);
    set->eps4 = eps4_closed(n, l);
  } else {
    set->eps2 = eps2_integral(n, l);
    set->eps4 = eps4_sturmian(n, l);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(set));
  return *it->second;
}

Order order_from_int(int order) {
  switch (order) {
    case 0:
      return Order::Zeroth;
    case 1:
      return Order::First;
    case 2:
      return Order::Second;
    case 4:
      return Order::Fourth;
    default:
      throw std::invalid_argument("order must be one of 0, 1, 2, 4 (got " + std::to_string(order) + ")");
  }
}

EnergyResult assemble_energy(const QuantumState& state, const Rational& Z, const Rational& b, Order order,
                             bool spin) {
  if (Z.sign() <= 0) throw std::invalid_argument("nuclear charge Z must be positive");
  if (b.sign() < 0) throw std::invalid_argument("field strength B/B0 must be non-negative");
  if (spin && !state.m_s()) throw std::invalid_argument("spin requested but m_s not given");

  const CoefficientSet& c = coefficients(state.n(), state.l());
  const int k_max = static_cast<int>(order);
  EnergyResult r{state, Z, b, order, spin, {}, {}, {}, {}, {}, false, {}};

  r.e0 = c.eps0 * Z * Z;
  if (k_max >= 1) r.e1 = eps1(state.m_l(), spin ? state.m_s() : std::nullopt) * b;
  if (k_max >= 2) r.e2 = c.eps2 * Z.pow(-2) * b.pow(2);
  if (k_max >= 4) r.e4 = c.eps4 * Z.pow(-6) * b.pow(4);
  r.total = r.e0 + r.e1 + r.e2 + r.e4;

  r.perturbative_regime_exceeded = k_max >= 4 && r.e4.abs() > r.e2.abs();
  switch (order) {
    case Order::Zeroth:
      r.truncation_note = "O(b)";
      break;
    case Order::First:
      r.truncation_note = "O(Z^-2 b^2)";
      break;
    case Order::Second:
      r.truncation_note = "O(Z^-6 b^4)";
      break;
    case Order::Fourth:
      r.truncation_note = "O(Z^-10 b^6)";
      break;
  }
  return r;
}

}  // namespace zeeman2d
