#pragma once

// Weak-field expansion of the planar hydrogenic levels,
//
//   E = sum_k eps^(k) Z^{2-2k} b^k  Hartree,   b = B / B0,
//
// with exact rational coefficients eps^(0), eps^(1), eps^(2), eps^(4). Only even
// orders come from the diamagnetic b^2 r^2 / 8 term; eps^(1) is the exact
// paramagnetic shift.

#include <optional>
#include <string>

#include "zeeman2d/coulomb2d.hpp"
#include "zeeman2d/exactmath.hpp"

namespace zeeman2d {

Rational eps0(int n);
/// m_l / 2, or (m_l + 2 m_s) / 2 when the spin projection is given.
Rational eps1(int m_l, std::optional<SpinProjection> m_s = std::nullopt);

Rational eps2_closed(int n, int l);
/// (1/8) \int r^2 [P^(0)_{nl}]^2 dr at Z = 1, from the Laguerre moment formula.
Rational eps2_integral(int n, int l);
/// Closed form specialized to circular states l = n - 1.
Rational eps2_circular(int n);

Rational eps4_closed(int n, int l);
/// Finite Sturmian sum of the reduced Coulomb Green function:
///   -(1/64) { N_n sum_{n_r' != n_r} I_{n_r'}^2 / (n_r' - n_r) - (5/2) I_{n_r}^2 },
///   I_j = \int r^2 P^(0)_{nl} S_{j l}(E^(0)_n, r) dr,
/// where only |n_r' - n_r| <= 3 contributes.
Rational eps4_sturmian(int n, int l);
Rational eps4_circular(int n);

enum class Provenance { ClosedForm, SturmianSum };

struct CoefficientSet {
  int n = 1;
  int l = 0;
  Rational eps0;
  Rational eps2;
  Rational eps4;
  Provenance provenance = Provenance::ClosedForm;
};

/// Memoized per (n, l, provenance); safe to call concurrently.
const CoefficientSet& coefficients(int n, int l, Provenance provenance = Provenance::ClosedForm);

/// Highest power of b kept in an energy assembly. There is deliberately no
/// third order: the perturbation only carries b^2.
enum class Order { Zeroth = 0, First = 1, Second = 2, Fourth = 4 };

Order order_from_int(int order);

struct EnergyResult {
  QuantumState state;
  Rational Z;
  Rational b;
  Order order = Order::Fourth;
  bool spin_included = false;

  Rational e0;
  Rational e1;
  Rational e2;
  Rational e4;
  Rational total;

  /// Heuristic: |E^(4)| > |E^(2)| suggests the field is outside the range where
  /// the truncated asymptotic series is meaningful.
  bool perturbative_regime_exceeded = false;
  std::string truncation_note;
};

/// E^(k) = eps^(k) Z^{2-2k} b^k. Omitted orders contribute zero.
EnergyResult assemble_energy(const QuantumState& state, const Rational& Z, const Rational& b,
                             Order order = Order::Fourth, bool spin = false);

}  // namespace zeeman2d
