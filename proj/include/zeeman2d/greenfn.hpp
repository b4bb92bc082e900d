#pragma once

// Truncated Sturmian expansions of the radial Coulomb Green function
//
//   G_l(E; r, r') = sum_j S_j(E, r) S_j(E, r') / (mu_j(E) - 1)
//
// and of the reduced Green function at the level E^(0)_n (pole removed):
//
//   G~_nl(r, r') = N_n sum_{j != n_r} S_j S_j' / (j - n_r) + (1/2) S S'
//                  + r dS/dr S' + S r' dS'/dr'            (S = S_{n_r}).

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeeman2d/coulomb2d.hpp"
#include "zeeman2d/quadrature.hpp"

namespace zeeman2d {

struct GreenEvalConfig {
  enum class Kind { Plain, Reduced };

  Kind kind = Kind::Plain;
  int l = 0;
  Rational Z = 1;
  Rational energy;  // Plain: E < 0. Reduced: set to E^(0)_n.
  int level_n = 0;  // Reduced only.
  int truncation = 20;
  int quadrature_points = 200;

  static GreenEvalConfig plain(int l, Rational Z, Rational E, int truncation);
  static GreenEvalConfig reduced(int n, int l, Rational Z, int truncation);
};

struct PoleError : std::domain_error {
  PoleError(int n_r, const std::string& what) : std::domain_error(what), resonant_n_r(n_r) {}
  int resonant_n_r;
};

/// Plain Green function G_l(E; r, r'); exposes the expansion both in r and in
/// the scaled variable x = 2 k r with the factor e^{-(x+x')/2} removed.
template <typename Scalar>
class SturmianGreenFunction {
 public:
  explicit SturmianGreenFunction(const GreenEvalConfig& cfg) : k_() {
    using std::sqrt;
    if (cfg.kind != GreenEvalConfig::Kind::Plain) throw std::invalid_argument("expected a plain Green config");
    if (cfg.truncation < 1) throw std::invalid_argument("truncation must be >= 1");
    for (int j = 0; j < cfg.truncation; ++j) {
      const SturmianEigenvalue mu = sturmian_mu(j, cfg.l, cfg.energy, cfg.Z);
      // mu = 1 is decided exactly: mu^2 == 1.
      if (mu.mu_squared == Rational(1)) {
        throw PoleError(j, "Green function pole: E coincides with the Coulomb level of n_r=" + std::to_string(j) +
                               " (mu=1)");
      }
      terms_.push_back(sturmian(j, cfg.l, cfg.energy, cfg.Z));
      denominators_.push_back(sqrt(to_scalar<Scalar>(mu.mu_squared)) - Scalar(1));
    }
    k_ = terms_.front().template scale<Scalar>();
  }

  Scalar scale() const { return k_; }

  Scalar unweighted(const Scalar& x, const Scalar& xp) const {
    Scalar sum(0);
    for (std::size_t j = 0; j < terms_.size(); ++j) {
      sum += terms_[j].unweighted_at_x(x) * terms_[j].unweighted_at_x(xp) / denominators_[j];
    }
    return sum;
  }

  Scalar operator()(const Scalar& r, const Scalar& rp) const {
    using std::exp;
    const Scalar x = 2 * k_ * r;
    const Scalar xp = 2 * k_ * rp;
    return unweighted(x, xp) * exp(-(x + xp) / 2);
  }

  const std::vector<RadialFunction>& sturmians() const { return terms_; }
  const std::vector<Scalar>& denominators() const { return denominators_; }

 private:
  std::vector<RadialFunction> terms_;
  std::vector<Scalar> denominators_;
  Scalar k_;
};

/// Reduced Green function G~_nl(r, r') at E^(0)_n.
template <typename Scalar>
class ReducedGreenFunction {
 public:
  explicit ReducedGreenFunction(const GreenEvalConfig& cfg)
      : level_(cfg.level_n, cfg.l), N_(to_scalar<Scalar>(level_.effective_n())) {
    if (cfg.kind != GreenEvalConfig::Kind::Reduced) throw std::invalid_argument("expected a reduced Green config");
    if (cfg.truncation < level_.n_r() + 4) {
      throw std::invalid_argument("reduced Green function truncation must be >= n_r + 4 (n_r=" +
                                  std::to_string(level_.n_r()) + ", truncation=" + std::to_string(cfg.truncation) +
                                  ")");
    }
    const Rational E = energy0(level_, cfg.Z);
    for (int j = 0; j < cfg.truncation; ++j) terms_.push_back(sturmian(j, cfg.l, E, cfg.Z));
    k_ = terms_.front().template scale<Scalar>();
  }

  const RadialLevel& level() const { return level_; }
  Scalar scale() const { return k_; }

  Scalar unweighted(const Scalar& x, const Scalar& xp) const {
    const int n_r = level_.n_r();
    Scalar regular(0);
    for (int j = 0; j < static_cast<int>(terms_.size()); ++j) {
      if (j == n_r) continue;
      const auto& S = terms_[static_cast<std::size_t>(j)];
      regular += S.unweighted_at_x(x) * S.unweighted_at_x(xp) / Scalar(j - n_r);
    }
    const auto& S = terms_[static_cast<std::size_t>(n_r)];
    const Scalar s = S.unweighted_at_x(x);
    const Scalar sp = S.unweighted_at_x(xp);
    return N_ * regular + s * sp / 2 + S.unweighted_r_derivative_at_x(x) * sp +
           s * S.unweighted_r_derivative_at_x(xp);
  }

  Scalar operator()(const Scalar& r, const Scalar& rp) const {
    using std::exp;
    const Scalar x = 2 * k_ * r;
    const Scalar xp = 2 * k_ * rp;
    return unweighted(x, xp) * exp(-(x + xp) / 2);
  }

  const std::vector<RadialFunction>& sturmians() const { return terms_; }

 private:
  RadialLevel level_;
  Scalar N_;
  Scalar k_;
  std::vector<RadialFunction> terms_;
};

template <typename Scalar = double>
Scalar green_eval(const GreenEvalConfig& cfg, const Scalar& r, const Scalar& rp) {
  return SturmianGreenFunction<Scalar>(cfg)(r, rp);
}

template <typename Scalar = double>
Scalar green_reduced_eval(const GreenEvalConfig& cfg, const Scalar& r, const Scalar& rp) {
  return ReducedGreenFunction<Scalar>(cfg)(r, rp);
}

/// -(1/64) \int\int r^2 P(r) G~(r, r') r'^2 P(r') dr dr' at Z = 1, by the tensor
/// product of a matched Gauss-Laguerre rule. Floating counterpart of eps4.
template <typename Scalar = double>
Scalar eps4_green_quadrature(int n, int l, int truncation, int points = 200) {
  using std::pow;
  GreenEvalConfig cfg = GreenEvalConfig::reduced(n, l, 1, truncation);
  cfg.quadrature_points = points;
  const ReducedGreenFunction<Scalar> green(cfg);
  const RadialFunction P = bound_radial(green.level(), 1);
  const Scalar k = green.scale();
  const int alpha = 2 * l + 1;
  const auto rule = gauss_laguerre<Scalar>(points, alpha);

  // In x = 2kr every factor is x^{l+1/2} e^{-x/2} times a polynomial; the
  // rule absorbs x^{2l+1} e^{-x} per variable.
  std::vector<Scalar> outer(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Scalar& x = rule.nodes[i];
    outer[i] = x * x * P.unweighted_at_x(x) / pow(x, Scalar(alpha));
  }
  Scalar sum(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    if (rule.weights[i] == 0) continue;
    Scalar inner(0);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      if (rule.weights[j] == 0) continue;
      inner += rule.weights[j] * green.unweighted(rule.nodes[i], rule.nodes[j]) * outer[j];
    }
    sum += rule.weights[i] * outer[i] * inner;
  }
  // r^2 dr r'^2 dr' = (x x')^2 dx dx' / (2k)^6
  const Scalar two_k = 2 * k;
  return -sum / pow(two_k, 6) / 64;
}

}  // namespace zeeman2d
