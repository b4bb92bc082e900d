#pragma once

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "zeeman2d/scalar.hpp"

namespace zeeman2d {

/// N-point generalized Gauss-Laguerre rule for \int_0^\infty x^alpha e^{-x} g(x) dx;
/// exact for polynomial g of degree <= 2N - 1.
template <typename Scalar>
struct GaussLaguerreRule {
  int alpha = 0;
  std::vector<Scalar> nodes;
  std::vector<Scalar> weights;

  template <typename F>
  Scalar integrate(F&& g) const {
    Scalar sum(0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (weights[i] != 0) sum += weights[i] * g(nodes[i]);
    }
    return sum;
  }
};

/// Golub-Welsch nodes, polished by Newton iteration on L_N^(alpha). Weights are
/// 1 / sum_j p_j(x)^2 over the orthonormal polynomials, accumulated with
/// running rescaling so that weights of the outermost nodes underflow
/// gracefully instead of being swamped by eigenvector round-off.
template <typename Scalar>
GaussLaguerreRule<Scalar> gauss_laguerre(int points, int alpha) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::sqrt;
  if (points < 1) throw std::invalid_argument("gauss_laguerre: need at least one node");
  if (alpha < 0) throw std::invalid_argument("gauss_laguerre: alpha must be >= 0");

  const int n = points;
  VectorX<Scalar> diag(n);
  VectorX<Scalar> sub(std::max(n - 1, 1));
  for (int j = 0; j < n; ++j) diag(j) = Scalar(2 * j + alpha + 1);
  for (int j = 1; j < n; ++j) sub(j - 1) = sqrt(Scalar(j) * Scalar(j + alpha));
  if (n == 1) sub.resize(0);

  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_laguerre: tridiagonal eigensolver failed");

  GaussLaguerreRule<Scalar> rule;
  rule.alpha = alpha;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  const Scalar big(1e60);
  const Scalar log_big = log(big);
  const Scalar log_mu0 = log(to_scalar<Scalar>(Rational(factorial(static_cast<unsigned long>(alpha)))));

  for (int i = 0; i < n; ++i) {
    Scalar x = solver.eigenvalues()(i);
    for (int iter = 0; iter < 8; ++iter) {
      // L_N and L_{N-1}; the ratio is invariant under rescaling.
      Scalar prev(1), cur = Scalar(1 + alpha) - x;
      for (int j = 1; j < n; ++j) {
        Scalar next = ((Scalar(2 * j + 1 + alpha) - x) * cur - Scalar(j + alpha) * prev) / Scalar(j + 1);
        prev = cur;
        cur = next;
        if (abs(cur) > big) {
          cur /= big;
          prev /= big;
        }
      }
      const Scalar L_n = cur;
      const Scalar L_nm1 = prev;
      const Scalar derivative = (Scalar(n) * L_n - Scalar(n + alpha) * L_nm1) / x;
      const Scalar step = L_n / derivative;
      x -= step;
      if (abs(step) <= 4 * Eigen::NumTraits<Scalar>::epsilon() * abs(x)) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;

    // Orthonormal recurrence: p_0 = 1/sqrt(mu0),
    // b_{j+1} p_{j+1} = (x - a_j) p_j - b_j p_{j-1}, a_j = 2j+alpha+1, b_j = sqrt(j(j+alpha)).
    Scalar log_scale(0);
    Scalar p_prev(0);
    Scalar p_cur(1);  // times exp(-log_mu0/2), folded in at the end
    Scalar sum = p_cur * p_cur;
    for (int j = 0; j + 1 < n; ++j) {
      const Scalar b_next = sqrt(Scalar(j + 1) * Scalar(j + 1 + alpha));
      const Scalar b_cur = j == 0 ? Scalar(0) : sqrt(Scalar(j) * Scalar(j + alpha));
      Scalar p_next = ((x - Scalar(2 * j + alpha + 1)) * p_cur - b_cur * p_prev) / b_next;
      p_prev = p_cur;
      p_cur = p_next;
      sum += p_cur * p_cur;
      if (abs(p_cur) > big) {
        p_cur /= big;
        p_prev /= big;
        sum /= big * big;
        log_scale += log_big;
      }
    }
    // w = mu0 / (sum * exp(2 log_scale))
    rule.weights[static_cast<std::size_t>(i)] = exp(log_mu0 - 2 * log_scale) / sum;
  }
  return rule;
}

}  // namespace zeeman2d
