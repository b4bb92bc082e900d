#pragma once

// Variational oracle for the full finite-field radial problem
//
//   [-1/2 d^2/dr^2 + (l^2 - 1/4)/(2 r^2) - Z/r + b^2 r^2 / 8] P = E P
//
// in a truncated basis of Coulomb Sturmians S_j(E*, r), j < M. The Sturmian
// equation turns kinetic + Coulomb matrix elements into (mu_j - 1) delta_ij +
// E* O_ij, so every entry is an exact rational (up to the diagonal basis
// normalization) before it is rounded once to Scalar.

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "zeeman2d/coulomb2d.hpp"
#include "zeeman2d/scalar.hpp"

namespace zeeman2d {

struct GalerkinConfig {
  int l = 0;
  Rational Z = 1;
  Rational b = 0;
  int basis_size = 120;
  Rational reference_energy = Rational(-2);
  int target_n_r = 0;

  /// Anchors the basis at E* = E^(0)_n and tracks the n_r-th eigenvalue.
  static GalerkinConfig for_level(const RadialLevel& level, Rational Z = 1, Rational b = 0, int basis_size = 120);
  void validate() const;
};

/// Exact pieces of the Galerkin pencil in the unnormalized basis
/// phi_j = x^{l+1/2} e^{-x/2} L_j^(2l)(x), x = 2 k r, k = sqrt(-2 E*):
///   S_j = sqrt(norm[j]) phi_j,
///   \int phi_i phi_j dr        = overlap band (|i-j| <= 1),
///   \int r^2 phi_i phi_j dr    = r2 band (|i-j| <= 3),
///   mu_j - 1                   = shifted_mu[j].
struct GalerkinExactBlocks {
  int l = 0;
  int size = 0;
  Rational Z;
  Rational reference_energy;
  Rational k;
  std::vector<Rational> norm;
  std::vector<Rational> shifted_mu;
  std::vector<std::array<Rational, 2>> overlap;  // (j, j), (j, j+1)
  std::vector<std::array<Rational, 4>> r2;       // (j, j+d), d = 0..3

  Rational overlap_entry(int i, int j) const;
  Rational r2_entry(int i, int j) const;
};

GalerkinExactBlocks exact_galerkin_blocks(int l, const Rational& Z, const Rational& reference_energy, int size);

struct FactorizationError : std::runtime_error {
  FactorizationError(int pivot, const std::string& what) : std::runtime_error(what), pivot_index(pivot) {}
  int pivot_index;
};

struct LevelCrossingError : std::runtime_error {
  LevelCrossingError(int a, int b, const std::string& what) : std::runtime_error(what), first(a), second(b) {}
  int first;
  int second;
};

struct IllConditionedFitError : std::runtime_error {
  IllConditionedFitError(double cond, const std::string& what) : std::runtime_error(what), condition(cond) {}
  double condition;
};

template <typename Scalar>
struct GalerkinMatrices {
  MatrixX<Scalar> H;
  MatrixX<Scalar> O;
};

template <typename Scalar>
struct GeneralizedEigenResult {
  VectorX<Scalar> eigenvalues;   // ascending
  MatrixX<Scalar> eigenvectors;  // columns, O-normalized; empty unless requested
  Scalar max_residual = Scalar(0);
};

/// Solves H c = lambda O c via O = L L^T and a dense symmetric eigensolve of
/// L^{-1} H L^{-T}.
template <typename Scalar>
GeneralizedEigenResult<Scalar> solve_generalized(const MatrixX<Scalar>& H, const MatrixX<Scalar>& O,
                                                 bool with_vectors = false) {
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = H.rows();
  if (H.cols() != n || O.rows() != n || O.cols() != n) throw std::invalid_argument("solve_generalized: shape mismatch");

  MatrixX<Scalar> L = MatrixX<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar d = O(j, j);
    for (Eigen::Index p = 0; p < j; ++p) d -= L(j, p) * L(j, p);
    if (!(d > 0)) {
      throw FactorizationError(static_cast<int>(j), "overlap matrix is not positive definite (pivot " +
                                                        std::to_string(j) + ")");
    }
    L(j, j) = sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Scalar s = O(i, j);
      for (Eigen::Index p = 0; p < j; ++p) s -= L(i, p) * L(j, p);
      L(i, j) = s / L(j, j);
    }
  }
  const auto lower = L.template triangularView<Eigen::Lower>();
  MatrixX<Scalar> C = lower.solve(H);
  C = lower.solve(C.transpose()).eval();
  C = ((C + C.transpose()) / 2).eval();

  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(C, with_vectors ? Eigen::ComputeEigenvectors
                                                                    : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("solve_generalized: eigensolver did not converge");

  GeneralizedEigenResult<Scalar> out;
  out.eigenvalues = es.eigenvalues();
  if (with_vectors) {
    out.eigenvectors = L.transpose().template triangularView<Eigen::Upper>().solve(es.eigenvectors());
    for (Eigen::Index i = 0; i < n; ++i) {
      const VectorX<Scalar> c = out.eigenvectors.col(i);
      const VectorX<Scalar> res = H * c - out.eigenvalues(i) * (O * c);
      out.max_residual = std::max<Scalar>(out.max_residual, res.norm() / c.norm());
    }
  }
  return out;
}

template <typename Scalar>
struct GalerkinResult {
  std::vector<Scalar> eigenvalues;
  Scalar tracked_energy = Scalar(0);
  int tracked_index = 0;
  double overlap_condition = 0;
  std::optional<double> convergence_delta;
};

/// Pencil for one (l, Z, E*, M); b only enters through H.
template <typename Scalar>
class GalerkinSolver {
 public:
  GalerkinSolver(int l, const Rational& Z, const Rational& reference_energy, int basis_size)
      : blocks_(exact_galerkin_blocks(l, Z, reference_energy, basis_size)) {
    using std::sqrt;
    const int M = blocks_.size;
    std::vector<Scalar> root_norm(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) root_norm[static_cast<std::size_t>(j)] = sqrt(to_scalar<Scalar>(blocks_.norm[j]));
    auto rn = [&](int j) { return root_norm[static_cast<std::size_t>(j)]; };

    shifted_mu_ = VectorX<Scalar>(M);
    overlap_ = MatrixX<Scalar>::Zero(M, M);
    r2_ = MatrixX<Scalar>::Zero(M, M);
    for (int i = 0; i < M; ++i) {
      shifted_mu_(i) = to_scalar<Scalar>(blocks_.shifted_mu[static_cast<std::size_t>(i)]);
      for (int d = 0; d <= 3 && i + d < M; ++d) {
        const int j = i + d;
        if (d <= 1) {
          overlap_(i, j) = overlap_(j, i) = to_scalar<Scalar>(blocks_.overlap_entry(i, j)) * rn(i) * rn(j);
        }
        r2_(i, j) = r2_(j, i) = to_scalar<Scalar>(blocks_.r2_entry(i, j)) * rn(i) * rn(j);
      }
    }
    reference_energy_ = to_scalar<Scalar>(reference_energy);
  }

  int size() const { return blocks_.size; }
  const GalerkinExactBlocks& exact() const { return blocks_; }
  const MatrixX<Scalar>& overlap() const { return overlap_; }
  const MatrixX<Scalar>& r2() const { return r2_; }

  /// H = diag(mu_j - 1) + E* O + (b^2/8) R.
  GalerkinMatrices<Scalar> matrices(const Rational& b) const {
    GalerkinMatrices<Scalar> m;
    const Scalar beta = to_scalar<Scalar>(b * b / Rational(8));
    m.H = reference_energy_ * overlap_ + beta * r2_;
    m.H.diagonal() += shifted_mu_;
    m.O = overlap_;
    return m;
  }

  /// Ascending eigenvalues E = E* + nu of the pencil at field b. Solving for
  /// the shift nu keeps E* O out of the reduced matrix.
  std::vector<Scalar> eigenvalues(const Rational& b) const {
    MatrixX<Scalar> shifted = to_scalar<Scalar>(b * b / Rational(8)) * r2_;
    shifted.diagonal() += shifted_mu_;
    const auto res = solve_generalized<Scalar>(shifted, overlap_);
    std::vector<Scalar> out(static_cast<std::size_t>(res.eigenvalues.size()));
    for (Eigen::Index i = 0; i < res.eigenvalues.size(); ++i) {
      out[static_cast<std::size_t>(i)] = reference_energy_ + res.eigenvalues(i);
    }
    return out;
  }

  double overlap_condition() const {
    Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(overlap_, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return to_double(ev(ev.size() - 1) / ev(0));
  }

 private:
  GalerkinExactBlocks blocks_;
  VectorX<Scalar> shifted_mu_;
  MatrixX<Scalar> overlap_;
  MatrixX<Scalar> r2_;
  Scalar reference_energy_;
};

template <typename Scalar>
GalerkinMatrices<Scalar> build_matrices(const GalerkinConfig& cfg) {
  cfg.validate();
  return GalerkinSolver<Scalar>(cfg.l, cfg.Z, cfg.reference_energy, cfg.basis_size).matrices(cfg.b);
}

/// Single solve at cfg.b. The tracked eigenvalue is the target_n_r-th of the
/// l block. With `check_convergence`, the same level is recomputed in a basis
/// of half the size and the difference reported.
template <typename Scalar>
GalerkinResult<Scalar> galerkin_solve(const GalerkinConfig& cfg, bool check_convergence = false) {
  cfg.validate();
  const GalerkinSolver<Scalar> solver(cfg.l, cfg.Z, cfg.reference_energy, cfg.basis_size);
  GalerkinResult<Scalar> out;
  out.eigenvalues = solver.eigenvalues(cfg.b);
  out.tracked_index = cfg.target_n_r;
  out.tracked_energy = out.eigenvalues[static_cast<std::size_t>(cfg.target_n_r)];
  out.overlap_condition = solver.overlap_condition();
  const int half = cfg.basis_size / 2;
  if (check_convergence && half >= cfg.target_n_r + 20) {
    const GalerkinSolver<Scalar> coarse(cfg.l, cfg.Z, cfg.reference_energy, half);
    const Scalar coarse_energy = coarse.eigenvalues(cfg.b)[static_cast<std::size_t>(cfg.target_n_r)];
    using std::abs;
    out.convergence_delta = to_double(abs(out.tracked_energy - coarse_energy));
  }
  return out;
}

// --- field-series fits -----------------------------------------------------

struct FitOptions {
  /// Powers of b in the model. The default absorbs truncation with b^6.
  std::vector<int> powers = {0, 2, 4, 6};
  int basis_size = 120;
  /// 0: one task per grid point, capped by hardware concurrency.
  unsigned max_threads = 0;
  double max_condition = 1e10;
};

template <typename Scalar>
struct FieldFitResult {
  RadialLevel level{1, 0};
  Rational Z = 1;
  std::vector<Rational> grid;
  std::vector<Scalar> energies;
  std::vector<int> powers;
  std::map<int, Scalar> coefficients;
  std::map<int, Scalar> standard_errors;
  double condition = 0;
  int basis_size = 0;

  Scalar coefficient(int power) const {
    auto it = coefficients.find(power);
    return it == coefficients.end() ? Scalar(0) : it->second;
  }
};

/// Evenly spaced grid 0, ..., b_max with b_max = 0.05 (N_1 / N_n)^4.
std::vector<Rational> default_field_grid(const RadialLevel& level, int points = 11, const Rational& scale = 1);

/// Tracks one level across the grid (grid[0] must be 0) by nearest-energy
/// continuity; throws LevelCrossingError when the match is ambiguous.
template <typename Scalar>
std::vector<Scalar> track_level(const std::vector<std::vector<Scalar>>& spectra, int start_index) {
  using std::abs;
  std::vector<Scalar> tracked;
  int index = start_index;
  tracked.push_back(spectra.front()[static_cast<std::size_t>(index)]);
  for (std::size_t s = 1; s < spectra.size(); ++s) {
    const auto& ev = spectra[s];
    const Scalar previous = tracked.back();
    int best = 0;
    for (int i = 1; i < static_cast<int>(ev.size()); ++i) {
      if (abs(ev[static_cast<std::size_t>(i)] - previous) < abs(ev[static_cast<std::size_t>(best)] - previous)) best = i;
    }
    const Scalar d_best = abs(ev[static_cast<std::size_t>(best)] - previous);
    for (int i : {best - 1, best + 1}) {
      if (i < 0 || i >= static_cast<int>(ev.size())) continue;
      if (abs(ev[static_cast<std::size_t>(i)] - previous) < 2 * d_best) {
        throw LevelCrossingError(std::min(best, i), std::max(best, i),
                                 "level crossing between eigenvalues " + std::to_string(std::min(best, i)) + " and " +
                                     std::to_string(std::max(best, i)) + " at grid point " + std::to_string(s));
      }
    }
    if (best != index) {
      throw LevelCrossingError(std::min(best, index), std::max(best, index),
                               "tracked level changed position from " + std::to_string(index) + " to " +
                                   std::to_string(best) + " at grid point " + std::to_string(s));
    }
    tracked.push_back(ev[static_cast<std::size_t>(best)]);
    index = best;
  }
  return tracked;
}

/// Least-squares fit of E(b) = sum_p c_p b^p in the scaled variable t = b / b_max.
template <typename Scalar>
void fit_series(FieldFitResult<Scalar>& fit, double max_condition) {
  using std::sqrt;
  const std::size_t m = fit.grid.size();
  const std::size_t p = fit.powers.size();
  if (m <= p) throw std::invalid_argument("fit needs more grid points than model terms");
  const Rational b_max = *std::max_element(fit.grid.begin(), fit.grid.end());
  if (b_max.sign() <= 0) throw std::invalid_argument("field grid must contain a positive field");

  MatrixX<Scalar> A(m, p);
  VectorX<Scalar> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Scalar t = to_scalar<Scalar>(fit.grid[i] / b_max);
    for (std::size_t c = 0; c < p; ++c) {
      Scalar v(1);
      for (int e = 0; e < fit.powers[c]; ++e) v *= t;
      A(Eigen::Index(i), Eigen::Index(c)) = v;
    }
    y(Eigen::Index(i)) = fit.energies[i];
  }
  Eigen::JacobiSVD<MatrixX<Scalar>> svd(A);
  const auto& sv = svd.singularValues();
  fit.condition = to_double(sv(0) / sv(sv.size() - 1));
  if (!(fit.condition < max_condition)) {
    throw IllConditionedFitError(fit.condition, "field-series fit is ill-conditioned (condition " +
                                                    std::to_string(fit.condition) + ")");
  }
  const Eigen::ColPivHouseholderQR<MatrixX<Scalar>> qr(A);
  const VectorX<Scalar> a = qr.solve(y);
  const VectorX<Scalar> residual = A * a - y;
  const Scalar sigma2 = residual.squaredNorm() / Scalar(int(m - p));
  const MatrixX<Scalar> cov = (A.transpose() * A).inverse() * sigma2;
  for (std::size_t c = 0; c < p; ++c) {
    const int power = fit.powers[c];
    const Scalar unit = to_scalar<Scalar>(b_max.pow(power));
    fit.coefficients[power] = a(Eigen::Index(c)) / unit;
    fit.standard_errors[power] = sqrt(cov(Eigen::Index(c), Eigen::Index(c))) / unit;
  }
}

/// Fits the same samples with a different set of powers.
template <typename Scalar>
FieldFitResult<Scalar> refit(const FieldFitResult<Scalar>& samples, const std::vector<int>& powers,
                             double max_condition = 1e10) {
  FieldFitResult<Scalar> fit = samples;
  fit.powers = powers;
  fit.coefficients.clear();
  fit.standard_errors.clear();
  fit_series(fit, max_condition);
  return fit;
}

/// Worker cap: `requested` if nonzero, else hardware concurrency; either is
/// further capped by ZEEMAN2D_MAX_THREADS when that is set to a positive integer.
inline unsigned worker_count(unsigned requested) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* env = std::getenv("ZEEMAN2D_MAX_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// Samples the tracked level of `level` on `grid` and fits the even series.
template <typename Scalar>
FieldFitResult<Scalar> fit_field_series(const RadialLevel& level, const Rational& Z, const std::vector<Rational>& grid,
                                        const FitOptions& options = {}) {
  if (grid.size() < 5) throw std::invalid_argument("field grid needs at least 5 points");
  if (!grid.front().is_zero()) throw std::invalid_argument("field grid must start at b = 0");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) throw std::invalid_argument("field grid must be strictly increasing");
  }
  GalerkinConfig cfg = GalerkinConfig::for_level(level, Z, 0, options.basis_size);
  cfg.validate();
  const GalerkinSolver<Scalar> solver(cfg.l, cfg.Z, cfg.reference_energy, cfg.basis_size);

  std::vector<std::vector<Scalar>> spectra(grid.size());
  const unsigned threads = worker_count(options.max_threads);
  for (std::size_t begin = 0; begin < grid.size(); begin += threads) {
    std::vector<std::future<std::vector<Scalar>>> jobs;
    for (std::size_t i = begin; i < std::min(grid.size(), begin + threads); ++i) {
      jobs.push_back(std::async(std::launch::async, [&solver, &grid, i] { return solver.eigenvalues(grid[i]); }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) spectra[begin + i] = jobs[i].get();
  }

  FieldFitResult<Scalar> fit;
  fit.level = level;
  fit.Z = Z;
  fit.grid = grid;
  fit.powers = options.powers;
  fit.basis_size = options.basis_size;
  fit.energies = track_level(spectra, cfg.target_n_r);
  fit_series(fit, options.max_condition);
  return fit;
}

}  // namespace zeeman2d
