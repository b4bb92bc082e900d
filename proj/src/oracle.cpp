#include "zeeman2d/oracle.hpp"

#include "zeeman2d/laguerre.hpp"

namespace zeeman2d {

GalerkinConfig GalerkinConfig::for_level(const RadialLevel& level, Rational Z, Rational b, int basis_size) {
  GalerkinConfig cfg;
  cfg.l = level.l();
  cfg.reference_energy = energy0(level, Z);
  cfg.Z = std::move(Z);
  cfg.b = std::move(b);
  cfg.basis_size = basis_size;
  cfg.target_n_r = level.n_r();
  return cfg;
}

void GalerkinConfig::validate() const {
  if (l < 0) throw std::invalid_argument("GalerkinConfig: l must be >= 0");
  if (Z.sign() <= 0) throw std::invalid_argument("GalerkinConfig: Z must be positive");
  if (b.sign() < 0) throw std::invalid_argument("GalerkinConfig: b must be >= 0");
  if (reference_energy.sign() >= 0) throw std::invalid_argument("GalerkinConfig: reference energy must be negative");
  if (target_n_r < 0) throw std::invalid_argument("GalerkinConfig: target n_r must be >= 0");
  if (basis_size < target_n_r + 20) {
    throw std::invalid_argument("GalerkinConfig: basis size " + std::to_string(basis_size) +
                                " is below target_n_r + 20 = " + std::to_string(target_n_r + 20));
  }
  if (!(Rational(-2) * reference_energy).is_perfect_square()) {
    throw std::invalid_argument("GalerkinConfig: -2 E* must be the square of a rational so that the basis scale is exact");
  }
}

Rational GalerkinExactBlocks::overlap_entry(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (j - i > 1) return 0;
  return overlap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i)];
}

Rational GalerkinExactBlocks::r2_entry(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (j - i > 3) return 0;
  return r2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i)];
}

GalerkinExactBlocks exact_galerkin_blocks(int l, const Rational& Z, const Rational& reference_energy, int size) {
  if (size < 1) throw std::invalid_argument("exact_galerkin_blocks: size must be >= 1");
  GalerkinExactBlocks blocks;
  blocks.l = l;
  blocks.size = size;
  blocks.Z = Z;
  blocks.reference_energy = reference_energy;
  blocks.k = (Rational(-2) * reference_energy).sqrt_exact();
  const Rational two_k = Rational(2) * blocks.k;
  const int alpha = 2 * l;

  blocks.norm.resize(static_cast<std::size_t>(size));
  blocks.shifted_mu.resize(static_cast<std::size_t>(size));
  blocks.overlap.resize(static_cast<std::size_t>(size));
  blocks.r2.resize(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) {
    const auto u = static_cast<std::size_t>(j);
    blocks.norm[u] = sturmian(j, l, reference_energy, Z).norm_squared;
    blocks.shifted_mu[u] = *sturmian_mu(j, l, reference_energy, Z).exact - Rational(1);
    for (int d = 0; d <= 1; ++d) {
      // dr = dx / 2k; the product of two phi carries x^{2l+1} e^{-x}.
      blocks.overlap[u][static_cast<std::size_t>(d)] =
          j + d < size ? cross_integral(alpha + 1, {j, alpha}, {j + d, alpha}) / two_k : Rational(0);
    }
    for (int d = 0; d <= 3; ++d) {
      blocks.r2[u][static_cast<std::size_t>(d)] = j + d < size ? moment3_band(j, j + d, alpha) / two_k.pow(3) : Rational(0);
    }
  }
  return blocks;
}

std::vector<Rational> default_field_grid(const RadialLevel& level, int points, const Rational& scale) {
  if (points < 5) throw std::invalid_argument("default_field_grid: need at least 5 points");
  // b_max = 0.05 (N_1 / N_n)^4 with N_1 = 1/2.
  const Rational ratio = Rational(1, 2) / level.effective_n();
  const Rational b_max = Rational(1, 20) * ratio.pow(4) * scale;
  std::vector<Rational> grid;
  for (int i = 0; i < points; ++i) grid.push_back(b_max * Rational(i, points - 1));
  return grid;
}

}  // namespace zeeman2d
