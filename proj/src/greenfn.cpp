#include "zeeman2d/greenfn.hpp"

namespace zeeman2d {

GreenEvalConfig GreenEvalConfig::plain(int l, Rational Z, Rational E, int truncation) {
  if (l < 0) throw std::invalid_argument("l must be >= 0");
  if (E.sign() >= 0) throw std::domain_error("plain Green function needs E < 0");
  GreenEvalConfig cfg;
  cfg.kind = Kind::Plain;
  cfg.l = l;
  cfg.Z = std::move(Z);
  cfg.energy = std::move(E);
  cfg.truncation = truncation;
  return cfg;
}

GreenEvalConfig GreenEvalConfig::reduced(int n, int l, Rational Z, int truncation) {
  const RadialLevel level(n, l);
  GreenEvalConfig cfg;
  cfg.kind = Kind::Reduced;
  cfg.l = l;
  cfg.level_n = n;
  cfg.energy = energy0(level, Z);
  cfg.Z = std::move(Z);
  cfg.truncation = truncation;
  return cfg;
}

}  // namespace zeeman2d
