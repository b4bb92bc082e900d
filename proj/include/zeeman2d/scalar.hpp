#pragma once

// Floating scalar types used by the numerical parts of the library and the
// glue needed to use them inside Eigen matrices.

#include <boost/multiprecision/float128.hpp>
#include <Eigen/Core>

#include <cmath>
#include <concepts>
#include <cstdlib>
#include <limits>
#include <string>

#include "zeeman2d/exactmath.hpp"

namespace zeeman2d {

/// IEEE binary128 (113-bit significand), backed by libquadmath.
using Quad = boost::multiprecision::float128;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Rounds an exact rational to the floating type.
template <typename Scalar>
Scalar to_scalar(const Rational& value) {
  if constexpr (std::same_as<Scalar, double>) {
    return value.to_double();
  } else if constexpr (std::same_as<Scalar, long double>) {
    return std::strtold(value.numerator().get_str().c_str(), nullptr) /
           std::strtold(value.denominator().get_str().c_str(), nullptr);
  } else {
    return Scalar(value.numerator().get_str()) / Scalar(value.denominator().get_str());
  }
}

template <typename Scalar>
double to_double(const Scalar& value) {
  return static_cast<double>(value);
}

}  // namespace zeeman2d

namespace Eigen {

template <>
struct NumTraits<zeeman2d::Quad> : GenericNumTraits<zeeman2d::Quad> {
  using Q = zeeman2d::Quad;
  using Real = Q;
  using NonInteger = Q;
  using Literal = Q;
  using Nested = Q;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static Q epsilon() { return std::numeric_limits<Q>::epsilon(); }
  static Q dummy_precision() { return Q(1e-28); }
  static Q highest() { return (std::numeric_limits<Q>::max)(); }
  static Q lowest() { return std::numeric_limits<Q>::lowest(); }
  static Q infinity() { return std::numeric_limits<Q>::infinity(); }
  static Q quiet_NaN() { return std::numeric_limits<Q>::quiet_NaN(); }
  static int digits10() { return std::numeric_limits<Q>::digits10; }
};

}  // namespace Eigen
