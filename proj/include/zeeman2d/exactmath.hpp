#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace zeeman2d {

using BigInt = mpz_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("rational division by zero") {}
};

/// Exact signed rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : q_(std::is_signed_v<T> ? mpq_class(static_cast<long>(value))
                               : mpq_class(static_cast<unsigned long>(value))) {}
  Rational(const BigInt& value) : q_(value) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double value);
  /// Parses "p", "p/q" or a plain decimal such as "-0.125" or "2.5e-3".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(int exponent) const;

  /// Exact square root when the value is the square of a rational.
  bool is_perfect_square() const;
  Rational sqrt_exact() const;

  double to_double() const { return q_.get_d(); }
  /// "p/q", with "/q" omitted when q = 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

BigInt factorial(unsigned long k);

/// Falling-factorial binomial top(top-1)...(top-j+1)/j!; top may be negative.
Rational gen_binomial(long top, unsigned long j);

/// Dense polynomial over the rationals; coeffs[i] multiplies x^i. The zero
/// polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<Rational> coeffs)
      : RationalPolynomial(std::vector<Rational>(coeffs)) {}

  static RationalPolynomial monomial(int power, Rational coefficient = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int power) const;

  Rational evaluate(const Rational& x) const;
  RationalPolynomial derivative() const;
  RationalPolynomial scaled(const Rational& factor) const;

  friend RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator-(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization. Anything left after dividing out all primes
/// up to `trial_limit` is reported in `residual` (1 when fully factored).
struct Factorization {
  std::vector<PrimePower> factors;
  BigInt residual = 1;
  bool complete() const { return residual == 1; }
};

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

Factorization factorize_integer(const BigInt& value,
                                std::uint64_t trial_limit = kTrialDivisionLimit);

}  // namespace zeeman2d
