#include <doctest.h>

#include <random>

#include "zeeman2d/exactmath.hpp"

using namespace zeeman2d;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 50000);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational construction and canonical form") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(3, -4).to_string() == "-3/4");
  CHECK(Rational(-4, 2).to_string() == "-2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(7).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/64") == Rational(3, 64));
  CHECK(Rational::parse("-159/65536") == Rational(-159, 65536));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("1e-3") == Rational(1, 1000));
  CHECK(Rational::parse("2.5e2") == Rational(250));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("1.2.3"));
}

TEST_CASE("from_double is exact") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
  CHECK(Rational::from_double(0.1) != Rational(1, 10));
  CHECK_THROWS(Rational::from_double(std::nan("")));
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Rational(1));
      CHECK((b / a) * a == b);
    }
    CHECK(Rational::parse(a.to_string()) == a);
    CHECK((a < b) == ((a - b).sign() < 0));
  }
}

TEST_CASE("powers and exact square roots") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(9, 4).is_perfect_square());
  CHECK(Rational(9, 4).sqrt_exact() == Rational(3, 2));
  CHECK_FALSE(Rational(2).is_perfect_square());
  CHECK_FALSE(Rational(-4).is_perfect_square());
  CHECK_THROWS_AS(Rational(2).sqrt_exact(), std::domain_error);
}

TEST_CASE("factorial and generalized binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(gen_binomial(5, 2) == Rational(10));
  CHECK(gen_binomial(5, 0) == Rational(1));
  CHECK(gen_binomial(2, 5) == Rational(0));
  CHECK(gen_binomial(-1, 3) == Rational(-1));
  CHECK(gen_binomial(-2, 2) == Rational(3));
  for (long top = -12; top <= 12; ++top) {
    for (unsigned long j = 0; j <= 9; ++j) {
      const Rational v = gen_binomial(top, j) * Rational(factorial(j));
      CHECK(v.is_integer());
      CHECK(gen_binomial(top, j).is_integer());
    }
  }
}

TEST_CASE("polynomial algebra") {
  const RationalPolynomial p({Rational(1), Rational(-2), Rational(1, 3)});
  const RationalPolynomial q({Rational(0), Rational(5, 7)});
  CHECK(p.degree() == 2);
  CHECK(RationalPolynomial().degree() == -1);
  CHECK(p.derivative() == RationalPolynomial({Rational(-2), Rational(2, 3)}));
  CHECK((p - p).is_zero());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Rational x = random_rational(rng);
    CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    CHECK(p.scaled(Rational(3)).evaluate(x) == Rational(3) * p.evaluate(x));
  }
  CHECK(RationalPolynomial::monomial(3, Rational(2)).evaluate(Rational(3)) == Rational(54));
}

TEST_CASE("integer factorization") {
  auto multiply = [](const Factorization& f) {
    BigInt v = f.residual;
    for (const auto& pp : f.factors) {
      for (unsigned e = 0; e < pp.exponent; ++e) v *= pp.prime;
    }
    return v;
  };
  const Factorization f = factorize_integer(BigInt(3061109331));
  CHECK(f.complete());
  CHECK(f.factors == std::vector<PrimePower>{{3, 2}, {7, 8}, {59, 1}});
  CHECK(factorize_integer(BigInt(1)).factors.empty());
  CHECK(factorize_integer(BigInt(65536)).factors == std::vector<PrimePower>{{2, 16}});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const BigInt v = BigInt(static_cast<unsigned long>(rng() % 1000000000000ULL + 1));
    const Factorization g = factorize_integer(v);
    CHECK(multiply(g) == v);
    for (std::size_t k = 1; k < g.factors.size(); ++k) CHECK(g.factors[k - 1].prime < g.factors[k].prime);
  }
  // Two primes above the trial limit stay unsplit.
  const BigInt big = BigInt("1000003") * BigInt("1000033");
  const Factorization h = factorize_integer(big, 1000);
  CHECK_FALSE(h.complete());
  CHECK(multiply(h) == big);
  CHECK_THROWS(factorize_integer(BigInt(0)));
}
