#include <doctest.h>

#include <json.hpp>

#include <random>

#include "zeeman2d/format.hpp"

using namespace zeeman2d;

TEST_CASE("correctly rounded decimals") {
  CHECK(to_decimal(Rational(3, 64)) == "0.046875");
  CHECK(to_decimal(Rational(-159, 65536)) == "-0.00242614746094");
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(Rational(2, 3), 5) == "0.66667");
  CHECK(to_decimal(Rational(5, 2), 1) == "2");
  CHECK(to_decimal(Rational(7, 2), 1) == "4");
  CHECK(to_decimal(Rational(-25, 2), 2) == "-12");
  CHECK(to_decimal(Rational(999999, 1000000), 3) == "1");
  CHECK(to_decimal(Rational(0)) == "0");
  CHECK(to_decimal(Rational(123456)) == "123456");
  CHECK(to_decimal(Rational(-159, 655360000)) == "-2.42614746094e-7");
  CHECK(to_decimal(Rational(10).pow(15)) == "1e+15");
  CHECK(to_decimal(Rational(1, 1000000)) == "0.000001");
  CHECK_THROWS(to_decimal(Rational(1), 0));
}

TEST_CASE("decimal rendering matches exact rounding on random input") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Rational v(static_cast<long>(rng() % 2000000) - 1000000, static_cast<long>(rng() % 99999 + 1));
    const std::string s = to_decimal(v, 12);
    if (v.is_zero()) continue;
    const Rational back = Rational::parse(s);
    CHECK(((back - v) / v).abs() <= Rational(1, 2) * Rational(10).pow(-11));
  }
}

TEST_CASE("rational strings round-trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Rational v(static_cast<long>(rng()) / 3, static_cast<long>(rng() % 1000000007ULL + 1));
    CHECK(Rational::parse(v.to_string()) == v);
  }
}

TEST_CASE("factorized strings") {
  CHECK(factorized_string(Rational(3, 64)) == "3/2^6");
  CHECK(factorized_string(Rational(-159, 65536)) == "-3×53/2^16");
  CHECK(factorized_string(Rational(-3061109331, 65536)) == "-3^2×7^8×59/2^16");
  CHECK(factorized_string(Rational(1, 2)) == "1/2");
  CHECK(factorized_string(Rational(12)) == "2^2×3");
  CHECK(factorized_string(Rational(0)) == "0");
  const Rational unsplit(BigInt(BigInt("1000003") * BigInt("1000033") * 2));
  CHECK(factorized_string(unsplit) == "2×[1000036000099]");
}

TEST_CASE("output records") {
  OutputRecord rec;
  rec.columns = {"name", "value"};
  rec.rows = {{"plain", "1/2"}, {"with,comma", "say \"hi\""}};
  CHECK(rec.markdown() == "| name | value |\n|---|---|\n| plain | 1/2 |\n| with,comma | say \"hi\" |\n");
  CHECK(rec.csv() == "name,value\r\nplain,1/2\r\n\"with,comma\",\"say \"\"hi\"\"\"\r\n");
  const auto j = nlohmann::ordered_json::parse(rec.json());
  CHECK(j.size() == 2);
  CHECK(j[1]["value"] == "say \"hi\"");
  CHECK(j[0].begin().key() == "name");
  CHECK(csv_escape("a\nb") == "\"a\nb\"");
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK(parse_output_format("markdown") == OutputFormat::Markdown);
  CHECK_THROWS(parse_output_format("xml"));
}
