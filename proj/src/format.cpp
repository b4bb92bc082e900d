#include "zeeman2d/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zeeman2d {

namespace {

BigInt pow10(long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

/// floor(log10(v)) for v > 0, computed exactly.
long decimal_exponent(const Rational& v) {
  const BigInt num = v.numerator();
  const BigInt den = v.denominator();
  long e = static_cast<long>(num.get_str().size()) - static_cast<long>(den.get_str().size());
  // 10^e <= v < 10^{e+1}
  auto ge_pow = [&](long p) {
    return p >= 0 ? num >= den * pow10(p) : num * pow10(-p) >= den;
  };
  while (!ge_pow(e)) --e;
  while (ge_pow(e + 1)) ++e;
  return e;
}

/// round(v) with ties to even, v >= 0.
BigInt round_half_even(const Rational& v) {
  BigInt q, r;
  const BigInt num = v.numerator();
  const BigInt den = v.denominator();
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const BigInt twice = 2 * r;
  if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()) != 0)) q += 1;
  return q;
}

std::string strip_fraction_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) throw std::invalid_argument("to_decimal: need at least one significant digit");
  if (value.is_zero()) return "0";
  const Rational v = value.abs();
  long e = decimal_exponent(v);
  const long shift = significant - 1 - e;
  BigInt digits = round_half_even(shift >= 0 ? v * Rational(pow10(shift)) : v / Rational(pow10(-shift)));
  if (digits == pow10(significant)) {
    // Rounding carried into a new leading digit.
    digits = pow10(significant - 1);
    ++e;
  }
  std::string d = digits.get_str();
  std::string out;
  if (e < -6 || e >= 15) {
    std::string mantissa = d.substr(0, 1);
    if (d.size() > 1) mantissa += "." + d.substr(1);
    mantissa = strip_fraction_zeros(mantissa);
    std::ostringstream exp;
    exp << (e < 0 ? "e-" : "e+") << (e < 0 ? -e : e);
    out = mantissa + exp.str();
  } else if (e < 0) {
    out = strip_fraction_zeros("0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d);
  } else if (e + 1 >= static_cast<long>(d.size())) {
    out = d + std::string(static_cast<std::size_t>(e + 1 - static_cast<long>(d.size())), '0');
  } else {
    out = strip_fraction_zeros(d.substr(0, static_cast<std::size_t>(e + 1)) + "." +
                               d.substr(static_cast<std::size_t>(e + 1)));
  }
  return value.sign() < 0 ? "-" + out : out;
}

namespace {

std::string factor_product(const BigInt& v) {
  if (v == 1) return "1";
  const Factorization f = factorize_integer(v);
  std::string out;
  for (const auto& pp : f.factors) {
    if (!out.empty()) out += "×";
    out += pp.prime.get_str();
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  if (!f.complete()) {
    if (!out.empty()) out += "×";
    out += "[" + f.residual.get_str() + "]";
  }
  return out;
}

}  // namespace

std::string factorized_string(const Rational& value) {
  if (value.is_zero()) return "0";
  std::string out = value.sign() < 0 ? "-" : "";
  out += factor_product(value.abs().numerator());
  if (value.denominator() != 1) out += "/" + factor_product(value.denominator());
  return out;
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "md" || name == "markdown") return OutputFormat::Markdown;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + name + "' (expected md, csv or json)");
}

std::string OutputRecord::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::Markdown:
      return markdown();
    case OutputFormat::Csv:
      return csv();
    case OutputFormat::Json:
      return json();
  }
  return {};
}

std::string OutputRecord::markdown() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << c << " |";
    os << "\n";
  };
  line(columns);
  os << "|";
  for (std::size_t i = 0; i < columns.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string OutputRecord::csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
    os << "\r\n";
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string OutputRecord::json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < columns.size() && i < r.size(); ++i) obj[columns[i]] = r[i];
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace zeeman2d
