#pragma once

#include <string>
#include <vector>

#include "zeeman2d/exactmath.hpp"

namespace zeeman2d {

/// Correctly rounded (half-to-even) decimal rendering of an exact rational with
/// `significant` digits; trailing zeros are dropped. Scientific notation is
/// used below 1e-6 and from 1e15 upward.
std::string to_decimal(const Rational& value, int significant = 12);

/// "3^2×13/2^6"; negative values get a leading '-'. Factors that trial division
/// could not split are appended as "[c]".
std::string factorized_string(const Rational& value);

enum class OutputFormat { Markdown, Csv, Json };

OutputFormat parse_output_format(const std::string& name);

/// A small table: header plus string rows, rendered in one of the output formats.
struct OutputRecord {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string render(OutputFormat format) const;
  std::string markdown() const;
  std::string csv() const;
  /// Array of objects, keys in column order.
  std::string json() const;
};

std::string csv_escape(const std::string& field);

}  // namespace zeeman2d
