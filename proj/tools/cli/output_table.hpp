#pragma once

#include "modlap/precision.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace modlap::cli {

/// Renders v with `digits` significant digits. Values with |v| in
/// [1e-4, 1e6) use plain decimal notation, everything else "dE+x".
std::string format_number(const BigReal& v, int digits);

/// Significant digits that `error` leaves trustworthy in `v`, capped at `digits`.
int trusted_digits(const BigReal& v, const BigReal& error, int digits);

struct Cell {
  enum class Kind { kEmpty, kInteger, kNumber, kText };
  Kind kind = Kind::kEmpty;
  std::string text;

  static Cell empty() { return {}; }
  static Cell integer(long long v) { return {Kind::kInteger, std::to_string(v)}; }
  static Cell number(const BigReal& v, int digits) { return {Kind::kNumber, format_number(v, digits)}; }
  static Cell label(std::string s) { return {Kind::kText, std::move(s)}; }
};

class OutputTable {
 public:
  explicit OutputTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
  /// Index of a named column; throws std::out_of_range.
  std::size_t column(const std::string& name) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Header row always present. A "# generated <UTC time>" line precedes it
/// when `timestamp` is set.
void write_csv(std::ostream& os, const OutputTable& table, const std::optional<std::string>& timestamp);

/// {"columns": [...], "data": {"col": [...], ...}} with numbers kept as
/// decimal strings so no digits are lost.
void write_json(std::ostream& os, const OutputTable& table, const std::optional<std::string>& timestamp);

std::string utc_timestamp();

}  // namespace modlap::cli
