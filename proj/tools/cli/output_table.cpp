#include "output_table.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace modlap::cli {

std::string format_number(const BigReal& v, int digits) {
  if (v == 0) return "0";
  // str() reads a zero digit count as "all digits".
  digits = std::max(digits, 2);
  // Round once in scientific form; the exponent after rounding decides the layout.
  const std::string sci = v.str(digits - 1, std::ios::scientific);
  const auto e_pos = sci.find('e');
  const long exponent = std::stol(sci.substr(e_pos + 1));
  std::string mantissa = sci.substr(0, e_pos);

  if (exponent >= -4 && exponent < 6) {
    const bool negative = mantissa.front() == '-';
    if (negative) mantissa.erase(0, 1);
    std::string significand;
    for (char c : mantissa) {
      if (c != '.') significand.push_back(c);
    }
    std::string out;
    if (exponent < 0) {
      out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + significand;
    } else {
      const auto int_digits = static_cast<std::size_t>(exponent + 1);
      if (significand.size() < int_digits) significand.append(int_digits - significand.size(), '0');
      out = significand.substr(0, int_digits);
      if (significand.size() > int_digits) out += "." + significand.substr(int_digits);
    }
    return negative ? "-" + out : out;
  }
  return mantissa + "E" + (exponent < 0 ? "-" : "+") + std::to_string(std::labs(exponent));
}

int trusted_digits(const BigReal& v, const BigReal& error, int digits) {
  if (v == 0 || error <= 0) return digits;
  const BigReal rel = error / abs(v);
  if (rel >= 1) return 1;
  const int trusted = static_cast<int>(floor(-log10(rel)).convert_to<long>());
  return std::clamp(trusted, 1, digits);
}

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("row width " + std::to_string(row.size()) + " != " +
                           std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

std::size_t OutputTable::column(const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw std::out_of_range("no column " + name);
  return static_cast<std::size_t>(it - columns_.begin());
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const OutputTable& table, const std::optional<std::string>& timestamp) {
  if (timestamp) os << "# generated " << *timestamp << '\n';
  const auto& cols = table.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
  os << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i].text);
    os << '\n';
  }
}

void write_json(std::ostream& os, const OutputTable& table, const std::optional<std::string>& timestamp) {
  nlohmann::ordered_json doc;
  if (timestamp) doc["generated"] = *timestamp;
  doc["columns"] = table.columns();
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < table.columns().size(); ++c) {
    auto column = nlohmann::ordered_json::array();
    for (const auto& row : table.rows()) {
      const Cell& cell = row[c];
      switch (cell.kind) {
        case Cell::Kind::kEmpty:
          column.push_back(nullptr);
          break;
        case Cell::Kind::kInteger:
          column.push_back(std::stoll(cell.text));
          break;
        case Cell::Kind::kNumber:
        case Cell::Kind::kText:
          column.push_back(cell.text);
          break;
      }
    }
    data[table.columns()[c]] = std::move(column);
  }
  doc["data"] = std::move(data);
  os << doc.dump(2) << '\n';
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace modlap::cli
