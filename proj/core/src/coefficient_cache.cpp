#include "modlap/errors.hpp"
#include "modlap/series_models.hpp"

#include <fstream>
#include <regex>
#include <string>

namespace modlap {

void cache_write(const std::filesystem::path& path, std::span<const Rational> coefficients) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + tmp.string());
    for (std::size_t n = 0; n < coefficients.size(); ++n) {
      out << n << ' ' << format_rational(coefficients[n]) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing cache file: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<Rational> cache_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file: " + path.string());

  static const std::regex line_re(R"(^(\d+) (-?\d+)(?:/(\d+))?$)");
  std::vector<Rational> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) {
      throw ParseError(lineno, "expected 'n numerator/denominator', got '" + line + "'");
    }
    if (std::stoull(m[1].str()) != out.size()) {
      throw ParseError(lineno, "index " + m[1].str() + " out of sequence");
    }
    const BigInt num(m[2].str());
    const BigInt den(m[3].matched ? m[3].str() : std::string("1"));
    if (den == 0) throw ParseError(lineno, "zero denominator");
    out.emplace_back(num, den);
  }
  return out;
}

}  // namespace modlap
