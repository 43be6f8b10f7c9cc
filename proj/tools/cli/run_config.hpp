#pragma once

#include "modlap/precision.hpp"
#include "modlap/series_models.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace modlap::cli {

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  std::optional<Model> model;  ///< unset: the command's natural model
  std::optional<std::size_t> order;
  Rational beta = 2;
  unsigned precision = kDefaultPrecision;
  std::vector<BigReal> m2_list;
  std::vector<Rational> betas;
  std::optional<BigReal> omega2;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::filesystem::path> cache_path;
  std::optional<std::filesystem::path> out_path;
  bool timestamp = true;
};

/// Throws ConfigError when an invariant is broken.
void validate(const RunConfig& config);

OutputFormat parse_format(const std::string& text);

/// Significant digits printed for values that carry no tighter error bound.
int output_digits(const RunConfig& config);

}  // namespace modlap::cli
