#include "run_config.hpp"

#include "modlap/errors.hpp"

#include <algorithm>

namespace modlap::cli {

void validate(const RunConfig& config) {
  if (config.precision < kMinPrecision) {
    throw ConfigError("--precision must be >= " + std::to_string(kMinPrecision));
  }
  if (config.beta <= 0) throw ConfigError("--beta must be positive");
  for (const auto& b : config.betas) {
    if (b <= 0) throw ConfigError("--betas entries must be positive");
  }
  if (config.omega2 && *config.omega2 <= 0) throw ConfigError("--omega2 must be positive");
  if (config.model == Model::kCustom) throw ConfigError("--model must name a built-in model");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ConfigError("unknown format '" + text + "' (expected csv or json)");
}

int output_digits(const RunConfig& config) {
  return std::min(20, static_cast<int>(config.precision) - 10);
}

}  // namespace modlap::cli
