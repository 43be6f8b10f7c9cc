#include "commands.hpp"
#include "output_table.hpp"
#include "run_config.hpp"

#include "modlap/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct RawFlags {
  std::string model;
  long long order = -1;
  std::string beta = "2";
  unsigned precision = modlap::kDefaultPrecision;
  std::vector<std::string> m2;
  std::vector<std::string> betas;
  std::string omega2;
  std::string format = "csv";
  std::string cache;
  std::string out;
  bool no_timestamp = false;
};

modlap::cli::RunConfig to_config(const RawFlags& raw) {
  using modlap::ConfigError;
  modlap::cli::RunConfig config;
  try {
    if (!raw.model.empty()) config.model = modlap::parse_model(raw.model);
    if (raw.order >= 0) config.order = static_cast<std::size_t>(raw.order);
    config.beta = modlap::parse_rational(raw.beta);
    for (const auto& b : raw.betas) config.betas.push_back(modlap::parse_rational(b));
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  config.precision = raw.precision;
  config.format = modlap::cli::parse_format(raw.format);
  if (!raw.cache.empty()) config.cache_path = raw.cache;
  if (!raw.out.empty()) config.out_path = raw.out;
  config.timestamp = !raw.no_timestamp;
  modlap::cli::validate(config);
  return config;
}

// Reals are parsed once the working precision is in force.
void parse_reals(const RawFlags& raw, modlap::cli::RunConfig& config) {
  try {
    for (const auto& m : raw.m2) config.m2_list.push_back(modlap::to_big(modlap::parse_rational(m)));
    if (!raw.omega2.empty()) config.omega2 = modlap::to_big(modlap::parse_rational(raw.omega2));
  } catch (const std::exception& e) {
    throw modlap::ConfigError(e.what());
  }
  modlap::cli::validate(config);
}

void emit(const modlap::cli::OutputTable& table, const modlap::cli::RunConfig& config) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (config.out_path) {
    file.open(*config.out_path);
    if (!file) throw modlap::ConfigError("cannot open " + config.out_path->string());
    os = &file;
  }
  std::optional<std::string> stamp;
  if (config.timestamp) stamp = modlap::cli::utc_timestamp();
  if (config.format == modlap::cli::OutputFormat::kJson) {
    modlap::cli::write_json(*os, table, stamp);
  } else {
    modlap::cli::write_csv(*os, table, stamp);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modified Laplace resummation of divergent perturbation series"};
  app.require_subcommand(1);
  RawFlags raw;

  app.add_option("--model", raw.model, "nongaussian (integral) or anharmonic (oscillator)");
  app.add_option("--order", raw.order, "truncation order N");
  app.add_option("--beta", raw.beta, "power beta in sigma = m^beta (default 2)");
  app.add_option("--precision", raw.precision, "working precision in decimal digits")
      ->capture_default_str();
  app.add_option("--m2", raw.m2, "mass parameter m^2, comma separated or repeated")->delimiter(',');
  app.add_option("--betas", raw.betas, "beta values for scans and curves")->delimiter(',');
  app.add_option("--omega2", raw.omega2, "kernel parameter Omega^2");
  app.add_option("--format", raw.format, "csv or json")->capture_default_str();
  app.add_option("--cache", raw.cache, "coefficient cache file");
  app.add_option("--out", raw.out, "output file (default stdout)");
  app.add_flag("--no-timestamp", raw.no_timestamp, "omit the generation timestamp");

  int which = 0;
  auto* table = app.add_subcommand("table", "reproduce a result table");
  table->add_option("which", which, "1, 2, 3 or 4")->required()->check(CLI::Range(1, 4));
  auto* figure = app.add_subcommand("figure", "emit curve samples for a figure");
  figure->add_option("which", which, "1..5")->required()->check(CLI::Range(1, 5));
  auto* betascan = app.add_subcommand("betascan", "scan the power beta");
  auto* largeorder = app.add_subcommand("largeorder", "stationary-point census at high order");
  auto* kernel = app.add_subcommand("kernel", "finite-N operator and its kernel");
  for (auto* sub : {table, figure, betascan, largeorder, kernel}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    modlap::cli::RunConfig config = to_config(raw);
    modlap::PrecisionScope scope(config.precision);
    parse_reals(raw, config);

    modlap::CoefficientStore store(config.cache_path, [](std::size_t n, std::size_t total) {
      if (n % 10 == 0 || n == total) {
        std::cerr << "\rgenerating coefficients " << n << "/" << total << std::flush;
        if (n == total) std::cerr << '\n';
      }
    });

    modlap::cli::OutputTable result({});
    if (*table) {
      result = modlap::cli::cmd_table(which, config, store);
    } else if (*figure) {
      result = modlap::cli::cmd_figure(which, config, store);
    } else if (*betascan) {
      result = modlap::cli::cmd_betascan(config, store);
    } else if (*largeorder) {
      result = modlap::cli::cmd_largeorder(config, store);
    } else {
      result = modlap::cli::cmd_kernel(config, store);
    }
    emit(result, config);
  } catch (const modlap::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const modlap::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const modlap::ParseError& e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const modlap::ConvergenceError& e) {
    std::cerr << "not converged: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const modlap::NoStationaryPoint& e) {
    std::cerr << "no stationary point: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
