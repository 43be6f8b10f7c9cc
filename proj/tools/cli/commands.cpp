#include "commands.hpp"

#include "modlap/delta_expansion.hpp"
#include "modlap/errors.hpp"
#include "modlap/heaviside.hpp"
#include "modlap/oracles.hpp"
#include "modlap/resummation.hpp"

#include <algorithm>

namespace modlap::cli {

namespace {

StationaryPoint largest_point(const HeavisideSeries& hs) {
  const auto points = find_stationary_points(hs);
  if (points.empty()) {
    throw NoStationaryPoint("no stationary point at order " + std::to_string(hs.order()));
  }
  return select_x_star(points);
}

std::vector<BigReal> m2_values(const RunConfig& config, std::initializer_list<const char*> defaults) {
  if (!config.m2_list.empty()) return config.m2_list;
  std::vector<BigReal> out;
  for (const char* s : defaults) out.push_back(to_big(s));
  return out;
}

std::vector<Rational> beta_values(const RunConfig& config, std::initializer_list<const char*> defaults) {
  if (!config.betas.empty()) return config.betas;
  std::vector<Rational> out;
  for (const char* s : defaults) out.push_back(parse_rational(s));
  return out;
}

std::vector<std::size_t> odd_orders_up_to(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= n; k += 2) out.push_back(k);
  return out;
}

// Short decimal label such as "1.5".
std::string decimal_label(const Rational& r) {
  std::string s = to_big(r).str(12, std::ios::fixed);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

Cell tracked_cell(const HeavisideSeries& hs, const BigReal& x, int digits) {
  const TrackedSum t = evaluate_tracked(hs, x);
  return Cell::number(t.value, trusted_digits(t.value, t.error, digits));
}

Model model_or(const RunConfig& config, Model fallback) { return config.model.value_or(fallback); }

BigReal reference_at_zero(Model model, unsigned digits) {
  if (model == Model::kNonGaussian) return pinned_constants().at("Z0_EXACT");
  return aho_ground_energy(BigReal(0), digits).value;
}

unsigned oracle_digits() { return working_precision() - 10; }

OutputTable table_integral_orders(const RunConfig& config) {
  const int digits = output_digits(config);
  const BigReal exact = pinned_constants().at("Z0_EXACT");
  OutputTable table({"N", "value", "x_star2", "x_star", "exact"});
  for (const std::size_t n : odd_orders_up_to(config.order.value_or(15))) {
    const auto hs = heaviside_transform(build_series(Model::kNonGaussian, n, config.beta));
    const auto pt = largest_point(hs);
    table.add_row({Cell::integer(static_cast<long long>(n)), tracked_cell(hs, pt.x_star, digits),
                   Cell::number(pt.x_star * pt.x_star, digits), Cell::number(pt.x_star, digits),
                   Cell::number(exact, digits)});
  }
  return table;
}

OutputTable table_integral_masses(const RunConfig& config) {
  const int digits = output_digits(config);
  const std::size_t n = config.order.value_or(15);
  const auto series = build_series(Model::kNonGaussian, n, config.beta);
  const auto hs = heaviside_transform(series);
  const auto pt = largest_point(hs);
  OutputTable table({"m2", "value", "exact", "perturbative", "correction", "x_star2"});
  for (const auto& m2 : m2_values(config, {"0.01", "0.1", "1", "3", "6", "10", "100"})) {
    const auto r = approximant(series, hs, pt.x_star, m2);
    const auto exact = z_exact(m2);
    table.add_row({Cell::number(m2, digits), Cell::number(r.total, digits),
                   Cell::number(exact.value, digits), Cell::number(r.perturbative_part, digits),
                   Cell::number(r.correction_part, digits),
                   Cell::number(pt.x_star * pt.x_star, digits)});
  }
  return table;
}

OutputTable table_strong_coupling(const RunConfig& config, CoefficientStore& store) {
  const int digits = output_digits(config);
  constexpr std::size_t kTerms = 4;
  OutputTable table({"N", "value", "alpha1", "alpha2", "alpha3", "alpha4", "x_star", "value_exact",
                     "alpha1_exact", "alpha2_exact", "alpha3_exact", "alpha4_exact"});
  // The reference expansion is in m^2, so it only applies to beta = 2.
  std::vector<OracleResult> exact;
  if (config.beta == 2) exact = aho_strong_coupling_coefficients(kTerms);
  for (const std::size_t n : odd_orders_up_to(config.order.value_or(9))) {
    const auto hs = heaviside_transform(store.series(Model::kAnharmonic, n, config.beta));
    const auto pt = largest_point(hs);
    const auto coeffs = strong_coupling_expansion(hs, pt.x_star, kTerms);
    std::vector<Cell> row{Cell::integer(static_cast<long long>(n))};
    for (const auto& c : coeffs) row.push_back(Cell::number(c, digits));
    row.push_back(Cell::number(pt.x_star, digits));
    for (std::size_t k = 0; k <= kTerms; ++k) {
      row.push_back(exact.empty() ? Cell::empty() : Cell::number(exact[k].value, digits));
    }
    table.add_row(std::move(row));
  }
  return table;
}

OutputTable table_oscillator_masses(const RunConfig& config, CoefficientStore& store) {
  const int digits = output_digits(config);
  const std::size_t n = config.order.value_or(249);
  require_precision_for_order(n);
  const auto series = store.series(Model::kAnharmonic, n, config.beta);
  const auto hs = heaviside_transform(series);
  const auto pt = largest_point(hs);
  OutputTable table({"m2", "value", "exact", "x_star"});
  for (const auto& m2 : m2_values(config, {"0.001", "0.01", "0.1", "1", "10", "100", "1000"})) {
    const auto r = approximant(series, hs, pt.x_star, m2);
    const auto exact = aho_ground_energy(m2, oracle_digits());
    table.add_row({Cell::number(m2, digits), Cell::number(r.total, digits),
                   Cell::number(exact.value, digits), Cell::number(pt.x_star, digits)});
  }
  return table;
}

std::vector<BigReal> linear_grid(const char* step, std::size_t count) {
  const BigReal h = to_big(step);
  std::vector<BigReal> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(h * static_cast<long>(i));
  return out;
}

OutputTable figure_integral_curves(const RunConfig& config) {
  const int digits = output_digits(config);
  std::vector<std::size_t> orders{1, 4, 7};
  if (config.order) orders = {*config.order};
  std::vector<std::string> columns{"x"};
  std::vector<HeavisideSeries> curves;
  for (const auto n : orders) {
    columns.push_back("Z_" + std::to_string(n));
    curves.push_back(heaviside_transform(build_series(Model::kNonGaussian, n, config.beta)));
  }
  columns.push_back("exact");
  OutputTable table(columns);
  for (const auto& x : linear_grid("0.02", 200)) {
    std::vector<Cell> row{Cell::number(x, digits)};
    for (const auto& hs : curves) row.push_back(tracked_cell(hs, x, digits));
    row.push_back(Cell::number(z_hat_exact(x).value, digits));
    table.add_row(std::move(row));
  }
  return table;
}

OutputTable figure_oscillator_ratio(const RunConfig& config, CoefficientStore& store) {
  const int digits = output_digits(config);
  std::vector<std::size_t> orders{1, 5};
  if (config.order) orders = {*config.order};
  struct Curve {
    PerturbationSeries series;
    HeavisideSeries hs;
    BigReal x_star;
  };
  std::vector<std::string> columns{"m2"};
  std::vector<Curve> curves;
  for (const auto n : orders) {
    columns.push_back("ratio_N" + std::to_string(n));
    auto series = store.series(Model::kAnharmonic, n, config.beta);
    auto hs = heaviside_transform(series);
    auto pt = largest_point(hs);
    curves.push_back({std::move(series), std::move(hs), pt.x_star});
  }
  columns.push_back("exact");

  std::vector<BigReal> grid = config.m2_list;
  if (grid.empty()) {
    // Ten points per decade over [1e-3, 1e3].
    for (int k = -30; k <= 30; ++k) grid.push_back(pow(BigReal(10), BigReal(k) / 10));
  }
  OutputTable table(columns);
  const unsigned eigen_digits = std::min(30u, oracle_digits());
  for (const auto& m2 : grid) {
    const BigReal exact = aho_ground_energy(m2, eigen_digits).value;
    std::vector<Cell> row{Cell::number(m2, digits)};
    for (const auto& c : curves) {
      row.push_back(Cell::number(approximant(c.series, c.hs, c.x_star, m2).total / exact, digits));
    }
    row.push_back(Cell::number(exact, digits));
    table.add_row(std::move(row));
  }
  return table;
}

OutputTable figure_oscillator_curve(const RunConfig& config, CoefficientStore& store) {
  const int digits = output_digits(config);
  const std::size_t n = config.order.value_or(249);
  require_precision_for_order(n);
  const auto hs = heaviside_transform(store.series(Model::kAnharmonic, n, config.beta));
  OutputTable table({"x", "value"});
  // (0.1, 3.4] in steps of 0.01.
  for (const auto& x : linear_grid("0.01", 340)) {
    if (x <= BigReal("0.1")) continue;
    table.add_row({Cell::number(x, digits), tracked_cell(hs, x, digits)});
  }
  return table;
}

OutputTable figure_beta_curves(const RunConfig& config, CoefficientStore& store, Model model,
                               std::size_t default_order, const char* step, std::size_t count) {
  const int digits = output_digits(config);
  const std::size_t n = config.order.value_or(default_order);
  require_precision_for_order(n);
  std::vector<std::string> columns{"x"};
  std::vector<HeavisideSeries> curves;
  for (const auto& beta : beta_values(config, {"1", "1.5", "2", "2.5", "3"})) {
    columns.push_back("beta_" + decimal_label(beta));
    curves.push_back(heaviside_transform(store.series(model, n, beta)));
  }
  OutputTable table(columns);
  for (const auto& x : linear_grid(step, count)) {
    std::vector<Cell> row{Cell::number(x, digits)};
    for (const auto& hs : curves) row.push_back(tracked_cell(hs, x, digits));
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace

OutputTable cmd_table(int which, const RunConfig& config, CoefficientStore& store) {
  switch (which) {
    case 1:
      return table_integral_orders(config);
    case 2:
      return table_integral_masses(config);
    case 3:
      return table_strong_coupling(config, store);
    case 4:
      return table_oscillator_masses(config, store);
    default:
      throw ConfigError("table must be 1, 2, 3 or 4");
  }
}

OutputTable cmd_figure(int which, const RunConfig& config, CoefficientStore& store) {
  switch (which) {
    case 1:
      return figure_integral_curves(config);
    case 2:
      return figure_oscillator_ratio(config, store);
    case 3:
      return figure_oscillator_curve(config, store);
    case 4:
      return figure_beta_curves(config, store, Model::kNonGaussian, 100, "0.05", 300);
    case 5:
      return figure_beta_curves(config, store, Model::kAnharmonic, 249, "0.05", 120);
    default:
      throw ConfigError("figure must be 1, 2, 3, 4 or 5");
  }
}

OutputTable cmd_betascan(const RunConfig& config, CoefficientStore& store) {
  const int digits = output_digits(config);
  const Model model = model_or(config, Model::kNonGaussian);
  const bool integral = model == Model::kNonGaussian;
  const std::size_t n = config.order.value_or(integral ? 100 : 248);
  require_precision_for_order(n);
  const auto betas = integral ? beta_values(config, {"1.5", "1.7", "1.9", "2.0", "2.1"})
                              : beta_values(config, {"1.7", "1.8", "1.9", "2.0", "2.1"});
  for (const auto& b : betas) {
    if (b > beta_limit(model)) {
      throw ConfigError("beta " + decimal_label(b) + " exceeds the limit " +
                        decimal_label(beta_limit(model)) + " for " + std::string(to_string(model)));
    }
  }
  const BigReal reference = reference_at_zero(model, oracle_digits());

  OutputTable table({"beta", "order_used", "x_star", "value", "abs_error", "boundary", "status"});
  for (const auto& row : beta_scan(model, n, betas, store)) {
    std::vector<Cell> cells{Cell::label(decimal_label(row.beta)),
                            Cell::integer(static_cast<long long>(row.order_used))};
    if (row.point) {
      cells.push_back(Cell::number(row.point->x_star, digits));
      cells.push_back(Cell::number(row.point->value, digits));
      cells.push_back(Cell::number(abs(row.point->value - reference), 6));
    } else {
      cells.insert(cells.end(), {Cell::empty(), Cell::empty(), Cell::empty()});
    }
    cells.push_back(Cell::integer(row.boundary ? 1 : 0));
    cells.push_back(Cell::label(row.point ? "ok" : "no stationary point"));
    table.add_row(std::move(cells));
  }
  return table;
}

OutputTable cmd_largeorder(const RunConfig& config, CoefficientStore& store) {
  const int digits = output_digits(config);
  const Model model = model_or(config, Model::kAnharmonic);
  const std::size_t top = config.order.value_or(249);
  if (top < 1) throw ConfigError("largeorder needs --order >= 1");
  require_precision_for_order(top);
  constexpr std::size_t kCoefficients = 7;

  std::vector<std::string> columns{"N", "stationary_points", "root", "x_star", "value",
                                   "x_star2_over_N"};
  for (std::size_t i = 1; i <= kCoefficients; ++i) columns.push_back("b" + std::to_string(i));
  OutputTable table(columns);

  const auto full = store.series(model, top, config.beta);
  std::vector<std::size_t> orders(top);
  for (std::size_t k = 0; k < top; ++k) orders[k] = k + 1;
  for (const auto& row : stationary_point_census(full, orders)) {
    std::vector<Cell> cells{Cell::integer(static_cast<long long>(row.order)),
                            Cell::integer(static_cast<long long>(row.count))};
    cells.resize(columns.size());
    table.add_row(std::move(cells));
  }

  std::vector<std::size_t> detail;
  for (const std::size_t n : {std::size_t{28}, std::size_t{101}, top}) {
    if (n <= top && std::find(detail.begin(), detail.end(), n) == detail.end()) detail.push_back(n);
  }
  for (const std::size_t n : detail) {
    const auto hs = heaviside_transform(store.series(model, n, config.beta));
    const auto points = find_stationary_points(hs);
    for (const auto& p : points) {
      std::vector<Cell> cells{Cell::integer(static_cast<long long>(n)),
                              Cell::integer(static_cast<long long>(points.size())),
                              Cell::integer(static_cast<long long>(p.index)),
                              Cell::number(p.x_star, digits), Cell::number(p.value, digits),
                              Cell::number(p.x_star * p.x_star / static_cast<long>(n), digits)};
      for (const auto& b : correction_coefficients(hs, p.x_star, kCoefficients)) {
        cells.push_back(Cell::number(b, 8));
      }
      table.add_row(std::move(cells));
    }
  }
  return table;
}

OutputTable cmd_kernel(const RunConfig& config, CoefficientStore& store) {
  const int digits = output_digits(config);
  const Model model = model_or(config, Model::kAnharmonic);
  std::vector<std::size_t> orders{31, 51, 71};
  if (config.order) orders = {*config.order};
  OutputTable table({"N", "omega2", "xi", "dn_on_power", "dn_limit", "argmax", "mean", "stddev",
                     "mass_3sigma", "lhs", "rhs", "reldiff"});
  for (const std::size_t n : orders) {
    if (n < 1) throw ConfigError("kernel needs --order >= 1");
    const BigReal omega2 = config.omega2.value_or(BigReal(static_cast<long>(n)));
    const auto moments = kernel_moments(n, omega2);
    const BigReal spread = 3 / sqrt(BigReal(static_cast<long>(n)));
    const BigReal lo = std::max(BigReal(0), BigReal(moments.argmax * (1 - spread)));
    const BigReal mass = kernel_mass(n, omega2, lo, moments.argmax * (1 + spread));
    const auto cmp = dn_vs_heaviside(n, omega2, model, store);
    for (const char* xi_text : {"0", "1/2", "1"}) {
      const Rational xi = parse_rational(xi_text);
      table.add_row({Cell::integer(static_cast<long long>(n)), Cell::number(omega2, digits),
                     Cell::label(xi_text), Cell::number(dn_on_power(n, omega2, xi), digits),
                     Cell::number(dn_limit(n, omega2, xi), digits),
                     Cell::number(moments.argmax, digits), Cell::number(moments.mean, digits),
                     Cell::number(moments.stddev, digits), Cell::number(mass, digits),
                     Cell::number(cmp.lhs, digits), Cell::number(cmp.rhs, digits),
                     Cell::number(cmp.reldiff, 6)});
    }
  }
  return table;
}

}  // namespace modlap::cli
