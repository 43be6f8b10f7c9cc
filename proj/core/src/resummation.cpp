#include "modlap/resummation.hpp"

#include "modlap/errors.hpp"

#include <algorithm>
#include <utility>

namespace modlap {

namespace {

int sign_of(const BigReal& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Plain (uncompensated) sum used only to locate sign changes on the grid.
class GridSampler {
 public:
  explicit GridSampler(const HeavisideSeries& hs) : hs_(hs) {}

  BigReal operator()(const BigReal& x) const {
    BigReal sum = 0;
    const BigReal lx = log(x);
    for (const auto& t : hs_.terms()) sum += t.coeff * exp(to_big(t.power) * lx);
    return sum;
  }

 private:
  const HeavisideSeries& hs_;
};

std::vector<BigReal> geometric_grid(const BigReal& lo, const BigReal& hi, std::size_t n) {
  std::vector<BigReal> grid;
  grid.reserve(n);
  const BigReal log_lo = log(lo);
  const BigReal step = (log(hi) - log_lo) / static_cast<long>(n - 1);
  for (std::size_t i = 0; i < n; ++i) grid.push_back(exp(log_lo + step * static_cast<long>(i)));
  grid.back() = hi;
  return grid;
}

struct ResolvedOptions {
  BigReal x_min;
  BigReal x_max;
  BigReal rel_width;
  BigReal residual_tol;
  std::size_t points;
  unsigned max_iterations;
};

ResolvedOptions resolve(const RootOptions& o, std::size_t order) {
  ResolvedOptions r;
  r.x_min = o.x_min.value_or(BigReal("1e-4"));
  r.x_max = o.x_max.value_or(default_x_max(order));
  r.rel_width = o.rel_width.value_or(BigReal("1e-35"));
  r.residual_tol =
      o.residual_tol.value_or(pow(BigReal(10), -static_cast<int>(working_precision() / 2)));
  r.points = std::max(o.min_points, o.points_per_order * std::max<std::size_t>(order, 1));
  r.max_iterations = o.max_iterations;
  if (r.x_min <= 0 || r.x_max <= r.x_min) {
    throw DomainError("stationary point search needs 0 < x_min < x_max");
  }
  return r;
}

std::string bracket_text(const BigReal& lo, const BigReal& hi) {
  return "[" + format_sci(lo, 20) + ", " + format_sci(hi, 20) + "]";
}

StationaryPoint refine(const HeavisideSeries& d1, const HeavisideSeries& d2, BigReal lo,
                       BigReal hi, const ResolvedOptions& opt) {
  const BigReal bracket_lo = lo;
  const BigReal bracket_hi = hi;
  int s_lo = sign_of(evaluate(d1, lo));
  unsigned iter = 0;
  while (hi - lo > opt.rel_width * hi) {
    if (++iter > opt.max_iterations) {
      throw ConvergenceError("bisection did not converge in bracket " + bracket_text(lo, hi));
    }
    const BigReal mid = (lo + hi) / 2;
    const int s_mid = sign_of(evaluate(d1, mid));
    if (s_mid == 0) {
      lo = hi = mid;
      break;
    }
    if (s_mid == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // Newton polish with the exact second derivative, kept inside the bracket.
  BigReal x = (lo + hi) / 2;
  const BigReal eps = tolerance(2);
  for (int k = 0; k < 20; ++k) {
    const BigReal f = evaluate(d1, x);
    const BigReal fp = evaluate(d2, x);
    if (f == 0 || fp == 0) break;
    const BigReal next = x - f / fp;
    if (next <= bracket_lo || next >= bracket_hi) break;
    const BigReal step = abs(next - x);
    x = next;
    if (step <= eps * x) break;
  }

  StationaryPoint p;
  p.x_star = x;
  p.residual = abs(evaluate(d1, x));
  p.lo = bracket_lo;
  p.hi = bracket_hi;
  if (p.residual > opt.residual_tol) {
    throw ConvergenceError("root residual " + format_sci(p.residual, 6) +
                           " above tolerance in bracket " + bracket_text(bracket_lo, bracket_hi));
  }
  return p;
}

}  // namespace

BigReal default_x_max(std::size_t order) {
  return BigReal(2 * static_cast<long>(order)) / 3 + 5;
}

std::vector<StationaryPoint> find_stationary_points(const HeavisideSeries& hs,
                                                    const RootOptions& options) {
  const ResolvedOptions opt = resolve(options, hs.order());
  const HeavisideSeries d1 = derivative(hs, 1);
  const HeavisideSeries d2 = derivative(hs, 2);
  if (d1.empty()) return {};

  const GridSampler sample(d1);
  const std::vector<BigReal> grid = geometric_grid(opt.x_min, opt.x_max, opt.points);
  std::vector<BigReal> values;
  values.reserve(grid.size());
  for (const auto& x : grid) values.push_back(sample(x));

  std::vector<StationaryPoint> roots;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int s = sign_of(values[i]);
    if (s == 0) {
      // Exact zero on a grid node.
      StationaryPoint p;
      p.x_star = grid[i];
      p.residual = 0;
      p.lo = i > 0 ? grid[i - 1] : grid[i];
      p.hi = i + 1 < grid.size() ? grid[i + 1] : grid[i];
      roots.push_back(std::move(p));
      continue;
    }
    if (i == 0) continue;
    const int s_prev = sign_of(values[i - 1]);
    if (s_prev != 0 && s_prev != s) {
      roots.push_back(refine(d1, d2, grid[i - 1], grid[i], opt));
      continue;
    }
    // Tangency: a local minimum of |f'| that dips below the residual tolerance.
    if (i + 1 < grid.size() && s_prev == s && sign_of(values[i + 1]) == s &&
        abs(values[i]) < abs(values[i - 1]) && abs(values[i]) <= abs(values[i + 1]) &&
        abs(values[i]) <= opt.residual_tol) {
      StationaryPoint p;
      p.x_star = grid[i];
      p.residual = abs(values[i]);
      p.lo = grid[i - 1];
      p.hi = grid[i + 1];
      p.tangency = true;
      roots.push_back(std::move(p));
    }
  }

  for (std::size_t k = 0; k < roots.size(); ++k) {
    roots[k].index = k;
    roots[k].value = evaluate(hs, roots[k].x_star);
  }
  return roots;
}

std::vector<StationaryPoint> find_stationary_points(const HeavisideSeries& hs,
                                                    const BigReal& x_max) {
  RootOptions o;
  o.x_max = x_max;
  return find_stationary_points(hs, o);
}

StationaryPoint select_x_star(std::span<const StationaryPoint> points) {
  if (points.empty()) throw NoStationaryPoint("no stationary point");
  const auto it = std::max_element(
      points.begin(), points.end(),
      [](const StationaryPoint& a, const StationaryPoint& b) { return a.x_star < b.x_star; });
  return *it;
}

ApproximantResult approximant(const PerturbationSeries& series, const HeavisideSeries& hs,
                              const BigReal& x_star, const BigReal& m2) {
  ApproximantResult r;
  const BigReal plateau = evaluate(hs, x_star);
  if (m2 <= 0) {
    r.sigma = 0;
    r.total = plateau;
    r.perturbative_part = 0;
    r.correction_part = plateau;
    return r;
  }
  r.sigma = pow_rational(m2, series.beta / 2);
  const BigReal z = r.sigma * x_star;
  const BigReal damping = exp(-z);

  BigReal cutoff_integral = 0;  // sigma * int_0^{x*} e^{-sigma x} f(x) dx
  BigReal tail_integral = 0;    // sigma * int_{x*}^inf e^{-sigma x} f(x) dx
  for (const auto& t : hs.terms()) {
    const BigReal p1 = to_big(t.power + 1);
    const BigReal scale = t.coeff * pow_rational(r.sigma, -t.power);
    cutoff_integral += scale * lower_incomplete_gamma(p1, z);
    tail_integral += scale * upper_incomplete_gamma(p1, z);
  }
  // Positive-integer powers of sigma have no Heaviside image; they belong to
  // the perturbative sum but not to the approximant.
  BigReal dropped = 0;
  for (const auto& t : series.terms) {
    if (denominator(t.exponent) == 1 && t.exponent > 0) {
      dropped += t.coeff * pow_rational(r.sigma, t.exponent);
    }
  }
  r.total = damping * plateau + cutoff_integral;
  r.perturbative_part = series.evaluate(r.sigma);
  r.correction_part = damping * plateau - tail_integral - dropped;
  return r;
}

std::vector<BigReal> correction_coefficients(const HeavisideSeries& hs, const BigReal& x_star,
                                             std::size_t i_max) {
  std::vector<BigReal> out;
  out.reserve(i_max);
  HeavisideSeries d = hs;
  for (std::size_t i = 1; i <= i_max; ++i) {
    d = derivative(d, 1);
    out.push_back(evaluate(d, x_star));
  }
  return out;
}

std::vector<BigReal> strong_coupling_expansion(const HeavisideSeries& hs, const BigReal& x_star,
                                               std::size_t max_k) {
  std::vector<BigReal> out;
  out.reserve(max_k + 1);
  BigReal factorial = 1;
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (k > 0) factorial *= static_cast<long>(k);
    out.push_back(alpha_k(hs, x_star, k) / factorial);
  }
  return out;
}

std::vector<ScalingRow> scaling_diagnostic(Model model, std::span<const std::size_t> orders,
                                           CoefficientStore& store) {
  std::vector<ScalingRow> rows;
  rows.reserve(orders.size());
  for (const std::size_t n : orders) {
    if (n % 2 == 0) throw DomainError("scaling_diagnostic expects odd orders");
    if (!rows.empty() && n <= rows.back().order) {
      throw DomainError("scaling_diagnostic expects ascending orders");
    }
    const auto hs = heaviside_transform(store.series(model, n, 2));
    const auto points = find_stationary_points(hs);
    const auto best = select_x_star(points);
    ScalingRow row;
    row.order = n;
    row.x_star2 = best.x_star * best.x_star;
    row.ratio = row.x_star2 / static_cast<long>(n);
    rows.push_back(std::move(row));
  }
  return rows;
}

BigReal remainder_bound(std::size_t order) {
  const BigReal e = exp(BigReal(1));
  const BigReal r = e / 3;
  const BigReal n = static_cast<long>(order);
  return pow(r, BigReal("1.25")) / (sqrt(8 * pi()) * (1 - r)) * pow(n, BigReal("-1.25")) *
         pow(r, n);
}

RemainderCheck remainder_bound_check(std::size_t order) {
  if (order % 2 == 0) throw DomainError("remainder_bound_check expects an odd order");
  const auto hs = heaviside_transform(build_nongaussian_series(order, 2));
  const BigReal x = select_x_star(find_stationary_points(hs)).x_star;

  // Terms N+1..4N of the reference series, summed directly.
  const auto reference = heaviside_transform(build_nongaussian_series(4 * order, 2));
  std::vector<HeavisideTerm> tail(reference.terms().begin() + static_cast<long>(order + 1),
                                  reference.terms().end());
  const HeavisideSeries remainder(std::move(tail), 4 * order, reference.provenance());

  RemainderCheck check;
  check.actual = abs(evaluate(remainder, x));
  check.bound = remainder_bound(order);
  check.ok = check.actual <= check.bound;
  return check;
}

std::vector<BetaScanRow> beta_scan(Model model, std::size_t order, std::span<const Rational> betas,
                                   CoefficientStore& store, const RootOptions& options) {
  std::vector<BetaScanRow> rows;
  rows.reserve(betas.size());
  for (const auto& beta : betas) {
    BetaScanRow row;
    row.beta = beta;
    row.boundary = beta == beta_limit(model);
    for (const std::size_t n : {order, order > 0 ? order - 1 : order}) {
      const auto hs = heaviside_transform(store.series(model, n, beta));
      const auto points = find_stationary_points(hs, options);
      row.order_used = n;
      if (!points.empty()) {
        row.point = select_x_star(points);
        break;
      }
      if (order == 0) break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CensusRow> stationary_point_census(const PerturbationSeries& full_series,
                                               std::span<const std::size_t> orders,
                                               const RootOptions& options) {
  std::vector<std::size_t> wanted(orders.begin(), orders.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  if (wanted.empty()) return {};
  if (wanted.back() > full_series.order) {
    throw DomainError("census order exceeds the series order");
  }

  // Derivative term of each perturbative order taken separately.
  struct Slot {
    BigReal coeff;
    BigReal power;
    bool present = false;
  };
  std::vector<Slot> slots(full_series.order + 1);
  for (std::size_t n = 0; n < full_series.terms.size() && n <= full_series.order; ++n) {
    const auto& t = full_series.terms[n];
    if (denominator(t.exponent) == 1 && t.exponent > 0) continue;
    const Rational power = -t.exponent;
    if (power == 0) continue;
    slots[n].coeff = t.coeff / gamma(to_big(power + 1)) * to_big(power);
    slots[n].power = to_big(power - 1);
    slots[n].present = true;
  }

  const ResolvedOptions opt = resolve(options, wanted.back());
  const auto grid = geometric_grid(opt.x_min, opt.x_max, opt.points);
  std::vector<int> prev_sign(wanted.size(), 0);
  std::vector<CensusRow> rows(wanted.size());
  for (std::size_t w = 0; w < wanted.size(); ++w) rows[w].order = wanted[w];

  for (const auto& x : grid) {
    const BigReal lx = log(x);
    BigReal partial = 0;
    std::size_t w = 0;
    for (std::size_t n = 0; n <= wanted.back(); ++n) {
      if (slots[n].present) partial += slots[n].coeff * exp(slots[n].power * lx);
      while (w < wanted.size() && wanted[w] == n) {
        const int s = sign_of(partial);
        if (s != 0 && prev_sign[w] != 0 && s != prev_sign[w]) ++rows[w].count;
        if (s == 0) ++rows[w].count;
        if (s != 0) prev_sign[w] = s;
        ++w;
      }
    }
  }
  return rows;
}

}  // namespace modlap
