#pragma once

#include "modlap/heaviside.hpp"
#include "modlap/precision.hpp"
#include "modlap/series_models.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modlap {

/// A root x* of the first derivative of a Heaviside series.
struct StationaryPoint {
  BigReal x_star;
  BigReal value;     ///< series value at x*
  std::size_t index = 0;  ///< rank among roots, ascending in x
  BigReal residual;  ///< |f'(x*)|
  BigReal lo;
  BigReal hi;
  bool tangency = false;  ///< touched zero without a sign change
};

struct RootOptions {
  /// Grid points per perturbative order (the grid is geometric).
  std::size_t points_per_order = 64;
  std::size_t min_points = 256;
  /// Defaults: 1e-4 and 2N/3 + 5.
  std::optional<BigReal> x_min;
  std::optional<BigReal> x_max;
  /// Bisection stops once (hi - lo) <= rel_width * hi; default 1e-35.
  std::optional<BigReal> rel_width;
  /// Accepted |f'(x*)|; default 10^(-precision/2).
  std::optional<BigReal> residual_tol;
  unsigned max_iterations = 2000;
};

BigReal default_x_max(std::size_t order);

/// All roots of f' in (x_min, x_max], ascending. Empty when there are none.
/// Throws ConvergenceError (carrying the bracket) when refinement fails.
std::vector<StationaryPoint> find_stationary_points(const HeavisideSeries& hs,
                                                    const RootOptions& options = {});
std::vector<StationaryPoint> find_stationary_points(const HeavisideSeries& hs,
                                                    const BigReal& x_max);

/// The point with the largest x*; throws NoStationaryPoint on an empty list.
StationaryPoint select_x_star(std::span<const StationaryPoint> points);

struct ApproximantResult {
  BigReal sigma;              ///< m^beta
  BigReal total;              ///< f_N(sigma, x*)
  BigReal perturbative_part;  ///< f_N(sigma)
  BigReal correction_part;    ///< f_N^corr(sigma, x*)
};

/// Modified Laplace approximant
///   e^{-sigma x*} f(x*) + sum_n c_n gamma(p_n + 1, sigma x*) sigma^{-p_n}
/// where c_n x^{p_n} are the Heaviside terms. The correction part is built
/// independently from upper incomplete gammas, so total = perturbative +
/// correction is a genuine identity check. For m2 <= 0 the sigma -> 0 limit
/// f(x*) is returned (perturbative part 0).
ApproximantResult approximant(const PerturbationSeries& series, const HeavisideSeries& hs,
                              const BigReal& x_star, const BigReal& m2);

/// [b_1, ..., b_{i_max}], b_i = i-th derivative of the series at x*.
std::vector<BigReal> correction_coefficients(const HeavisideSeries& hs, const BigReal& x_star,
                                             std::size_t i_max);

/// Taylor coefficients [alpha_0, alpha_1/1!, ..., alpha_K/K!] of the small-sigma expansion.
std::vector<BigReal> strong_coupling_expansion(const HeavisideSeries& hs, const BigReal& x_star,
                                               std::size_t max_k);

struct ScalingRow {
  std::size_t order = 0;
  BigReal x_star2;
  BigReal ratio;  ///< x*^2 / N
};

std::vector<ScalingRow> scaling_diagnostic(Model model, std::span<const std::size_t> orders,
                                           CoefficientStore& store);

struct RemainderCheck {
  BigReal bound;
  BigReal actual;
  bool ok = false;
};

/// Integral model, odd N: |Z_{4N}(x*) - Z_N(x*)| against the closed-form
/// Stirling bound (e/3)^{5/4} / (sqrt(8 pi) (1 - e/3)) N^{-5/4} (e/3)^N.
RemainderCheck remainder_bound_check(std::size_t order);
BigReal remainder_bound(std::size_t order);

struct BetaScanRow {
  Rational beta;
  std::size_t order_used = 0;
  std::optional<StationaryPoint> point;  ///< empty: no root at either parity
  bool boundary = false;                 ///< beta sits on the divergence threshold
};

/// Largest stationary point per beta, trying N first and N-1 when N has none.
std::vector<BetaScanRow> beta_scan(Model model, std::size_t order, std::span<const Rational> betas,
                                   CoefficientStore& store, const RootOptions& options = {});

/// Number of roots of f'_N on a shared grid for every order in `orders`.
/// The grid is the one find_stationary_points would use for the largest order.
struct CensusRow {
  std::size_t order = 0;
  std::size_t count = 0;
};
std::vector<CensusRow> stationary_point_census(const PerturbationSeries& full_series,
                                               std::span<const std::size_t> orders,
                                               const RootOptions& options = {});

}  // namespace modlap
