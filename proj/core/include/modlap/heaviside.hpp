#pragma once

#include "modlap/precision.hpp"
#include "modlap/series_models.hpp"

#include <cstddef>
#include <vector>

namespace modlap {

/// coeff * x^power, meaningful for x > 0 only (the step function is implied).
struct HeavisideTerm {
  BigReal coeff;
  Rational power;
};

struct Provenance {
  Model model = Model::kCustom;
  Rational beta = 2;
};

/// Transformed series sum coeff_n x^{p_n}. Terms are kept sorted by
/// ascending power with like powers merged; instances are immutable.
class HeavisideSeries {
 public:
  HeavisideSeries() = default;
  HeavisideSeries(std::vector<HeavisideTerm> terms, std::size_t order, Provenance provenance);

  const std::vector<HeavisideTerm>& terms() const noexcept { return terms_; }
  std::size_t order() const noexcept { return order_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  bool empty() const noexcept { return terms_.empty(); }

 private:
  std::vector<HeavisideTerm> terms_;
  std::size_t order_ = 0;
  Provenance provenance_;
};

HeavisideSeries operator+(const HeavisideSeries& a, const HeavisideSeries& b);

/// sigma^xi -> x^{-xi} / Gamma(1 - xi), term by term. Positive-integer
/// powers of sigma map to zero and are dropped. Throws DomainError for
/// exponents whose image would be x^p with p <= -1, and for built-in models
/// whose beta exceeds the divergence threshold.
HeavisideSeries heaviside_transform(const PerturbationSeries& series);

struct TrackedSum {
  BigReal value;
  /// Bound on the accumulated rounding error of `value`.
  BigReal error;
};

/// Compensated sum over ascending powers at x > 0, with an error bound.
TrackedSum evaluate_tracked(const HeavisideSeries& hs, const BigReal& x);
BigReal evaluate(const HeavisideSeries& hs, const BigReal& x);

/// Exact i-fold term-wise derivative.
HeavisideSeries derivative(const HeavisideSeries& hs, std::size_t i);

/// alpha_k(x) = integral_{-inf}^{x} (-y)^k f'(y) dy
///            = (-1)^k sum c p x^{k+p} / (k+p),
/// with alpha_0 = f(x).
BigReal alpha_k(const HeavisideSeries& hs, const BigReal& x_star, std::size_t k);

}  // namespace modlap
