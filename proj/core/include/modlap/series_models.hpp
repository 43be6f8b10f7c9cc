#pragma once

#include "modlap/precision.hpp"

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace modlap {

enum class Model {
  kNonGaussian,  ///< Z(m) = integral dq exp(-m^2 q^2 - q^4)
  kAnharmonic,   ///< ground-state energy of p^2/2 + m^2 q^2/2 + q^4
  kCustom,
};

std::string_view to_string(Model model);
/// Accepts "nongaussian"/"integral" and "anharmonic"/"oscillator"/"aho".
Model parse_model(std::string_view name);

/// coeff * sigma^exponent
struct PowerTerm {
  BigReal coeff;
  Rational exponent;
};

/// Truncated weak-coupling series in sigma = m^beta (lambda fixed to 1).
struct PerturbationSeries {
  std::vector<PowerTerm> terms;
  Model model = Model::kCustom;
  std::size_t order = 0;
  Rational beta = 2;

  /// Sum of coeff * sigma^exponent, sigma > 0.
  BigReal evaluate(const BigReal& sigma) const;
  /// Same sum evaluated at sigma = m^beta from m^2.
  BigReal evaluate_at_m2(const BigReal& m2) const;

  static PerturbationSeries custom(std::vector<PowerTerm> terms, Rational beta = 2);
};

/// Term-wise concatenation; the result is a kCustom series.
PerturbationSeries operator+(const PerturbationSeries& a, const PerturbationSeries& b);

/// Called as (n, N) while the anharmonic recursion advances.
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// Exact Rayleigh-Schroedinger coefficients A_0..A_N of E = sum A_n (lambda/m^3)^n.
std::vector<Rational> anharmonic_coefficients(std::size_t order, const ProgressFn& progress = {});

/// a_n = (-1)^n Gamma(2n + 1/2) / n!, n = 0..N.
std::vector<BigReal> nongaussian_coefficients(std::size_t order);

/// Power of m^beta carried by term n of a built-in model.
Rational model_exponent(Model model, std::size_t n, const Rational& beta);

/// Largest beta for which the transformed series keeps an infinite radius
/// (the boundary value itself is admissible with a warning).
Rational beta_limit(Model model);

PerturbationSeries build_series(Model model, std::size_t order, const Rational& beta);
PerturbationSeries build_anharmonic_series(std::span<const Rational> coefficients,
                                           const Rational& beta);
PerturbationSeries build_nongaussian_series(std::size_t order, const Rational& beta);

/// Text cache: one "n numerator/denominator" line per coefficient.
void cache_write(const std::filesystem::path& path, std::span<const Rational> coefficients);
std::vector<Rational> cache_read(const std::filesystem::path& path);

/// Memoizes anharmonic coefficients, optionally backed by a cache file that
/// is read on first use and rewritten whenever the table grows.
class CoefficientStore {
 public:
  CoefficientStore() = default;
  explicit CoefficientStore(std::optional<std::filesystem::path> cache_path,
                            ProgressFn progress = {});

  /// A_0..A_order; generates (and persists) anything not yet known.
  std::span<const Rational> anharmonic(std::size_t order);

  PerturbationSeries series(Model model, std::size_t order, const Rational& beta);

 private:
  std::optional<std::filesystem::path> cache_path_;
  ProgressFn progress_;
  std::vector<Rational> table_;
  bool loaded_ = false;
};

}  // namespace modlap
