#include "modlap/series_models.hpp"

#include "modlap/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

namespace modlap {

std::string_view to_string(Model model) {
  switch (model) {
    case Model::kNonGaussian:
      return "nongaussian";
    case Model::kAnharmonic:
      return "anharmonic";
    case Model::kCustom:
      return "custom";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "nongaussian" || lower == "integral" || lower == "non-gaussian") {
    return Model::kNonGaussian;
  }
  if (lower == "anharmonic" || lower == "oscillator" || lower == "aho") {
    return Model::kAnharmonic;
  }
  if (lower == "custom") return Model::kCustom;
  throw ConfigError("unknown model '" + std::string(name) + "'");
}

BigReal PerturbationSeries::evaluate(const BigReal& sigma) const {
  if (sigma <= 0) throw DomainError("series evaluation needs sigma > 0");
  BigReal sum = 0;
  for (const auto& t : terms) sum += t.coeff * pow_rational(sigma, t.exponent);
  return sum;
}

BigReal PerturbationSeries::evaluate_at_m2(const BigReal& m2) const {
  if (m2 <= 0) throw DomainError("series evaluation needs m^2 > 0");
  return evaluate(pow_rational(m2, beta / 2));
}

PerturbationSeries PerturbationSeries::custom(std::vector<PowerTerm> terms, Rational beta) {
  PerturbationSeries s;
  s.order = terms.empty() ? 0 : terms.size() - 1;
  s.terms = std::move(terms);
  s.model = Model::kCustom;
  s.beta = std::move(beta);
  return s;
}

PerturbationSeries operator+(const PerturbationSeries& a, const PerturbationSeries& b) {
  if (a.beta != b.beta) throw DomainError("cannot add series taken in different variables");
  std::vector<PowerTerm> terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return PerturbationSeries::custom(std::move(terms), a.beta);
}

// Ground state psi = exp(-x^2/2) sum_n g^n phi_n(x) with phi_0 = 1 and
// phi_n(x) = sum_{k=1}^{2n} C[n][k] x^{2k}. Substituting into
// -psi''/2 + x^2 psi/2 + g x^4 psi = E psi and matching x^{2k} gives
//   2k C[n][k] = (k+1)(2k+1) C[n][k+1] - C[n-1][k-2] + sum_{j=1}^{n-1} E_j C[n-j][k]
// and E_n = -C[n][1].
std::vector<Rational> anharmonic_coefficients(std::size_t order, const ProgressFn& progress) {
  std::vector<Rational> energy{Rational(1, 2)};
  energy.reserve(order + 1);
  std::vector<std::vector<Rational>> c(order + 1);
  c[0] = {Rational(1)};

  auto at = [&](std::size_t n, std::ptrdiff_t k) -> const Rational* {
    if (k < 0 || static_cast<std::size_t>(k) >= c[n].size()) return nullptr;
    return &c[n][static_cast<std::size_t>(k)];
  };

  for (std::size_t n = 1; n <= order; ++n) {
    const std::size_t top = 2 * n;
    c[n].assign(top + 1, Rational(0));
    for (std::size_t k = top; k >= 1; --k) {
      Rational v = 0;
      if (k + 1 <= top) v += Rational((k + 1) * (2 * k + 1)) * c[n][k + 1];
      if (const Rational* prev = at(n - 1, static_cast<std::ptrdiff_t>(k) - 2)) v -= *prev;
      for (std::size_t j = 1; j < n; ++j) {
        if (const Rational* cc = at(n - j, static_cast<std::ptrdiff_t>(k))) {
          if (!cc->is_zero()) v += energy[j] * *cc;
        }
      }
      c[n][k] = v / Rational(2 * k);
    }
    energy.push_back(-c[n][1]);
    if (progress) progress(n, order);
  }
  return energy;
}

std::vector<BigReal> nongaussian_coefficients(std::size_t order) {
  std::vector<BigReal> out;
  out.reserve(order + 1);
  const BigReal half("0.5");
  BigReal factorial = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) factorial *= n;
    BigReal a = gamma(BigReal(2 * n) + half) / factorial;
    out.push_back(n % 2 == 0 ? a : BigReal(-a));
  }
  return out;
}

Rational model_exponent(Model model, std::size_t n, const Rational& beta) {
  if (beta <= 0) throw DomainError("beta must be > 0");
  const auto ni = static_cast<long>(n);
  switch (model) {
    case Model::kNonGaussian:
      return Rational(-(4 * ni + 1)) / beta;
    case Model::kAnharmonic:
      return Rational(-(3 * ni - 1)) / beta;
    case Model::kCustom:
      break;
  }
  throw ConfigError("model has no built-in exponent rule: " + std::string(to_string(model)));
}

Rational beta_limit(Model model) {
  switch (model) {
    case Model::kNonGaussian:
      return 4;
    case Model::kAnharmonic:
      return 3;
    case Model::kCustom:
      break;
  }
  throw ConfigError("no beta limit for model " + std::string(to_string(model)));
}

PerturbationSeries build_anharmonic_series(std::span<const Rational> coefficients,
                                           const Rational& beta) {
  if (coefficients.empty()) throw DomainError("anharmonic series needs at least A_0");
  if (beta <= 0) throw DomainError("beta must be > 0");
  PerturbationSeries s;
  s.model = Model::kAnharmonic;
  s.order = coefficients.size() - 1;
  s.beta = beta;
  require_precision_for_order(s.order);
  s.terms.reserve(coefficients.size());
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    s.terms.push_back({to_big(coefficients[n]), model_exponent(Model::kAnharmonic, n, beta)});
  }
  return s;
}

PerturbationSeries build_nongaussian_series(std::size_t order, const Rational& beta) {
  if (beta <= 0) throw DomainError("beta must be > 0");
  require_precision_for_order(order);
  PerturbationSeries s;
  s.model = Model::kNonGaussian;
  s.order = order;
  s.beta = beta;
  auto coeffs = nongaussian_coefficients(order);
  s.terms.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    s.terms.push_back({std::move(coeffs[n]), model_exponent(Model::kNonGaussian, n, beta)});
  }
  return s;
}

PerturbationSeries build_series(Model model, std::size_t order, const Rational& beta) {
  switch (model) {
    case Model::kNonGaussian:
      return build_nongaussian_series(order, beta);
    case Model::kAnharmonic: {
      require_precision_for_order(order);
      const auto coeffs = anharmonic_coefficients(order);
      return build_anharmonic_series(coeffs, beta);
    }
    case Model::kCustom:
      break;
  }
  throw ConfigError("build_series: unknown or non-built-in model tag");
}

CoefficientStore::CoefficientStore(std::optional<std::filesystem::path> cache_path,
                                   ProgressFn progress)
    : cache_path_(std::move(cache_path)), progress_(std::move(progress)) {}

std::span<const Rational> CoefficientStore::anharmonic(std::size_t order) {
  if (!loaded_) {
    loaded_ = true;
    if (cache_path_ && std::filesystem::exists(*cache_path_)) table_ = cache_read(*cache_path_);
  }
  if (table_.size() <= order) {
    table_ = anharmonic_coefficients(order, progress_);
    if (cache_path_) cache_write(*cache_path_, table_);
  }
  return std::span<const Rational>(table_).first(order + 1);
}

PerturbationSeries CoefficientStore::series(Model model, std::size_t order, const Rational& beta) {
  if (model == Model::kAnharmonic) return build_anharmonic_series(anharmonic(order), beta);
  return build_series(model, order, beta);
}

}  // namespace modlap
