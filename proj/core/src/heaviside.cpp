#include "modlap/heaviside.hpp"

#include "modlap/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace modlap {

namespace {

std::vector<HeavisideTerm> normalize(std::vector<HeavisideTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const HeavisideTerm& a, const HeavisideTerm& b) { return a.power < b.power; });
  std::vector<HeavisideTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().power == t.power) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const HeavisideTerm& t) { return t.coeff == 0; });
  return out;
}

bool is_positive_integer(const Rational& r) { return denominator(r) == 1 && r > 0; }

}  // namespace

HeavisideSeries::HeavisideSeries(std::vector<HeavisideTerm> terms, std::size_t order,
                                 Provenance provenance)
    : terms_(normalize(std::move(terms))), order_(order), provenance_(std::move(provenance)) {}

HeavisideSeries operator+(const HeavisideSeries& a, const HeavisideSeries& b) {
  std::vector<HeavisideTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return HeavisideSeries(std::move(terms), std::max(a.order(), b.order()),
                         Provenance{Model::kCustom, a.provenance().beta});
}

HeavisideSeries heaviside_transform(const PerturbationSeries& series) {
  if (series.model != Model::kCustom && series.beta > beta_limit(series.model)) {
    throw DomainError("beta = " + format_rational(series.beta) + " exceeds the limit " +
                      format_rational(beta_limit(series.model)) + " for model " +
                      std::string(to_string(series.model)));
  }
  std::vector<HeavisideTerm> terms;
  terms.reserve(series.terms.size());
  for (const auto& t : series.terms) {
    if (is_positive_integer(t.exponent)) continue;
    const Rational power = -t.exponent;
    if (power <= -1) {
      throw DomainError("sigma^" + format_rational(t.exponent) +
                        " has no Laplace-representable transform");
    }
    terms.push_back({t.coeff / gamma(to_big(power + 1)), power});
  }
  return HeavisideSeries(std::move(terms), series.order, Provenance{series.model, series.beta});
}

TrackedSum evaluate_tracked(const HeavisideSeries& hs, const BigReal& x) {
  if (x <= 0) {
    throw DomainError("Heaviside series is only defined for x > 0, got " + format_sci(x, 12));
  }
  // Powers are ascending, so x^{p_n} = x^{p_{n-1}} * x^{p_n - p_{n-1}}; the
  // step factors are cached because both built-in models use one step.
  std::map<Rational, BigReal> step_cache;
  BigReal sum = 0;
  BigReal compensation = 0;
  BigReal magnitude = 0;
  BigReal xp;
  const Rational* prev = nullptr;
  for (const auto& t : hs.terms()) {
    if (prev == nullptr) {
      xp = pow_rational(x, t.power);
    } else {
      const Rational step = t.power - *prev;
      auto it = step_cache.find(step);
      if (it == step_cache.end()) it = step_cache.emplace(step, pow_rational(x, step)).first;
      xp *= it->second;
    }
    prev = &t.power;
    const BigReal term = t.coeff * xp;
    magnitude += abs(term);
    // Neumaier's variant of Kahan summation.
    const BigReal next = sum + term;
    if (abs(sum) >= abs(term)) {
      compensation += (sum - next) + term;
    } else {
      compensation += (term - next) + sum;
    }
    sum = next;
  }
  const auto n = static_cast<long>(hs.terms().size());
  return {sum + compensation, magnitude * tolerance(0) * (n + 2)};
}

BigReal evaluate(const HeavisideSeries& hs, const BigReal& x) {
  return evaluate_tracked(hs, x).value;
}

HeavisideSeries derivative(const HeavisideSeries& hs, std::size_t i) {
  if (i == 0) return hs;
  std::vector<HeavisideTerm> terms;
  terms.reserve(hs.terms().size());
  for (const auto& t : hs.terms()) {
    Rational factor = 1;
    for (std::size_t j = 0; j < i; ++j) factor *= t.power - static_cast<long>(j);
    if (factor == 0) continue;
    terms.push_back({t.coeff * to_big(factor), t.power - static_cast<long>(i)});
  }
  return HeavisideSeries(std::move(terms), hs.order(), hs.provenance());
}

BigReal alpha_k(const HeavisideSeries& hs, const BigReal& x_star, std::size_t k) {
  if (k == 0) return evaluate(hs, x_star);
  if (x_star <= 0) throw DomainError("alpha_k needs x* > 0");
  BigReal sum = 0;
  const auto kk = static_cast<long>(k);
  for (const auto& t : hs.terms()) {
    if (t.power == 0) continue;  // constants have zero derivative
    const Rational shifted = t.power + kk;
    if (shifted == 0) {
      throw DomainError("alpha_k: term x^" + format_rational(t.power) +
                        " integrates to a logarithm at k = " + std::to_string(k));
    }
    sum += t.coeff * to_big(t.power / shifted) * pow_rational(x_star, shifted);
  }
  return k % 2 == 0 ? sum : BigReal(-sum);
}

}  // namespace modlap
