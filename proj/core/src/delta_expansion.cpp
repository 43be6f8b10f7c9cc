#include "modlap/delta_expansion.hpp"

#include "modlap/errors.hpp"
#include "modlap/heaviside.hpp"

namespace modlap {

BigReal dn_on_power(std::size_t n, const BigReal& omega2, const Rational& xi) {
  if (n < 1) throw DomainError("D_N needs N >= 1");
  if (omega2 <= 0) throw DomainError("D_N needs Omega^2 > 0");
  Rational product = 1;
  for (std::size_t k = 1; k <= n; ++k) product *= (Rational(static_cast<long>(k)) - xi) / static_cast<long>(k);
  if (product == 0) return BigReal(0);
  return to_big(product) * pow_rational(omega2, xi);
}

BigReal dn_limit(std::size_t n, const BigReal& omega2, const Rational& xi) {
  // 1 / Gamma(1 - xi) vanishes at the poles xi = 1, 2, ...
  if (xi >= 1 && boost::multiprecision::denominator(xi) == 1) return BigReal(0);
  if (xi >= 1) throw DomainError("dn_limit needs xi < 1 or a positive integer xi");
  const BigReal x = BigReal(static_cast<long>(n)) / omega2;
  return pow_rational(x, -xi) / gamma(to_big(1 - xi));
}

DeltaKernelSample delta_kernel(std::size_t n, const BigReal& omega2, const BigReal& t) {
  if (t <= 0) throw DomainError("delta_kernel needs t > 0");
  if (omega2 <= 0) throw DomainError("delta_kernel needs Omega^2 > 0");
  const auto nl = static_cast<long>(n);
  const BigReal log_value =
      (nl + 1) * log(omega2) + nl * log(t) - omega2 * t - ln_gamma(BigReal(nl + 1));
  return {n, omega2, t, exp(log_value)};
}

KernelMoments kernel_moments(std::size_t n, const BigReal& omega2) {
  const auto nl = static_cast<long>(n);
  return {BigReal(nl) / omega2, BigReal(nl + 1) / omega2, sqrt(BigReal(nl + 1)) / omega2};
}

BigReal kernel_mass(std::size_t n, const BigReal& omega2, const BigReal& a, const BigReal& b) {
  if (a < 0 || b < a) throw DomainError("kernel_mass needs 0 <= a <= b");
  const BigReal shape = static_cast<long>(n + 1);
  return (lower_incomplete_gamma(shape, omega2 * b) - lower_incomplete_gamma(shape, omega2 * a)) /
         gamma(shape);
}

DnComparison dn_vs_heaviside(std::size_t n, const BigReal& omega2, Model model,
                             CoefficientStore& store) {
  const PerturbationSeries series = store.series(model, n, 2);
  DnComparison out;
  out.lhs = 0;
  for (const auto& t : series.terms) out.lhs += t.coeff * dn_on_power(n, omega2, t.exponent);
  out.rhs = evaluate(heaviside_transform(series), BigReal(static_cast<long>(n)) / omega2);
  out.reldiff = abs(out.lhs - out.rhs) / abs(out.rhs);
  return out;
}

}  // namespace modlap
