#include "modlap/oracles.hpp"

#include "modlap/errors.hpp"

#include <algorithm>
#include <vector>

namespace modlap {

std::string_view to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::kQuadrature:
      return "quadrature";
    case OracleMethod::kSeries:
      return "series";
    case OracleMethod::kEigen:
      return "eigen";
    case OracleMethod::kClosedForm:
      return "closed_form";
    case OracleMethod::kPinned:
      return "pinned";
  }
  return "unknown";
}

OracleResult tanh_sinh(const RealFunction& f, const BigReal& a, const BigReal& b,
                       const BigReal& tol, unsigned max_level) {
  const BigReal half_width = (b - a) / 2;
  const BigReal half_pi = pi() / 2;
  const BigReal eps = tolerance(0);

  // Contribution of the node pair at +-t (or the centre when t == 0).
  auto pair_sum = [&](const BigReal& t) -> std::optional<BigReal> {
    const BigReal u = half_pi * sinh(t);
    const BigReal cu = cosh(u);
    const BigReal w = half_pi * cosh(t) / (cu * cu);
    if (w < eps * eps) return std::nullopt;
    if (t == 0) return w * f(a + half_width);
    // Distance of both nodes to their endpoint, avoiding 1 - tanh cancellation.
    const BigReal e2u = exp(2 * u);
    const BigReal offset = half_width * 2 / (1 + e2u);
    return w * (f(a + offset) + f(b - offset));
  };

  // Level 0: step h = 1.
  BigReal h = 1;
  BigReal sum = *pair_sum(BigReal(0));
  for (long j = 1;; ++j) {
    const auto s = pair_sum(BigReal(j));
    if (!s) break;
    sum += *s;
  }
  BigReal estimate = half_width * h * sum;
  BigReal previous = estimate;
  BigReal diff = abs(estimate);

  for (unsigned level = 1; level <= max_level; ++level) {
    h /= 2;
    // Only the odd multiples of the new step are new nodes.
    for (long j = 1;; j += 2) {
      const auto s = pair_sum(h * j);
      if (!s) break;
      sum += *s;
    }
    estimate = half_width * h * sum;
    diff = abs(estimate - previous);
    previous = estimate;
    if (level >= 3 && diff <= tol) {
      return {estimate, OracleMethod::kQuadrature, diff};
    }
  }
  throw ConvergenceError("tanh_sinh: tolerance not met, last level change " + format_sci(diff, 6));
}

OracleResult z_series(const BigReal& m2) {
  const BigReal eps = tolerance(-2);
  const BigReal quarter("0.25");
  BigReal sum = 0;
  BigReal power = 1;  // (-m^2)^n / n!
  BigReal prev_abs = -1;
  for (long n = 0; n < 100000; ++n) {
    if (n > 0) power *= -m2 / n;
    const BigReal term = gamma(BigReal(n) / 2 + quarter) * power;
    sum += term;
    const BigReal a = abs(term);
    if (n > 4 && a <= eps * abs(sum) && prev_abs >= 0 && a <= prev_abs) {
      return {sum / 2, OracleMethod::kSeries, abs(sum) * eps};
    }
    prev_abs = a;
  }
  throw ConvergenceError("z_series did not converge");
}

OracleResult z_exact(const BigReal& m2, std::optional<BigReal> tol) {
  if (m2 < 0) throw DomainError("z_exact needs m^2 >= 0");
  const BigReal target = tol.value_or(tolerance(10));

  // Cut-off Q with m^2 Q^2 + Q^4 = L, L = ln(10) * (precision + 5).
  const BigReal big_l = log(BigReal(10)) * static_cast<long>(working_precision() + 5);
  const BigReal q2 = (-m2 + sqrt(m2 * m2 + 4 * big_l)) / 2;
  const BigReal q_cut = sqrt(q2);
  const BigReal tail = exp(-m2 * q2 - q2 * q2) / (2 * m2 * q_cut + 4 * q2 * q_cut);

  const auto integrand = [&](const BigReal& q) {
    const BigReal qq = q * q;
    return exp(-m2 * qq - qq * qq);
  };
  const OracleResult half = tanh_sinh(integrand, BigReal(0), q_cut, target / 4);
  OracleResult out{2 * half.value, OracleMethod::kQuadrature,
                   2 * (half.error_estimate + tail)};
  if (m2 < 1) {
    const OracleResult series = z_series(m2);
    const BigReal gap = abs(series.value - out.value);
    if (gap > target) {
      throw ConvergenceError("z_exact: quadrature and series disagree by " + format_sci(gap, 6));
    }
    out.error_estimate = std::max(out.error_estimate, gap);
  }
  if (out.error_estimate > target) {
    throw ConvergenceError("z_exact: achieved error estimate " +
                           format_sci(out.error_estimate, 6));
  }
  return out;
}

OracleResult z_hat_exact(const BigReal& x) {
  if (x <= 0) throw DomainError("z_hat_exact needs x > 0");
  const BigReal v = lower_incomplete_gamma(BigReal("0.25"), x * x) / 2;
  return {v, OracleMethod::kClosedForm, abs(v) * tolerance(5)};
}

namespace {

// Even-parity block of H in the oscillator basis of frequency omega; row i
// is state |2i>. Band: diag, first and second super-diagonal.
struct Pentadiagonal {
  std::vector<BigReal> d0, d1, d2;
};

Pentadiagonal aho_matrix(const BigReal& m2, std::size_t size, const BigReal& omega) {
  Pentadiagonal h;
  h.d0.resize(size);
  h.d1.resize(size);
  h.d2.resize(size);
  const BigReal shift = (m2 - omega * omega) / 2;
  const BigReal inv_2w = 1 / (2 * omega);
  const BigReal inv_4w2 = 1 / (4 * omega * omega);
  for (std::size_t i = 0; i < size; ++i) {
    const BigReal n = 2 * static_cast<long>(i);
    const BigReal s12 = sqrt((n + 1) * (n + 2));
    h.d0[i] = omega * (n + BigReal("0.5")) + shift * (2 * n + 1) * inv_2w +
              (6 * n * n + 6 * n + 3) * inv_4w2;
    h.d1[i] = shift * s12 * inv_2w + (4 * n + 6) * s12 * inv_4w2;
    h.d2[i] = s12 * sqrt((n + 3) * (n + 4)) * inv_4w2;
  }
  return h;
}

// Number of eigenvalues below lambda: negative pivots of LDL^T(H - lambda).
std::size_t count_below(const Pentadiagonal& h, const BigReal& lambda) {
  const std::size_t n = h.d0.size();
  const BigReal tiny = tolerance(-static_cast<int>(working_precision()));
  std::vector<BigReal> d(n), l1(n), l2(n);
  std::size_t negatives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BigReal piv = h.d0[i] - lambda;
    if (i >= 1) {
      // l1[i] = L(i, i-1), l2[i] = L(i, i-2)
      l2[i] = i >= 2 ? h.d2[i - 2] / d[i - 2] : BigReal(0);
      BigReal a = h.d1[i - 1];
      if (i >= 2) a -= l2[i] * d[i - 2] * l1[i - 1];
      l1[i] = a / d[i - 1];
      piv -= l1[i] * l1[i] * d[i - 1];
      if (i >= 2) piv -= l2[i] * l2[i] * d[i - 2];
    }
    if (piv == 0) piv = tiny;
    d[i] = piv;
    if (piv < 0) ++negatives;
  }
  return negatives;
}

}  // namespace

BigReal aho_ground_energy_at(const BigReal& m2, std::size_t basis_size, const BigReal& omega,
                             unsigned digits) {
  const Pentadiagonal h = aho_matrix(m2, basis_size, omega);
  // Gershgorin lower bound and the Rayleigh quotient of |0> as upper bound.
  BigReal lo = h.d0[0];
  for (std::size_t i = 0; i < basis_size; ++i) {
    BigReal r = 0;
    if (i >= 1) r += abs(h.d1[i - 1]);
    if (i >= 2) r += abs(h.d2[i - 2]);
    if (i + 1 < basis_size) r += abs(h.d1[i]);
    if (i + 2 < basis_size) r += abs(h.d2[i]);
    lo = std::min(lo, BigReal(h.d0[i] - r));
  }
  BigReal hi = h.d0[0] + 1;
  const BigReal width = pow(BigReal(10), -static_cast<int>(digits) - 3);
  while (hi - lo > width * std::max(BigReal(1), abs(hi))) {
    const BigReal mid = (lo + hi) / 2;
    if (count_below(h, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) / 2;
}

OracleResult aho_ground_energy(const BigReal& m2, unsigned digits) {
  if (digits + 10 > working_precision()) {
    throw DomainError("aho_ground_energy: digits must be <= precision - 10");
  }
  const BigReal target = pow(BigReal(10), -static_cast<int>(digits));
  const BigReal base_omega =
      std::max({BigReal(1), BigReal(cbrt(BigReal(3))), m2 > 0 ? sqrt(m2) : BigReal(0)});

  constexpr std::size_t kStart = 32;
  constexpr std::size_t kMax = 4096;
  auto omega_for = [&](std::size_t size) {
    // Wider bases resolve larger |q|; let the frequency follow size^(1/3).
    return base_omega * cbrt(BigReal(static_cast<long>(size)) / static_cast<long>(kStart));
  };
  std::size_t size = kStart;
  BigReal previous = aho_ground_energy_at(m2, size, omega_for(size), digits);
  while (size < kMax) {
    size *= 2;
    const BigReal current = aho_ground_energy_at(m2, size, omega_for(size), digits);
    const BigReal change = abs(current - previous);
    if (change <= target * std::max(BigReal(1), abs(current)) / 10) {
      return {current, OracleMethod::kEigen, std::max(change, target / 100)};
    }
    previous = current;
  }
  throw ConvergenceError("aho_ground_energy: not stable to " + std::to_string(digits) +
                         " digits at basis size " + std::to_string(kMax));
}

std::vector<OracleResult> aho_strong_coupling_coefficients(std::size_t max_k,
                                                           const BigReal& step) {
  if (step <= 0) throw DomainError("aho_strong_coupling_coefficients needs step > 0");
  const long half = static_cast<long>(max_k) + 1;
  const std::size_t n = 2 * static_cast<std::size_t>(half) + 1;
  const unsigned digits = working_precision() - 10;

  // Vandermonde system in the scaled variable j = m^2 / h.
  std::vector<std::vector<BigReal>> a(n, std::vector<BigReal>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    const long j = static_cast<long>(r) - half;
    BigReal power = 1;
    for (std::size_t c = 0; c < n; ++c) {
      a[r][c] = power;
      power *= j;
    }
    a[r][n] = aho_ground_energy(step * j, digits).value;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (abs(a[r][c]) > abs(a[pivot][c])) pivot = r;
    }
    std::swap(a[c], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const BigReal f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }

  std::vector<OracleResult> out;
  BigReal scale = 1;
  for (std::size_t k = 0; k <= max_k; ++k) {
    const BigReal coeff = a[k][n] / a[k][k] / scale;
    // Highest fitted term as a proxy for the truncation error, in m^2 units.
    const BigReal highest = a[n - 1][n] / a[n - 1][n - 1];
    out.push_back({coeff, OracleMethod::kEigen, abs(highest) / scale});
    scale *= step;
  }
  return out;
}

std::map<std::string, BigReal> pinned_constants() {
  return {
      {"E0_EXACT", BigReal("0.667986259155777108270962")},
      {"Z0_EXACT", gamma(BigReal("0.25")) / 2},
  };
}

}  // namespace modlap
