#pragma once

#include "modlap/precision.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modlap {

enum class OracleMethod { kQuadrature, kSeries, kEigen, kClosedForm, kPinned };

std::string_view to_string(OracleMethod method);

/// An independently computed reference value.
struct OracleResult {
  BigReal value;
  OracleMethod method = OracleMethod::kPinned;
  BigReal error_estimate;
};

using RealFunction = std::function<BigReal(const BigReal&)>;

/// Tanh-sinh quadrature of f over [a, b], halving the step until successive
/// levels agree to `tol` (absolute). Throws ConvergenceError otherwise.
OracleResult tanh_sinh(const RealFunction& f, const BigReal& a, const BigReal& b,
                       const BigReal& tol, unsigned max_level = 12);

/// Z(m) = integral_{-inf}^{inf} exp(-m^2 q^2 - q^4) dq by quadrature on [0, Q]
/// doubled, with the tail beyond Q bounded. For m2 < 1 the result is also
/// checked against z_series. Default tolerance 10^(-precision + 10).
OracleResult z_exact(const BigReal& m2, std::optional<BigReal> tol = std::nullopt);

/// Z(m) = 1/2 sum_n Gamma(n/2 + 1/4) (-m^2)^n / n!  (convergent for every m).
OracleResult z_series(const BigReal& m2);

/// Exact transformed integral 1/2 gamma(1/4, x^2), x > 0.
OracleResult z_hat_exact(const BigReal& x);

/// Lowest eigenvalue of p^2/2 + m^2 q^2/2 + q^4 to `digits` digits, from a
/// truncated even-parity harmonic-oscillator basis whose size and frequency
/// grow until two successive truncations agree.
OracleResult aho_ground_energy(const BigReal& m2, unsigned digits);

/// Taylor coefficients [e_0, ..., e_K] of E(m^2) = sum e_k m^{2k} around m^2 = 0,
/// from polynomial interpolation of the eigenvalue oracle on 2K + 3 points
/// m^2 = j h, |j| <= K + 1.
std::vector<OracleResult> aho_strong_coupling_coefficients(std::size_t max_k,
                                                           const BigReal& step = BigReal("0.005"));

/// One truncation level of the eigenvalue oracle; exposed for tests.
BigReal aho_ground_energy_at(const BigReal& m2, std::size_t basis_size, const BigReal& omega,
                             unsigned digits);

/// {"E0_EXACT", "Z0_EXACT"}: the pure-quartic ground-state energy and
/// Gamma(1/4)/2.
std::map<std::string, BigReal> pinned_constants();

}  // namespace modlap
