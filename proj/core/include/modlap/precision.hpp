#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace modlap {

/// Working real type. Every value created while a given precision is active
/// carries that precision; mixing precisions inside one computation is not
/// supported.
using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

/// Exact rational with arbitrary-size numerator and denominator, always
/// kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline constexpr unsigned kMinPrecision = 30;
inline constexpr unsigned kDefaultPrecision = 80;
/// Orders above this need at least kHighOrderPrecision digits.
inline constexpr std::size_t kHighOrderThreshold = 100;
inline constexpr unsigned kHighOrderPrecision = 60;

/// Current working precision in decimal digits.
unsigned working_precision();

/// Sets the working precision; throws DomainError below kMinPrecision.
void set_working_precision(unsigned digits);

/// Throws DomainError when the working precision is too low for order `n`.
void require_precision_for_order(std::size_t n);

/// Installs a working precision for the lifetime of the object.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// 10^(-working_precision + slack).
BigReal tolerance(int slack = 0);

BigReal to_big(const Rational& r);
BigReal to_big(std::string_view decimal);
BigReal pi();

/// Parses "p/q", "p" or a decimal such as "1.9" into an exact rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Scientific rendering with `digits` significant digits.
std::string format_sci(const BigReal& v, int digits);
/// Fixed rendering with `digits` digits after the point.
std::string format_fixed(const BigReal& v, int digits);

/// Gamma function for p > 0.
BigReal gamma(const BigReal& p);
BigReal gamma(const Rational& p);
BigReal ln_gamma(const BigReal& p);

/// gamma(p, z) = integral_0^z e^-t t^(p-1) dt, p > 0, z >= 0.
BigReal lower_incomplete_gamma(const BigReal& p, const BigReal& z);
/// Gamma(p, z) = integral_z^inf e^-t t^(p-1) dt, p > 0, z >= 0.
BigReal upper_incomplete_gamma(const BigReal& p, const BigReal& z);

/// Truncated large-z expansion
///   Gamma(p, z) ~ z^(p-1) e^-z [1 + sum_{k=1}^{k_max} (p-1)(p-2)...(p-k) / z^k].
/// Asymptotic and non-convergent; the caller owns the validity regime.
BigReal upper_gamma_asymptotic(const BigReal& p, const BigReal& z, unsigned k_max);

/// x^e for x > 0 and rational e.
BigReal pow_rational(const BigReal& x, const Rational& e);

}  // namespace modlap
