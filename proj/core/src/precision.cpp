#include "modlap/precision.hpp"

#include "modlap/errors.hpp"

#include <cctype>
#include <ios>

namespace modlap {

namespace {

constexpr unsigned kMaxSeriesTerms = 1'000'000;

void require_positive_order(const BigReal& p, const char* who) {
  if (p <= 0) {
    throw DomainError(std::string(who) + ": order p must be > 0, got " + format_sci(p, 12));
  }
}

void require_nonneg_arg(const BigReal& z, const char* who) {
  if (z < 0) {
    throw DomainError(std::string(who) + ": argument z must be >= 0, got " + format_sci(z, 12));
  }
}

// sum_{k>=0} z^k / (p (p+1) ... (p+k)), so that gamma(p,z) = z^p e^-z * sum.
BigReal lower_series(const BigReal& p, const BigReal& z) {
  const BigReal eps = tolerance(-2);
  BigReal term = 1 / p;
  BigReal sum = term;
  for (unsigned k = 1; k < kMaxSeriesTerms; ++k) {
    term *= z / (p + k);
    sum += term;
    if (abs(term) <= abs(sum) * eps) {
      return sum * exp(p * log(z) - z);
    }
  }
  throw ConvergenceError("lower_incomplete_gamma: series did not converge");
}

// Modified Lentz evaluation of the continued fraction for Gamma(p, z).
BigReal upper_continued_fraction(const BigReal& p, const BigReal& z) {
  const BigReal eps = tolerance(-2);
  const BigReal tiny = pow(BigReal(10), -3 * static_cast<int>(working_precision()));
  BigReal b = z + 1 - p;
  BigReal c = 1 / tiny;
  BigReal d = 1 / b;
  BigReal h = d;
  for (unsigned i = 1; i < kMaxSeriesTerms; ++i) {
    const BigReal an = -BigReal(i) * (BigReal(i) - p);
    b += 2;
    d = an * d + b;
    if (abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (abs(c) < tiny) c = tiny;
    d = 1 / d;
    const BigReal delta = d * c;
    h *= delta;
    if (abs(delta - 1) <= eps) {
      return exp(p * log(z) - z) * h;
    }
  }
  throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge");
}

}  // namespace

unsigned working_precision() { return BigReal::default_precision(); }

void set_working_precision(unsigned digits) {
  if (digits < kMinPrecision) {
    throw DomainError("precision must be at least " + std::to_string(kMinPrecision) +
                      " digits, got " + std::to_string(digits));
  }
  BigReal::default_precision(digits);
}

void require_precision_for_order(std::size_t n) {
  if (n > kHighOrderThreshold && working_precision() < kHighOrderPrecision) {
    throw DomainError("order " + std::to_string(n) + " needs at least " +
                      std::to_string(kHighOrderPrecision) + " digits of precision");
  }
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(working_precision()) {
  set_working_precision(digits);
}

PrecisionScope::~PrecisionScope() { BigReal::default_precision(saved_); }

BigReal tolerance(int slack) {
  return pow(BigReal(10), slack - static_cast<int>(working_precision()));
}

BigReal to_big(const Rational& r) {
  return BigReal(numerator(r)) / BigReal(denominator(r));
}

BigReal to_big(std::string_view decimal) { return BigReal(std::string(decimal)); }

BigReal pi() { return boost::math::constants::pi<BigReal>(); }

Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ConfigError("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num(std::string(text.substr(0, slash)));
    const BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw fail();
    return Rational(num, den);
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  int scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    const std::string exp_part(text.substr(i + 1));
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(exp_part, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != exp_part.size()) throw fail();
    scale += e;
  }
  BigInt num(digits);
  if (negative) num = -num;
  BigInt ten_pow = pow(BigInt(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  return scale >= 0 ? Rational(num * ten_pow, BigInt(1)) : Rational(num, ten_pow);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_sci(const BigReal& v, int digits) {
  return v.str(digits, std::ios_base::scientific);
}

std::string format_fixed(const BigReal& v, int digits) {
  return v.str(digits, std::ios_base::fixed);
}

BigReal gamma(const BigReal& p) {
  if (p <= 0) {
    throw DomainError("gamma: argument must be > 0, got " + format_sci(p, 12));
  }
  // MPFR's exponent range is wide enough that Gamma(400) needs no log detour.
  return boost::multiprecision::tgamma(p);
}

BigReal gamma(const Rational& p) { return gamma(to_big(p)); }

BigReal ln_gamma(const BigReal& p) {
  if (p <= 0) {
    throw DomainError("ln_gamma: argument must be > 0, got " + format_sci(p, 12));
  }
  return boost::multiprecision::lgamma(p);
}

BigReal lower_incomplete_gamma(const BigReal& p, const BigReal& z) {
  require_positive_order(p, "lower_incomplete_gamma");
  require_nonneg_arg(z, "lower_incomplete_gamma");
  if (z == 0) return BigReal(0);
  if (z < p + 1) return lower_series(p, z);
  return gamma(p) - upper_continued_fraction(p, z);
}

BigReal upper_incomplete_gamma(const BigReal& p, const BigReal& z) {
  require_positive_order(p, "upper_incomplete_gamma");
  require_nonneg_arg(z, "upper_incomplete_gamma");
  if (z == 0) return gamma(p);
  if (z < p + 1) return gamma(p) - lower_series(p, z);
  return upper_continued_fraction(p, z);
}

BigReal upper_gamma_asymptotic(const BigReal& p, const BigReal& z, unsigned k_max) {
  BigReal bracket = 1;
  BigReal term = 1;
  for (unsigned k = 1; k <= k_max; ++k) {
    term *= (p - k) / z;
    bracket += term;
  }
  return pow(z, p - 1) * exp(-z) * bracket;
}

BigReal pow_rational(const BigReal& x, const Rational& e) {
  if (x <= 0) {
    throw DomainError("pow_rational: base must be > 0, got " + format_sci(x, 12));
  }
  if (denominator(e) == 1) {
    const BigInt n = numerator(e);
    if (abs(n) < 64) return pow(x, n.convert_to<int>());
  }
  return exp(to_big(e) * log(x));
}

}  // namespace modlap
