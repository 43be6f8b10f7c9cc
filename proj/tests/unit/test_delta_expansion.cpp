#include "test_support.hpp"

#include "modlap/delta_expansion.hpp"
#include "modlap/errors.hpp"
#include "modlap/heaviside.hpp"
#include "modlap/oracles.hpp"

using namespace modlap;
using modlap::testing::close;
using modlap::testing::rel_close;

TEST_SUITE("delta_expansion") {

TEST_CASE("operator on single powers") {
  const BigReal w2(50);
  CHECK(dn_on_power(10, w2, Rational(1)) == 0);
  CHECK(dn_on_power(10, w2, Rational(3)) == 0);
  CHECK(close(dn_on_power(10, w2, Rational(0)), BigReal(1), tolerance(5)));
  CHECK(dn_limit(10, w2, Rational(2)) == 0);
  CHECK_THROWS_AS(dn_limit(10, w2, Rational(3, 2)), DomainError);
  CHECK_THROWS_AS(dn_on_power(0, w2, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(dn_on_power(3, BigReal(0), Rational(1, 2)), DomainError);

  const BigReal w(100);
  const Rational half(1, 2);
  CHECK(rel_close(dn_on_power(400, w, half), dn_limit(400, w, half), BigReal("0.01")));

  // (N - xi)...(1 - xi) / N! = Gamma(N + 1 - xi) / (Gamma(1 - xi) N!)
  const Rational xi(-3, 4);
  const BigReal x = to_big(xi);
  const BigReal expected = exp(ln_gamma(BigReal(31 - x)) - ln_gamma(BigReal(1 - x)) - ln_gamma(BigReal(31))) *
                           pow(BigReal(7), x);
  CHECK(rel_close(dn_on_power(30, BigReal(7), xi), expected, tolerance(10)));
}

TEST_CASE("operator matches the transform on monomials") {
  // Large N at fixed N / Omega^2 = x turns sigma^xi into x^{-xi} / Gamma(1 - xi).
  const BigReal x("1.5");
  for (const Rational& xi : {Rational(1, 2), Rational(-1, 2), Rational(-5, 4)}) {
    const auto hs = heaviside_transform(PerturbationSeries::custom({{BigReal(1), xi}}));
    const std::size_t n = 4000;
    const BigReal w2 = BigReal(static_cast<long>(n)) / x;
    CAPTURE(format_rational(xi));
    CHECK(rel_close(dn_on_power(n, w2, xi), evaluate(hs, x), BigReal("2e-3")));
    CHECK(rel_close(dn_limit(n, w2, xi), evaluate(hs, x), tolerance(10)));
  }
}

TEST_CASE("kernel is a normalized Gamma density") {
  const std::size_t n = 30;
  const BigReal w2(12);
  const auto m = kernel_moments(n, w2);
  CHECK(close(m.argmax, BigReal(30) / 12, tolerance(5)));
  CHECK(close(m.mean, BigReal(31) / 12, tolerance(5)));
  CHECK(close(m.stddev / m.mean, 1 / sqrt(BigReal(31)), tolerance(5)));
  CHECK(close(kernel_mass(n, w2, BigReal(0), BigReal(1000)), BigReal(1), tolerance(5)));

  const BigReal peak = delta_kernel(n, w2, m.argmax).value;
  CHECK(delta_kernel(n, w2, m.argmax * BigReal("0.99")).value < peak);
  CHECK(delta_kernel(n, w2, m.argmax * BigReal("1.01")).value < peak);

  const auto integrand = [&](const BigReal& t) { return delta_kernel(n, w2, t).value; };
  const auto quad = tanh_sinh(integrand, BigReal(1), BigReal(3), tolerance(20));
  CHECK(close(quad.value, kernel_mass(n, w2, BigReal(1), BigReal(3)), tolerance(18)));
  CHECK_THROWS_AS(delta_kernel(n, w2, BigReal(0)), DomainError);
  CHECK_THROWS_AS(kernel_mass(n, w2, BigReal(2), BigReal(1)), DomainError);
}

TEST_CASE("kernel concentrates as N grows") {
  BigReal prev = 0;
  for (const std::size_t n : {10u, 100u, 1000u}) {
    const BigReal w2 = BigReal(static_cast<long>(n));
    const auto m = kernel_moments(n, w2);
    const BigReal mass = kernel_mass(n, w2, m.mean - 3 * m.stddev, m.mean + 3 * m.stddev);
    CHECK(mass > BigReal("0.99"));
    const BigReal narrow = kernel_mass(n, w2, BigReal("0.9"), BigReal("1.1"));
    CHECK(narrow > prev);
    prev = narrow;
  }
  CHECK(prev > BigReal("0.99"));
}

TEST_CASE("finite-N operator approaches the transformed series") {
  CoefficientStore store;
  const auto c31 = dn_vs_heaviside(31, BigReal(31), Model::kAnharmonic, store);
  const auto c51 = dn_vs_heaviside(51, BigReal(51), Model::kAnharmonic, store);
  const auto c71 = dn_vs_heaviside(71, BigReal(71), Model::kAnharmonic, store);
  CHECK(c51.reldiff < BigReal("1e-2"));
  CHECK(c51.reldiff < c31.reldiff);
  CHECK(c71.reldiff < c51.reldiff);
  CHECK(rel_close(c51.reldiff, abs(c51.lhs - c51.rhs) / abs(c51.rhs), tolerance(5)));

  const auto z = dn_vs_heaviside(41, BigReal(41), Model::kNonGaussian, store);
  CHECK(z.reldiff < BigReal("1e-2"));
}

}  // TEST_SUITE
