#include "test_support.hpp"

#include "modlap/errors.hpp"
#include "modlap/heaviside.hpp"
#include "modlap/oracles.hpp"

using namespace modlap;
using modlap::testing::close;
using modlap::testing::rel_close;

namespace {

// Truncated transformed integral: sum (-1)^n / n! x^{2n+1/2} / (2n+1/2).
BigReal integral_closed_form(std::size_t order, const BigReal& x) {
  BigReal sum = 0;
  BigReal fact = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) fact *= static_cast<long>(n);
    const BigReal p = BigReal(static_cast<long>(2 * n)) + BigReal("0.5");
    const BigReal term = pow(x, p) / (fact * p);
    sum += n % 2 == 0 ? term : BigReal(-term);
  }
  return sum;
}

}  // namespace

TEST_SUITE("heaviside") {

TEST_CASE("single-term transforms") {
  const auto inv = heaviside_transform(PerturbationSeries::custom({{BigReal(1), Rational(-1)}}));
  REQUIRE(inv.terms().size() == 1);
  CHECK(inv.terms()[0].power == 1);
  CHECK(close(inv.terms()[0].coeff, BigReal(1), tolerance(5)));

  const auto osc = heaviside_transform(build_series(Model::kAnharmonic, 0, 2));
  REQUIRE(osc.terms().size() == 1);
  CHECK(osc.terms()[0].power == Rational(-1, 2));
  CHECK(close(osc.terms()[0].coeff, BigReal("0.5") / sqrt(pi()), tolerance(5)));

  const auto dropped = heaviside_transform(PerturbationSeries::custom({{BigReal(5), Rational(2)}}));
  CHECK(dropped.empty());
}

TEST_CASE("inverse powers map to x^n / n!") {
  std::vector<PowerTerm> terms;
  for (long n = 1; n <= 6; ++n) terms.push_back({BigReal(n + 1), Rational(-n)});
  const auto hs = heaviside_transform(PerturbationSeries::custom(terms));
  REQUIRE(hs.terms().size() == 6);
  BigReal fact = 1;
  for (long n = 1; n <= 6; ++n) {
    fact *= n;
    CHECK(hs.terms()[static_cast<std::size_t>(n - 1)].power == n);
    CHECK(close(hs.terms()[static_cast<std::size_t>(n - 1)].coeff, BigReal(n + 1) / fact, tolerance(5)));
  }
}

TEST_CASE("non-representable exponents and beta limits are rejected") {
  CHECK_THROWS_AS(heaviside_transform(PerturbationSeries::custom({{BigReal(1), Rational(3, 2)}})),
                  DomainError);
  CHECK_THROWS_AS(heaviside_transform(build_series(Model::kNonGaussian, 3, 5)), DomainError);
  CHECK_THROWS_AS(heaviside_transform(build_series(Model::kAnharmonic, 3, Rational(7, 2))),
                  DomainError);
  CHECK_NOTHROW(heaviside_transform(build_series(Model::kNonGaussian, 3, 4)));
  CHECK_NOTHROW(heaviside_transform(build_series(Model::kAnharmonic, 3, 3)));
}

TEST_CASE("terms are sorted, merged and pruned") {
  const HeavisideSeries hs({{BigReal(2), Rational(3, 2)}, {BigReal(1), Rational(1, 2)},
                            {BigReal(-2), Rational(3, 2)}, {BigReal(4), Rational(1, 2)}},
                           1, {});
  REQUIRE(hs.terms().size() == 1);
  CHECK(hs.terms()[0].power == Rational(1, 2));
  CHECK(hs.terms()[0].coeff == 5);

  const auto sum = hs + HeavisideSeries({{BigReal(1), Rational(-1, 4)}}, 3, {});
  REQUIRE(sum.terms().size() == 2);
  CHECK(sum.terms()[0].power == Rational(-1, 4));
  CHECK(sum.order() == 3);
}

TEST_CASE("transformed integral series matches its closed form") {
  for (const std::size_t n : {1u, 4u, 15u}) {
    const auto hs = heaviside_transform(build_series(Model::kNonGaussian, n, 2));
    for (const char* x : {"0.3", "1", "2.2"}) {
      CAPTURE(n);
      CAPTURE(x);
      CHECK(close(evaluate(hs, BigReal(x)), integral_closed_form(n, BigReal(x)), tolerance(10)));
    }
  }
  // First order peaks at x = 1 with value 2 - 2/5.
  const auto z1 = heaviside_transform(build_series(Model::kNonGaussian, 1, 2));
  CHECK(close(evaluate(z1, BigReal(1)), BigReal("1.6"), tolerance(10)));
}

TEST_CASE("tracked evaluation") {
  const auto hs = heaviside_transform(build_series(Model::kNonGaussian, 40, 2));
  const auto t = evaluate_tracked(hs, BigReal(3));
  CHECK(t.error > 0);
  CHECK(t.error < BigReal("1e-60"));
  CHECK(t.value == evaluate(hs, BigReal(3)));
  CHECK_THROWS_AS(evaluate(hs, BigReal(0)), DomainError);
  CHECK_THROWS_AS(evaluate(hs, BigReal(-1)), DomainError);
}

TEST_CASE("derivatives are exact and compose") {
  const auto hs = heaviside_transform(build_series(Model::kNonGaussian, 7, 2));
  const auto d1 = derivative(hs, 1);
  // d/dx of the truncated integral series is sum (-1)^n / n! x^{2n - 1/2}.
  BigReal expected = 0;
  BigReal fact = 1;
  const BigReal x("1.3");
  for (long n = 0; n <= 7; ++n) {
    if (n > 0) fact *= n;
    const BigReal term = pow(x, BigReal(2 * n) - BigReal("0.5")) / fact;
    expected += n % 2 == 0 ? term : BigReal(-term);
  }
  CHECK(close(evaluate(d1, x), expected, tolerance(10)));
  const auto d3a = derivative(hs, 3);
  const auto d3b = derivative(derivative(d1, 1), 1);
  CHECK(close(evaluate(d3a, x), evaluate(d3b, x), tolerance(10)));

  // Central difference agrees with the exact second derivative.
  const BigReal h("1e-20");
  const BigReal fd = (evaluate(d1, x + h) - evaluate(d1, x - h)) / (2 * h);
  CHECK(close(fd, evaluate(derivative(hs, 2), x), BigReal("1e-30")));

  // Constants vanish.
  const HeavisideSeries constant({{BigReal(3), Rational(0)}}, 0, {});
  CHECK(derivative(constant, 1).empty());
}

TEST_CASE("alpha_k closed form against quadrature") {
  const auto hs = heaviside_transform(build_series(Model::kAnharmonic, 5, 2));
  const BigReal x_star("0.549152913559036");
  const auto d1 = derivative(hs, 1);
  CHECK(alpha_k(hs, x_star, 0) == evaluate(hs, x_star));
  for (std::size_t k = 1; k <= 3; ++k) {
    // alpha_k = integral_0^{x*} (-y)^k f'(y) dy, substituting y = u^2 to
    // remove the endpoint singularity of x^{-3/2}.
    const auto integrand = [&](const BigReal& u) {
      const BigReal y = u * u;
      const BigReal w = pow(-y, static_cast<long>(k));
      return 2 * u * w * evaluate(d1, y);
    };
    const auto quad = tanh_sinh(integrand, BigReal(0), sqrt(x_star), tolerance(25));
    CAPTURE(k);
    CHECK(close(alpha_k(hs, x_star, k), quad.value, tolerance(20)));
  }
}

TEST_CASE("alpha_k rejects logarithmic terms") {
  const HeavisideSeries hs({{BigReal(1), Rational(-1)}, {BigReal(1), Rational(1, 2)}}, 1, {});
  CHECK_THROWS_AS(alpha_k(hs, BigReal(2), 1), DomainError);
  CHECK_NOTHROW(alpha_k(hs, BigReal(2), 2));
  CHECK_THROWS_AS(alpha_k(hs, BigReal(0), 2), DomainError);
}

}  // TEST_SUITE
