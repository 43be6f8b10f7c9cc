#include "test_support.hpp"

#include "modlap/errors.hpp"
#include "modlap/oracles.hpp"
#include "modlap/resummation.hpp"

#include <cmath>

using namespace modlap;
using modlap::testing::close;
using modlap::testing::matches_printed;
using modlap::testing::rel_close;

namespace {

HeavisideSeries transformed(Model model, std::size_t n, const Rational& beta = 2) {
  return heaviside_transform(build_series(model, n, beta));
}

StationaryPoint largest(const HeavisideSeries& hs) {
  const auto pts = find_stationary_points(hs);
  return select_x_star(pts);
}

}  // namespace

TEST_SUITE("resummation") {

TEST_CASE("stationary points at low orders") {
  const auto osc = find_stationary_points(transformed(Model::kAnharmonic, 1));
  REQUIRE(osc.size() == 1);
  CHECK(matches_printed(osc[0].x_star, "0.328248340614232"));
  CHECK(osc[0].lo < osc[0].x_star);
  CHECK(osc[0].x_star < osc[0].hi);
  CHECK(osc[0].residual <= pow(BigReal(10), -40));
  CHECK_FALSE(osc[0].tangency);

  const auto z1 = find_stationary_points(transformed(Model::kNonGaussian, 1));
  REQUIRE(z1.size() == 1);
  CHECK(close(z1[0].x_star, BigReal(1), tolerance(30)));

  const auto z3 = find_stationary_points(transformed(Model::kNonGaussian, 3));
  REQUIRE(z3.size() == 1);
  CHECK(matches_printed(z3[0].x_star * z3[0].x_star, "1.5960716"));
  CHECK(z3[0].value == evaluate(transformed(Model::kNonGaussian, 3), z3[0].x_star));
}

TEST_CASE("even orders have no stationary point") {
  for (const std::size_t n : {2u, 4u, 8u}) {
    CAPTURE(n);
    CHECK(find_stationary_points(transformed(Model::kNonGaussian, n)).empty());
    CHECK(find_stationary_points(transformed(Model::kAnharmonic, n)).empty());
  }
  const std::vector<StationaryPoint> none;
  CHECK_THROWS_AS(select_x_star(none), NoStationaryPoint);
}

TEST_CASE("selection takes the largest root") {
  std::vector<StationaryPoint> pts(3);
  pts[0].x_star = 2;
  pts[1].x_star = 5;
  pts[2].x_star = 3;
  CHECK(select_x_star(pts).x_star == 5);
  CHECK(select_x_star(std::span(pts).first(1)).x_star == 2);
}

TEST_CASE("search range validation") {
  RootOptions o;
  o.x_min = BigReal(2);
  o.x_max = BigReal(1);
  CHECK_THROWS_AS(find_stationary_points(transformed(Model::kNonGaussian, 3), o), DomainError);
  CHECK(default_x_max(15) == 15);
}

TEST_CASE("tangential roots are flagged") {
  // f = (x - 1)^3 / 3 so f' = (x - 1)^2 touches zero at x = 1.
  const HeavisideSeries hs({{BigReal(1) / 3, Rational(3)},
                            {BigReal(-1), Rational(2)},
                            {BigReal(1), Rational(1)},
                            {BigReal(-1) / 3, Rational(0)}},
                           3, {});
  RootOptions o;
  o.x_min = BigReal("0.5");
  o.x_max = BigReal("1.7");
  o.min_points = 301;
  o.residual_tol = BigReal("1e-4");
  const auto pts = find_stationary_points(hs, o);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].tangency);
  CHECK(abs(pts[0].x_star - 1) < BigReal("0.01"));
  CHECK(pts[0].lo < pts[0].x_star);
  CHECK(pts[0].x_star < pts[0].hi);
}

TEST_CASE("integral model approximant") {
  const auto series = build_series(Model::kNonGaussian, 15, 2);
  const auto hs = heaviside_transform(series);
  const auto pt = largest(hs);
  CHECK(matches_printed(pt.x_star * pt.x_star, "5.0438870"));
  const auto r = approximant(series, hs, pt.x_star, BigReal(1));
  CHECK(matches_printed(r.total, "1.36831695165151724"));
  CHECK(r.sigma == 1);

  const auto limit = approximant(series, hs, pt.x_star, BigReal(0));
  CHECK(limit.total == pt.value);
  CHECK(limit.perturbative_part == 0);
}

TEST_CASE("decomposition identity on random cases") {
  for (int i = 0; i < 50; ++i) {
    const Model model = i % 2 == 0 ? Model::kNonGaussian : Model::kAnharmonic;
    const auto n = static_cast<std::size_t>(2 * std::floor(modlap::testing::uniform(0, 15.99)) + 1);
    const BigReal m2 = pow(BigReal(10), BigReal(modlap::testing::uniform(-2, 3)));
    const auto series = build_series(model, n, 2);
    const auto hs = heaviside_transform(series);
    const auto pt = largest(hs);
    const auto r = approximant(series, hs, pt.x_star, m2);
    CAPTURE(to_string(model));
    CAPTURE(n);
    CAPTURE(modlap::testing::show(m2));
    const BigReal scale =
        std::max({BigReal(abs(r.total)), BigReal(abs(r.perturbative_part)), BigReal(abs(r.correction_part))});
    CHECK(abs(r.total - (r.perturbative_part + r.correction_part)) <= tolerance(8) * scale);
  }
}

TEST_CASE("small sigma continuity and large cut-off recovery") {
  for (const Model model : {Model::kNonGaussian, Model::kAnharmonic}) {
    const auto series = build_series(model, 9, 2);
    const auto hs = heaviside_transform(series);
    const auto pt = largest(hs);
    const auto tiny = approximant(series, hs, pt.x_star, BigReal("1e-15"));
    CHECK(rel_close(tiny.total, pt.value, BigReal("1e-10")));

    // Moving the cut-off far out restores the plain truncated series.
    const BigReal m2(10);
    const auto far = approximant(series, hs, 50 * pt.x_star, m2);
    CHECK(rel_close(far.total, series.evaluate_at_m2(m2), BigReal("1e-20")));
  }
}

TEST_CASE("approximant for a general beta uses sigma = m^beta") {
  const auto series = build_series(Model::kNonGaussian, 9, Rational(3, 2));
  const auto hs = heaviside_transform(series);
  const auto pt = largest(hs);
  const auto r = approximant(series, hs, pt.x_star, BigReal(4));
  CHECK(close(r.sigma, BigReal(2) * sqrt(BigReal(2)), tolerance(5)));
  CHECK(abs(r.total - z_exact(BigReal(4)).value) < BigReal("1e-3"));
}

TEST_CASE("correction coefficients are derivatives at the root") {
  const auto hs = transformed(Model::kAnharmonic, 9);
  const auto pt = largest(hs);
  const auto b = correction_coefficients(hs, pt.x_star, 4);
  REQUIRE(b.size() == 4);
  CHECK(abs(b[0]) <= pow(BigReal(10), -40));
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(close(b[i], evaluate(derivative(hs, i + 1), pt.x_star), tolerance(10)));
  }
}

TEST_CASE("strong coupling expansion") {
  const auto z = transformed(Model::kNonGaussian, 15);
  const auto zp = largest(z);
  const auto coeffs = strong_coupling_expansion(z, zp.x_star, 4);
  REQUIRE(coeffs.size() == 5);
  CHECK(coeffs[0] == zp.value);
  const char* expected[] = {"1.811655", "-0.609988", "0.223363", "-0.074001", "0.022042"};
  for (std::size_t k = 0; k < 5; ++k) {
    CAPTURE(k);
    CHECK(matches_printed(coeffs[k], expected[k]));
  }
  CHECK(matches_printed(alpha_k(z, zp.x_star, 2), "0.446726"));

  const auto e = transformed(Model::kAnharmonic, 9);
  const auto ep = largest(e);
  const auto ec = strong_coupling_expansion(e, ep.x_star, 4);
  CHECK(matches_printed(ec[3], "0.0007338756445212"));
  CHECK(matches_printed(ec[4], "-0.000066541377300"));
}

TEST_CASE("convergence scaling at low orders") {
  CoefficientStore store;
  const std::vector<std::size_t> orders{1, 7, 15};
  const auto rows = scaling_diagnostic(Model::kNonGaussian, orders, store);
  REQUIRE(rows.size() == 3);
  CHECK(close(rows[0].x_star2, BigReal(1), tolerance(30)));
  CHECK(matches_printed(rows[2].x_star2, "5.0438870"));
  CHECK(matches_printed(rows[2].ratio, "0.33626"));
  CHECK(rows[1].x_star2 < rows[2].x_star2);

  const std::vector<std::size_t> bad{3, 2};
  CHECK_THROWS_AS(scaling_diagnostic(Model::kNonGaussian, bad, store), DomainError);
}

TEST_CASE("transformed integral values rise toward the exact constant") {
  const BigReal limit = pinned_constants().at("Z0_EXACT");
  BigReal prev_value = 0;
  BigReal prev_x = 0;
  for (std::size_t n = 1; n <= 15; n += 2) {
    const auto p = largest(transformed(Model::kNonGaussian, n));
    CHECK(p.value > prev_value);
    CHECK(p.value < limit);
    CHECK(p.x_star > prev_x);
    prev_value = p.value;
    prev_x = p.x_star;
  }
}

TEST_CASE("remainder bound") {
  for (std::size_t n = 1; n <= 31; n += 2) {
    CAPTURE(n);
    CHECK(remainder_bound_check(n).ok);
  }
  const auto c15 = remainder_bound_check(15);
  const auto p15 = largest(transformed(Model::kNonGaussian, 15));
  const BigReal true_gap = z_hat_exact(p15.x_star).value - p15.value;
  CHECK(rel_close(c15.actual, abs(true_gap), BigReal("1e-6")));
  CHECK(c15.actual < pinned_constants().at("Z0_EXACT") - p15.value);

  const BigReal e3 = exp(BigReal(1)) / 3;
  for (const std::size_t n : {5u, 11u, 23u}) {
    const BigReal ratio = remainder_bound(n + 2) / remainder_bound(n);
    const BigReal expected = e3 * e3 * pow(BigReal(static_cast<long>(n + 2)) / static_cast<long>(n),
                                           BigReal("-1.25"));
    CHECK(close(ratio, expected, tolerance(10)));
  }
}

TEST_CASE("beta scan falls back one order and flags the boundary") {
  CoefficientStore store;
  const std::vector<Rational> betas{2, 4};
  const auto rows = beta_scan(Model::kNonGaussian, 20, betas, store);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].order_used == 19);
  REQUIRE(rows[0].point);
  CHECK(rows[0].point->x_star == largest(transformed(Model::kNonGaussian, 19)).x_star);
  CHECK_FALSE(rows[0].boundary);
  CHECK(rows[1].boundary);
}

TEST_CASE("census agrees with the per-order root finder") {
  CoefficientStore store;
  const auto full = store.series(Model::kAnharmonic, 32, 2);
  std::vector<std::size_t> orders;
  for (std::size_t n = 24; n <= 32; ++n) orders.push_back(n);
  const auto census = stationary_point_census(full, orders);
  REQUIRE(census.size() == orders.size());
  for (const auto& row : census) {
    CAPTURE(row.order);
    const auto hs = heaviside_transform(store.series(Model::kAnharmonic, row.order, 2));
    RootOptions o;
    o.x_max = default_x_max(32);
    o.min_points = 64 * 32;
    CHECK(row.count == find_stationary_points(hs, o).size());
  }
  const std::vector<std::size_t> too_high{40};
  CHECK_THROWS_AS(stationary_point_census(full, too_high), DomainError);
}

}  // TEST_SUITE
