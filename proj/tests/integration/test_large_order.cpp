#include "test_support.hpp"

#include "modlap/modlap.hpp"

#include <cstdlib>
#include <optional>

using namespace modlap;
using modlap::testing::matches_printed;

namespace {

CoefficientStore& shared_store() {
  static CoefficientStore store = [] {
    const char* path = std::getenv("MODLAP_AHO_CACHE");
    return path ? CoefficientStore(std::filesystem::path(path)) : CoefficientStore();
  }();
  return store;
}

HeavisideSeries oscillator(std::size_t n) {
  return heaviside_transform(shared_store().series(Model::kAnharmonic, n, 2));
}

}  // namespace

TEST_SUITE("large_order") {

TEST_CASE("coefficients follow the large-order form at n = 200") {
  const auto a = shared_store().anharmonic(200);
  const BigReal n(200);
  const BigReal leading = sqrt(6 / pow(pi(), 3)) * pow(BigReal(3), 200) * gamma(BigReal(n + BigReal("0.5")));
  const BigReal ratio = -to_big(a[200]) / leading;
  CHECK(abs(ratio - 1) < BigReal("0.02"));
}

TEST_CASE("plateau of the order-249 transformed series") {
  const auto hs = oscillator(249);
  CHECK(matches_printed(evaluate(hs, BigReal("1.139689002700")), "0.667975902279"));
  const BigReal plateau = evaluate(hs, BigReal(3));
  CHECK(abs(plateau - pinned_constants().at("E0_EXACT")) < BigReal("1e-9"));
  // Perturbative breakdown past x ~ 3.2.
  CHECK(abs(evaluate(hs, BigReal("3.4")) - plateau) > BigReal("1e-3"));
  CHECK(abs(evaluate(hs, BigReal("3.0")) - plateau) < BigReal("1e-9"));
}

TEST_CASE("largest root is the most accurate") {
  const auto pts = find_stationary_points(oscillator(249));
  REQUIRE(pts.size() == 3);
  const BigReal e0 = pinned_constants().at("E0_EXACT");
  const BigReal best = abs(pts.back().value - e0);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) CHECK(abs(pts[i].value - e0) > best);
}

TEST_CASE("stationary points appear at orders 28, 101 and 246") {
  const auto full = shared_store().series(Model::kAnharmonic, 249, 2);
  std::vector<std::size_t> orders;
  for (std::size_t n = 1; n <= 249; ++n) orders.push_back(n);
  const auto census = stationary_point_census(full, orders);
  std::vector<std::size_t> onsets;
  std::size_t best_even = 0;
  std::size_t best_odd = 0;
  for (const auto& row : census) {
    std::size_t& best = row.order % 2 == 0 ? best_even : best_odd;
    if (row.count > best) {
      onsets.push_back(row.order);
      best = row.count;
    }
  }
  // Odd orders carry one root from the start; even orders gain them in pairs.
  CHECK(onsets == std::vector<std::size_t>{1, 28, 101, 246});
}

TEST_CASE("correction coefficients shrink with the order") {
  std::optional<std::vector<BigReal>> prev;
  for (const std::size_t n : {28u, 101u, 249u}) {
    const auto hs = oscillator(n);
    const auto p = select_x_star(find_stationary_points(hs));
    const auto b = correction_coefficients(hs, p.x_star, 4);
    if (prev) {
      for (std::size_t i = 1; i < 4; ++i) {
        CAPTURE(n);
        CAPTURE(i);
        CHECK(abs(b[i]) < abs((*prev)[i]));
      }
    }
    prev = b;
  }
}

}  // TEST_SUITE
