#include <doctest.h>

#include <cmath>

#include "qsd/polygon.hpp"

using namespace qsd;

TEST_CASE("polygon_theory: construction and geometric invariants") {
  CHECK_THROWS_AS(polygon_theory(5), OddNUnsupported);
  CHECK_THROWS_AS(polygon_theory(2), InvalidArgument);
  CHECK_THROWS_AS(polygon_theory(66), InvalidArgument);

  for (int n : {4, 6, 8, 10, 12}) {
    CAPTURE(n);
    const PolygonTheory t = polygon_theory(n);
    CHECK(t.k() == doctest::Approx(std::sqrt(1.0 / std::cos(M_PI / n))).epsilon(1e-12));
    for (int j = 1; j <= n; ++j) {
      CHECK(t.state(j).z == 1.0);
      CHECK(t.effect(j).z == 0.5);
      CHECK(gpt_prob(t.unit(), t.state(j)) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(gpt_prob(t.effect(j), t.state(j)) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(gpt_prob(t.effect(j), t.state(j - 1)) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(max_abs_diff(t.effect(j) + t.effect(j + n / 2), t.unit()) < 1e-12);
      for (int i = 1; i <= n; ++i) {
        const double v = gpt_prob(t.effect(i), t.state(j));
        CHECK(v >= -1e-12);
        CHECK(v <= 1.0 + 1e-12);
      }
    }
    // index wrap-around: j and j + n address the same element
    CHECK(max_abs_diff(t.state(1), t.state(1 + n)) == 0.0);
  }

  const PolygonTheory hx = polygon_theory(6);
  CHECK(hx.k() == doctest::Approx(1.07456993182354).epsilon(1e-10));
  CHECK(gpt_prob(hx.effect(1), hx.state(5)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gpt_prob basics") {
  const PolygonTheory hx = polygon_theory(6);
  CHECK(gpt_prob(GptVector{0, 0, 0}, hx.state(3)) == 0.0);
  const HexagonScenario s = hexagon_scenario(0.4);
  CHECK(gpt_prob(hx.effect(1), s.sigma2) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("hexagon_scenario") {
  CHECK_THROWS_AS(hexagon_scenario(-0.1), InvalidP);
  CHECK_THROWS_AS(hexagon_scenario(1.1), InvalidP);

  const PolygonTheory hx = polygon_theory(6);
  const HexagonScenario degenerate = hexagon_scenario(0.0);
  CHECK(max_abs_diff(degenerate.sigma1, hx.state(6)) < 1e-12);
  CHECK(max_abs_diff(degenerate.sigma2, hx.state(6)) < 1e-12);

  const HexagonScenario extremal = hexagon_scenario(1.0);
  CHECK(max_abs_diff(extremal.sigma1, hx.state(1)) < 1e-12);
  CHECK(max_abs_diff(extremal.sigma2, hx.state(5)) < 1e-12);

  const HexagonScenario mid = hexagon_scenario(0.5);
  CHECK(mid.c_value == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(mid.s_value == doctest::Approx(0.75).epsilon(1e-12));

  SUBCASE("both decompositions mix to the same centre state") {
    for (int i = 0; i <= 100; ++i) {
      const HexagonScenario s = hexagon_scenario(i / 100.0);
      CHECK(max_abs_diff(0.5 * s.sigma1 + 0.5 * s.sigma1_perp,
                         0.5 * s.sigma2 + 0.5 * s.sigma2_perp) < 1e-12);
    }
  }
}

TEST_CASE("hexagon_outcome_table matches the closed-form pattern") {
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    const double c = 1.0 - p / 2.0;
    const double s = (1.0 + p) / 2.0;
    const auto table = hexagon_outcome_table(p);
    const double want[3][4] = {{1.0, c, 0.0, 1.0 - c},
                               {c, 1.0, 1.0 - c, 0.0},
                               {s, 1.0 - s, 1.0 - s, s}};
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 4; ++col) {
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(col);
        CHECK(std::abs(table[r][col] - want[r][col]) <= 1e-12);
      }
  }

  // spot values: p = 1 first row, p = 0 third row
  const auto extremal = hexagon_outcome_table(1.0);
  CHECK(extremal[0][0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(extremal[0][1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(extremal[0][2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(extremal[0][3] == doctest::Approx(0.5).epsilon(1e-12));
  const auto degenerate = hexagon_outcome_table(0.0);
  for (int col = 0; col < 4; ++col)
    CHECK(degenerate[2][col] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gpt_success") {
  const PolygonTheory hx = polygon_theory(6);

  SUBCASE("the paired measurement M3 succeeds with (1+p)/2 for any prior") {
    for (double p : {0.0, 0.3, 0.6, 1.0})
      for (double p1 : {0.1, 0.5, 0.9}) {
        const HexagonScenario s = hexagon_scenario(p);
        CHECK(gpt_success(s, p1, s.measurements[2]) ==
              doctest::Approx((1.0 + p) / 2.0).epsilon(1e-12));
      }
  }

  SUBCASE("trivial measurement returns the prior") {
    const HexagonScenario s = hexagon_scenario(0.7);
    CHECK(gpt_success(s, 0.3, {hx.unit(), GptVector{}}) ==
          doctest::Approx(0.3).epsilon(1e-12));
  }

  SUBCASE("M1 at p = 1 with equal priors") {
    const HexagonScenario s = hexagon_scenario(1.0);
    // e4(sigma2) = e4(w5) = 1/2, so the value lands on 3/4.
    CHECK(gpt_prob(hx.effect(4), hx.state(5)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gpt_success(s, 0.5, s.measurements[0]) == doctest::Approx(0.75).epsilon(1e-12));
  }

  SUBCASE("effects that do not close to the unit are rejected") {
    const HexagonScenario s = hexagon_scenario(0.5);
    CHECK_THROWS_AS(gpt_success(s, 0.5, {hx.effect(1), hx.effect(2)}), InvalidMeasurement);
  }
}

TEST_CASE("hexagon_nc_bound") {
  CHECK(hexagon_nc_bound(1.0, 0.5) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(hexagon_nc_bound(0.0, 0.3) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(hexagon_nc_bound(0.5, 0.5) == doctest::Approx(0.625).epsilon(1e-12));
  CHECK_THROWS_AS(hexagon_nc_bound(1.5, 0.5), InvalidP);
  CHECK_THROWS_AS(hexagon_nc_bound(0.5, -0.5), InvalidP);
}

TEST_CASE("gpt_brute_force") {
  const PolygonTheory hx = polygon_theory(6);

  SUBCASE("hexagon: M3 is optimal among extremal binary measurements") {
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      const HexagonScenario s = hexagon_scenario(p);
      const double brute = gpt_brute_force(s, 0.5, hx);
      CHECK(brute == doctest::Approx((1.0 + p) / 2.0).epsilon(1e-12));
      CHECK(brute >= gpt_success(s, 0.5, s.measurements[2]) - 1e-12);
    }
    CHECK(gpt_brute_force(hexagon_scenario(0.6), 0.5, hx) ==
          doctest::Approx(0.8).epsilon(1e-12));
  }

  SUBCASE("identical states at p = 0 reduce to guessing the prior") {
    for (double p1 : {0.2, 0.5, 0.8})
      CHECK(gpt_brute_force(hexagon_scenario(0.0), p1, hx) ==
            doctest::Approx(std::max(p1, 1.0 - p1)).epsilon(1e-12));
  }

  SUBCASE("octagon analogue via the exhaustive oracle") {
    const PolygonTheory oct = polygon_theory(8);
    for (double p : {0.25, 0.5, 0.75, 1.0}) {
      const PolygonScenario s = polygon_scenario(oct, p);
      const double brute = gpt_brute_force(s, 0.5, oct);
      // the paired analogue of M3 is a feasible point of the search
      const double m3 = 0.5 * gpt_prob(oct.effect(2), s.sigma1) +
                        0.5 * gpt_prob(oct.unit() - oct.effect(2), s.sigma2);
      CHECK(brute >= m3 - 1e-12);
      CHECK(brute >= 0.5);
      CHECK(brute <= 1.0 + 1e-12);
    }
    // spot value at p = 1: best pair is {e2, e6} with e2(w1) = 1 and
    // e6(w7) = (1 + tan(pi/8))/2, so the oracle lands on (2 + sqrt 2)/4
    const PolygonScenario s = polygon_scenario(oct, 1.0);
    CHECK(gpt_brute_force(s, 0.5, oct) ==
          doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-12));
  }
}

TEST_CASE("advantage_scan") {
  std::vector<double> p_grid;
  for (int i = 0; i <= 100; ++i) p_grid.push_back(i / 100.0);

  const std::vector<AdvantageRow> rows = advantage_scan(p_grid, {0.5});
  REQUIRE(rows.size() == 101);
  for (const AdvantageRow& row : rows) {
    CAPTURE(row.p);
    CHECK(row.advantage == doctest::Approx(row.p / 4.0).epsilon(1e-12));
    CHECK(row.success == doctest::Approx((1.0 + row.p) / 2.0).epsilon(1e-12));
  }
  CHECK(rows.front().advantage == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rows.back().success == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows.back().nc_bound == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(rows.back().advantage == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rows[50].advantage == doctest::Approx(0.125).epsilon(1e-12));

  SUBCASE("unequal priors at p = 0 yield no advantage") {
    const std::vector<AdvantageRow> skew = advantage_scan({0.0}, {0.0, 0.25, 0.5, 0.75, 1.0});
    for (const AdvantageRow& row : skew) {
      CHECK(row.advantage ==
            doctest::Approx(0.5 - std::max(row.p1, 1.0 - row.p1)).epsilon(1e-12));
      CHECK(row.advantage <= 1e-12);
    }
  }
}
