#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "keane/dimension.hpp"
#include "keane/rules.hpp"

using namespace keane;

TEST_CASE("logarithm enclosures are tight and directionally correct") {
  const RatInterval ln1 = ln_bounds(Rat(1), 40);
  CHECK(ln1.contains(Rat(0)));
  CHECK(ln1.width() < make_rat(1, ipow(Int(10), 35)));

  const RatInterval ln2 = ln_bounds(Rat(2), 60);
  CHECK(ln2.lo > make_rat(693147180559945, ipow(Int(10), 15)));
  CHECK(ln2.hi < make_rat(693147180559946, ipow(Int(10), 15)));
  CHECK(ln2.width() < make_rat(1, ipow(Int(10), 50)));

  // ln(1/2) = -ln(2): the enclosures must overlap after negation.
  const RatInterval lnhalf = ln_bounds(make_rat(1, 2), 60);
  CHECK(lnhalf.hi < 0);
  CHECK(ln2.lo + lnhalf.lo <= 0);
  CHECK(ln2.hi + lnhalf.hi >= 0);

  // More digits never widen.
  const RatInterval coarse = ln_bounds(make_rat(7, 3), 20);
  const RatInterval fine = ln_bounds(make_rat(7, 3), 80);
  CHECK(coarse.contains(fine));

  CHECK_THROWS_AS(ln_bounds(Rat(0), 30), domain_error);
  CHECK_THROWS_AS(ln_bounds(Rat(-2), 30), domain_error);
}

TEST_CASE("power enclosures bracket integer roots exactly enough") {
  const RatInterval sqrt2 = pow_bounds(Rat(2), 1, 2, 40);
  CHECK(sqrt2.lo * sqrt2.lo <= 2);
  CHECK(sqrt2.hi * sqrt2.hi >= 2);
  CHECK(sqrt2.width() < make_rat(1, ipow(Int(10), 35)));
  const RatInterval cube = pow_bounds(Rat(8), 1, 3, 30);
  CHECK(cube.contains(Rat(2)));
}

TEST_CASE("dimension bound rows carry a correct running minimum") {
  const KeaneFamily fam(rule_power_m(6).pairs);
  for (int direction : {2, 3}) {
    const auto rows = dim_bounds(fam, direction, 4, {2, true});
    REQUIRE(rows.size() == 4);
    Rat best;
    bool have_best = false;
    int k = 1;
    for (const auto& row : rows) {
      CHECK(row.k == k++);
      CHECK(row.direction == direction);
      if (!row.flagged) {
        CHECK(row.upper.lo > 0);
        CHECK(row.lower.lo > 0);
        CHECK(row.upper.lo <= row.upper.hi);
        if (!have_best || row.upper.hi < best) best = row.upper.hi;
        have_best = true;
      }
      CHECK(row.has_running == have_best);
      if (row.has_running) CHECK(row.running_min_hi == best);
    }
  }
  CHECK_THROWS_AS(dim_bounds(fam, 1, 2), domain_error);
  CHECK_THROWS_AS(dim_bounds(fam, 3, 5), domain_error);  // needs two deeper levels
}

TEST_CASE("covering statistics show the raw ratio diverging and the normalized one small") {
  const KeaneFamily fam(rule_generic(4).pairs);
  const CoveringRow row2 = covering_row(fam, 2);
  CHECK(row2.bound == make_rat(1, 2));
  CHECK(row2.literal.lo > make_rat(66057, 10000));
  CHECK(row2.literal.hi < make_rat(66058, 10000));
  CHECK(row2.normalized.lo > make_rat(29781, 100000));
  CHECK(row2.normalized.hi < make_rat(29782, 100000));
  CHECK(row2.normalized.hi < row2.bound);
  CHECK(row2.literal.lo > row2.bound);

  const CoveringRow row3 = covering_row(fam, 3);
  CHECK(row3.bound == make_rat(1, 3));
  CHECK(row3.literal.lo > Rat(231));
  CHECK(row3.literal.hi < Rat(232));
  CHECK(row3.normalized.lo > make_rat(9422, 100000));
  CHECK(row3.normalized.hi < make_rat(9423, 100000));
  CHECK(row3.normalized.hi < row3.bound);

  CHECK_THROWS_AS(covering_row(fam, 0), domain_error);
  CHECK_THROWS_AS(covering_row(fam, 4), domain_error);  // needs the next multiplicity
}

TEST_CASE("revisit phases are counted exactly") {
  const KeaneFamily fam(rule_generic(3).pairs);
  const PhaseCount pc = phase_count(fam, 1, make_rat(1, 4));
  CHECK(pc.total == Int(451));
  CHECK(pc.late == Int(303));
  CHECK(pc.late * 2 > pc.total);  // most phases start late
  // A coarser eps moves the lateness cutoff earlier, so more phases count.
  const PhaseCount coarse = phase_count(fam, 1, Rat(1));
  CHECK(coarse.total == Int(451));
  CHECK(coarse.late == Int(423));
  CHECK(coarse.late >= pc.late);
}

TEST_CASE("first hits of the slow tower agree between orbit walking and tower hopping") {
  const KeaneFamily fam(rule_generic(3).pairs);
  const FloorTable table = FloorTable::build(fam, 1);
  const Vec4i& b = fam.b_vector(1);

  SUBCASE("points already inside tower 1 hit at time zero") {
    int tower1_floors = 0;
    for (const Floor& floor : table.floors()) {
      if (floor.tower != 1) continue;
      const Rat mid = (floor.span.lo + floor.span.hi) / 2;
      CHECK(hit_time_direct(fam, table, mid) == 0);
      CHECK(hit_time_towers(fam, table, mid) == 0);
      ++tower1_floors;
    }
    CHECK(Int(tower1_floors) == b[0]);
  }

  SUBCASE("a column that returns into tower 1 hits at its remaining height") {
    // The return map of the fourth piece is a translation; the preimage of
    // the first piece's left endpoint climbs the tower-4 column and enters
    // tower 1 exactly at the return.
    const Rat target = fam.piece(1, 1).lo;
    const Rat base_point = target - fam.piece_shift(1, 4);
    REQUIRE(fam.piece(1, 4).contains(base_point));
    const long height = static_cast<long>(b[3].get_si());
    Rat point = base_point;
    for (long h = 0; h <= height; ++h) {
      const Int expected = b[3] - h;
      CHECK(hit_time_direct(fam, table, point) == expected);
      CHECK(hit_time_towers(fam, table, point) == expected);
      point = apply(fam.iet(), point);
    }
  }

  SUBCASE("when the budget is too small, both strategies refuse alike") {
    // Midpoint of a floor of the big tower: the true hit time is enormous.
    const Floor* deep = nullptr;
    for (const Floor& floor : table.floors())
      if (floor.tower == 2) { deep = &floor; break; }
    REQUIRE(deep != nullptr);
    const Rat mid = (deep->span.lo + deep->span.hi) / 2;
    CHECK_THROWS_AS(hit_time_direct(fam, table, mid, 2000), resource_error);
    CHECK_THROWS_AS(hit_time_towers(fam, table, mid, 2000), resource_error);
  }
}

TEST_CASE("decay slope enclosures are positive, tight, and range-checked") {
  const KeaneFamily fam(rule_alpha2(6, make_rat(1, 2)).pairs);
  const RatInterval s1 = slope_estimate(fam, 1);
  CHECK(s1.lo > make_rat(287859, 1000000));
  CHECK(s1.hi < make_rat(287861, 1000000));
  const RatInterval s4 = slope_estimate(fam, 4);
  CHECK(s4.lo > 0);
  CHECK(s4.hi < s1.lo);
  CHECK_THROWS_AS(slope_estimate(fam, 5), domain_error);  // needs two deeper multiplicities
  CHECK_THROWS_AS(slope_estimate(fam, 0), domain_error);
}
