#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "keane/recurrence.hpp"
#include "keane/rules.hpp"

using namespace keane;

TEST_CASE("covering check degenerates to an exact identity without widening") {
  const KeaneFamily fam(rule_appendix(4).pairs);
  const ControlledNiceResult res = controlled_nice_check(fam, 2, Rat(0), make_rat(1, 2));
  CHECK(res.margin == 0);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.lhs_hi == res.rhs_hi);
  CHECK(res.scale == Int(4851));
  CHECK(res.radius.lo > make_rat(1, 70));
  CHECK(res.radius.hi < make_rat(1, 69));
}

TEST_CASE("covering margin grows with the widening constant") {
  const KeaneFamily fam(rule_appendix(4).pairs);
  const Rat m0 = controlled_nice_check(fam, 2, Rat(0), make_rat(1, 2)).margin;
  const Rat m_half = controlled_nice_check(fam, 2, make_rat(1, 2), make_rat(1, 2)).margin;
  const Rat m1 = controlled_nice_check(fam, 2, Rat(1), make_rat(1, 2)).margin;
  CHECK(m0 == 0);
  CHECK(m_half >= m0);
  CHECK(m1 >= m_half);
  CHECK(m1 > 1);  // comfortably positive at unit widening
  // A flatter radius exponent also passes.
  const ControlledNiceResult flat = controlled_nice_check(fam, 2, Rat(1), make_rat(1, 3));
  CHECK(flat.verdict == Verdict::Pass);
}

TEST_CASE("covering check validates its level and exponent") {
  const KeaneFamily fam(rule_appendix(4).pairs);
  CHECK_THROWS_AS(controlled_nice_check(fam, 1, Rat(1), make_rat(1, 2)), domain_error);
  CHECK_THROWS_AS(controlled_nice_check(fam, 3, Rat(1), make_rat(1, 2)), domain_error);
  CHECK_THROWS_AS(controlled_nice_check(fam, 2, Rat(1), Rat(0)), domain_error);
  CHECK_THROWS_AS(controlled_nice_check(fam, 2, Rat(1), Rat(-1)), domain_error);
  CHECK_THROWS_AS(controlled_nice_check(fam, 2, Rat(-1), make_rat(1, 2)), domain_error);
}

TEST_CASE("mass outside the fast tower stays under the parameter bound") {
  const KeaneFamily fam(rule_appendix(4).pairs);
  const ControlMostResult res = control_most_bound(fam, 2);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.lhs_hi < res.rhs);
  CHECK(res.products_below_next_n);
  CHECK(res.witness_decreasing);
  CHECK(res.rhs < make_rat(1, 10000));  // the bound itself is already tiny
  CHECK_THROWS_AS(control_most_bound(fam, 0), domain_error);
  CHECK_THROWS_AS(control_most_bound(fam, 3), domain_error);
}

TEST_CASE("recurrence statistic runs record exact products and running minima") {
  const KeaneFamily fam(rule_appendix(4).pairs);
  const FloorTable table = FloorTable::build(fam, 1);
  const Box4 m2 = component_measures(fam, 2, 1);
  const Box4 m3 = component_measures(fam, 3, 1);
  const Rat x = make_rat(1, 7), y = make_rat(2, 7);
  const RecurrenceRun run =
      recurrence_stat(fam, table, m2, m3, x, y, make_rat(1, 2), 40, Rat(1));
  REQUIRE(run.records.size() == 40);
  CHECK(!run.truncated);
  CHECK(run.requested == 40);
  Rat best = run.records.front().stat.hi;
  long n = 1;
  for (const auto& record : run.records) {
    CHECK(record.n == n++);
    CHECK(record.distance.lo >= 0);
    CHECK(record.distance.lo <= record.distance.hi);
    // The statistic is n^(1/2) times the distance.
    const RatInterval scale = pow_bounds(Rat(record.n), 1, 2, 30);
    CHECK(record.stat.lo >= scale.lo * record.distance.lo);
    CHECK(record.stat.hi <= scale.hi * record.distance.hi);
    best = std::min(best, record.stat.hi);
    CHECK(record.running_min_hi == best);
  }
}

TEST_CASE("recurrence verdicts reflect the threshold honestly") {
  const KeaneFamily fam(rule_appendix(4).pairs);
  const FloorTable table = FloorTable::build(fam, 1);
  const Box4 m2 = component_measures(fam, 2, 1);
  const Box4 m3 = component_measures(fam, 3, 1);
  const Rat x = make_rat(1, 7), y = make_rat(2, 7);
  // A dip below the threshold must be certain for Pass, impossible for Fail.
  const auto recomputed = [](const RecurrenceRun& run) {
    bool surely_below = false, possibly_below = false;
    for (const auto& record : run.records) {
      if (record.stat.hi < run.threshold) surely_below = true;
      if (record.stat.lo < run.threshold) possibly_below = true;
    }
    return surely_below ? Verdict::Pass
                        : (possibly_below ? Verdict::Inconclusive : Verdict::Fail);
  };
  for (const Rat& threshold :
       {Rat(100), Rat(1), make_rat(1, 1000000), Rat(0)}) {
    const RecurrenceRun run =
        recurrence_stat(fam, table, m2, m3, x, y, make_rat(1, 2), 10, threshold);
    CHECK(run.verdict == recomputed(run));
  }
  // Distances are bounded by the total mass, so a generous threshold always
  // certifies a dip; a zero threshold can never be undercut.
  const RecurrenceRun pass =
      recurrence_stat(fam, table, m2, m3, x, y, make_rat(1, 2), 10, Rat(100));
  CHECK(pass.verdict == Verdict::Pass);
  const RecurrenceRun fail =
      recurrence_stat(fam, table, m2, m3, x, y, make_rat(1, 2), 10, Rat(0));
  CHECK(fail.verdict == Verdict::Fail);
}

TEST_CASE("recurrence runs truncate at the step budget and say so") {
  const KeaneFamily fam(rule_appendix(4).pairs);
  const FloorTable table = FloorTable::build(fam, 1);
  const Box4 m2 = component_measures(fam, 2, 1);
  const Box4 m3 = component_measures(fam, 3, 1);
  const RecurrenceRun run = recurrence_stat(fam, table, m2, m3, make_rat(1, 7), make_rat(2, 7),
                                            make_rat(1, 2), 50, Rat(1), 10);
  CHECK(run.truncated);
  CHECK(run.requested == 50);
  CHECK(run.records.size() == 10);
}
