#pragma once

#include "keane/dimension.hpp"

namespace keane {

// Covering check at level k: the mass measure 2 gives the non-tower-2 floors
// of level k-1 is bounded by the tower-3 contribution at level k plus a
// widening of 2c per covering floor at radius M^(-exponent), where
// M = floor(n_k b_{k-1,3} / (k-1)^2).  Both sides are evaluated at the upper
// enclosure endpoints, so c = 0 degenerates to an exact identity with margin
// zero.  Requires 2 <= k <= K-2.
struct ControlledNiceResult {
  int k = 0;
  Rat c;
  Rat exponent;
  Int scale;            // M
  RatInterval radius;   // M^(-exponent)
  Rat lhs_hi;
  Rat rhs_hi;
  Rat margin;           // rhs_hi - lhs_hi
  Verdict verdict = Verdict::Inconclusive;
};
ControlledNiceResult controlled_nice_check(const KeaneFamily& fam, int k, const Rat& c,
                                           const Rat& exponent,
                                           const EnclosureOptions& opt = {},
                                           int digits = 60);

// Mass measure 3 gives the non-tower-3 floors at level k, against the
// parameter bound b_{k,1}/n_{k+1} + 2 b_{k,2} m_{k+1}/(n_{k+1} n_{k+2})
// + b_{k,4}/n_{k+1}.  Also reports two exact side conditions: every product
// b_{k,i} b_{k,2} (i != 2) stays below n_{k+1}, and the witness sequence
// 1/t^2 + 3/b_{t,2} decreases up to k.  Requires 1 <= k <= K-2.
struct ControlMostResult {
  int k = 0;
  Rat lhs_hi;
  Rat rhs;
  Verdict verdict = Verdict::Inconclusive;
  bool products_below_next_n = false;
  bool witness_decreasing = false;
};
ControlMostResult control_most_bound(const KeaneFamily& fam, int k,
                                     const EnclosureOptions& opt = {});

// Pointwise recurrence statistic n^exponent * d(T^n x, y) for n = 1..N in the
// metric weighing intervals by the sum of the two ergodic measures (per-floor
// boxes m2/m3 on table.level()).  The run records every step and the running
// minimum of the statistic's upper endpoint; it is truncated at `budget`
// steps when N exceeds it.  The verdict compares the final running minimum
// with `threshold`: Pass when it certainly dips below, Fail when even the
// lower endpoints never did.
struct RecurrenceRecord {
  long n = 0;
  RatInterval distance;
  RatInterval stat;
  Rat running_min_hi;
};
struct RecurrenceRun {
  int level = 0;
  Rat exponent;
  Rat x, y;
  long requested = 0;
  bool truncated = false;
  Rat threshold;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<RecurrenceRecord> records;
};
RecurrenceRun recurrence_stat(const KeaneFamily& fam, const FloorTable& table,
                              const Box4& m2, const Box4& m3, const Rat& x,
                              const Rat& y, const Rat& exponent, long N,
                              const Rat& threshold,
                              std::int64_t budget = kDefaultStepBudget,
                              int digits = 30);

}  // namespace keane
