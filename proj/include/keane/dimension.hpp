#pragma once

#include "keane/floor_table.hpp"

namespace keane {

// Level-k two-sided bounds for the Hausdorff dimension of one ergodic measure
// with respect to the metric generated by the other.  `direction` names the
// measure whose dimension is bounded: direction 2 bounds dim(measure 2) in
// the measure-3 metric, direction 3 the converse.
//
//   upper_k = ln(b_{k,d}) / -ln(other-measure of one tower-d floor)
//   lower_k = -ln(own-measure of one tower-d floor) / same denominator
//
// A row is flagged (and excluded from the running minimum) when a floor
// measure enclosure reaches 1, which makes a logarithm sign-indefinite.
struct DimRow {
  int k = 0;
  int direction = 0;
  bool flagged = false;
  RatInterval upper;
  RatInterval lower;
  bool has_running = false;
  Rat running_min_hi;  // least upper.hi among unflagged rows up to here
};

std::vector<DimRow> dim_bounds(const KeaneFamily& fam, int direction, int k_max,
                               const EnclosureOptions& opt = {}, int digits = 60);

// Decay slope of one scale against the next:
//   ln(b_{k,2}) / -ln(m_{k+1} / (n_{k+1} n_{k+2} b_{k,3})),  needs k+2 <= K.
RatInterval slope_estimate(const KeaneFamily& fam, int k, int digits = 60);

// Tower-1 covering statistics at level k (k+1 <= K):
//   literal    = (b_{k,1} / n_{k+1})^(1/k) * b_{k,3}
//   normalized = (b_{k,1} / (n_{k+1} b_{k,3}))^(1/k) * b_{k,3}
// compared against the threshold 1/k by the callers.
struct CoveringRow {
  int k = 0;
  RatInterval literal;
  RatInterval normalized;
  Rat bound;
};
CoveringRow covering_row(const KeaneFamily& fam, int k, int digits = 60);

// Number of tower-1 revisit phases at level k and how many of them start
// later than b_{k,1}/eps - b_{k,4}.
struct PhaseCount {
  Int total;
  Int late;
};
PhaseCount phase_count(const KeaneFamily& fam, int k, const Rat& eps);

// First hitting time of the tower-1 orbit: least n >= 0 with T^n(x) in a
// tower-1 floor of table.level().  The direct version walks the orbit; the
// tower version telescopes whole towers and never steps point by point.
Int hit_time_direct(const KeaneFamily& fam, const FloorTable& table, const Rat& x,
                    std::int64_t budget = kDefaultStepBudget);
Int hit_time_towers(const KeaneFamily& fam, const FloorTable& table, const Rat& x,
                    std::int64_t budget = kDefaultStepBudget);

}  // namespace keane
