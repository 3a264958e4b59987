#pragma once

#include "keane/permutation.hpp"
#include "keane/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace keane {

// Default global cap on exact map applications per operation; overridable
// per call and, in the CLI, via KEANE_STEP_BUDGET.
inline constexpr std::int64_t kDefaultStepBudget = 10'000'000;

// Half-open interval [lo, hi).
struct RInterval {
  Rat lo, hi;
  Rat length() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x < hi; }
};

// Interval exchange transformation on [0,1): subintervals I_1..I_n laid out
// left to right with the given lengths, images rearranged so that the image
// of I_j takes rank perm(j) from the left.  All intervals are half-open, so
// the map is total on [0,1) and discontinuity points belong to the interval
// on their right.
struct IETSpec {
  Permutation perm;
  std::vector<Rat> lengths;

  int n() const { return static_cast<int>(lengths.size()); }
  void validate() const;

  // Left endpoint of I_j and of the image of I_j, both 1-based.
  Rat left(int j) const;
  Rat image_left(int j) const;
  RInterval interval(int j) const;

  bool operator==(const IETSpec& o) const { return perm == o.perm && lengths == o.lengths; }
};

// Index j with x in I_j; x must lie in [0,1).
int interval_index(const IETSpec& iet, const Rat& x);

// One application of the exchange: T(x) = x - left(j) + image_left(j).
Rat apply(const IETSpec& iet, const Rat& x);

// Inverse application (the exchange with the inverse permutation acting on
// the image layout).
Rat apply_inverse(const IETSpec& iet, const Rat& x);

// The inverse exchange as an IETSpec of its own.
IETSpec inverse_spec(const IETSpec& iet);

struct OrbitPoint {
  Rat x;
  int symbol;  // index of the interval containing x
};

// x, T(x), ..., T^N(x) with containing-interval symbols. Throws
// resource_error if N exceeds the budget.
std::vector<OrbitPoint> orbit(const IETSpec& iet, const Rat& x, std::int64_t N,
                              std::int64_t budget = kDefaultStepBudget);

// First return map of `base` to sub = [sub.lo, sub.hi), computed by exact
// piecewise orbit stepping.  Pieces of `sub` are split only where their
// images meet a discontinuity of the map or an endpoint of `sub`, which
// yields exactly the induced partition.
struct InducedMap {
  IETSpec base;
  RInterval sub_interval;
  IETSpec induced;  // rescaled to [0,1); pieces left to right

  // Per induced piece, left to right within sub:
  std::vector<RInterval> pieces;             // piece domains inside sub
  std::vector<std::int64_t> return_times;    // first return time of each piece
  std::vector<std::vector<std::int64_t>> landing_pattern;
  // landing_pattern[i][j] = visits of piece j to base interval I_{i+1} at
  // steps 0..return_times[j]-1 (the start counts, the return does not).
};

InducedMap first_return(const IETSpec& iet, const RInterval& sub,
                        std::int64_t budget = kDefaultStepBudget);

}  // namespace keane
