#pragma once

#include <cstdint>
#include <vector>

#include "keane/measure.hpp"

namespace keane {

// One floor of a level-k tower: the interval T^height(piece(k, tower)).
struct Floor {
  RInterval span;
  int tower = 0;    // 1..4, by name
  long height = 0;  // 0-based step within the tower
  int symbol = 0;   // base interval of the underlying map containing the floor
};

// Exact decomposition of [0,1) into the floors of the four level-k towers.
// Construction verifies that every floor sits inside a single base interval,
// that each tower returns into the level interval, and that the floors tile
// [0,1) exactly.
class FloorTable {
 public:
  static FloorTable build(const KeaneFamily& fam, int k,
                          std::int64_t budget = kDefaultStepBudget);

  int level() const { return level_; }
  const std::vector<Floor>& floors() const { return floors_; }

  // Index into floors() of the floor containing x; x must lie in [0,1).
  std::size_t locate(const Rat& x) const;

  // Number of tower-(j+1) floors among floors()[0..i), 0-based j.
  long prefix_count(std::size_t i, int j) const { return prefix_[i][j]; }

 private:
  int level_ = 0;
  std::vector<Floor> floors_;
  std::vector<std::array<long, 4>> prefix_;
};

// Enclosure of the measure of [a, b) when a single floor of tower j carries
// measure floor_measure[j-1].  Full floors contribute exactly; a floor cut by
// an endpoint contributes [0, its full measure].  The empty and full interval
// are exact.
RatInterval interval_measure(const FloorTable& table, const Box4& floor_measure,
                             const Rat& a, const Rat& b);

// Distance between points in the metric that weighs the interval between them
// by the sum of the two ergodic measures (per-floor boxes m2 and m3).
RatInterval point_distance(const FloorTable& table, const Box4& m2, const Box4& m3,
                           const Rat& x, const Rat& y);

}  // namespace keane
