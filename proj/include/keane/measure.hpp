#pragma once

#include <array>
#include <string>
#include <vector>

#include "keane/keane.hpp"

namespace keane {

// The family carries exactly two ergodic invariant probability measures; they
// are indexed here by the tower (2 or 3) whose mass they concentrate on.

using Box4 = std::array<RatInterval, 4>;

struct EnclosureOptions {
  int depth = 3;          // deeper levels feeding each enclosure (at least 2 used)
  bool use_cones = true;  // restrict deep-level directions to invariant cones
};

enum class Verdict { Pass, Inconclusive, Fail };
std::string verdict_string(Verdict v);

struct LevelEnclosure {
  Box4 direction;    // normalized tower-direction vector at this level
  Box4 component;    // measure of a single floor of each tower
  RatInterval base;  // measure of the level interval
};

// Enclosures for levels 0..k_max of the selected measure (2 or 3); requires
// k_max <= K - 2 so every level sees at least two deeper matrices.
std::vector<LevelEnclosure> enclosure_chain(const KeaneFamily& fam, int measure,
                                            int k_max, const EnclosureOptions& opt = {});

// Single-level conveniences built on enclosure_chain.
Box4 ratio_box(const KeaneFamily& fam, int measure, int k, const EnclosureOptions& opt = {});
Box4 component_measures(const KeaneFamily& fam, int measure, int k,
                        const EnclosureOptions& opt = {});
RatInterval level_measure(const KeaneFamily& fam, int measure, int k,
                          const EnclosureOptions& opt = {});

// Sharp range of w_j / (b.w) over {w in box, w >= 0, sum w = 1}; 0-based j.
RatInterval ratio_over_box(const Box4& box, const Vec4i& b, int j);
// Sharp range of b.w over the same feasible set.
RatInterval dot_over_box(const Box4& box, const Vec4i& b);

struct LemmaRow {
  std::string lemma_id;
  int k = 0;
  Verdict verdict = Verdict::Inconclusive;
  Rat bound;
  RatInterval enclosure;
  Rat margin;  // >= 0 exactly when the verdict is Pass (> 0 for strict bounds)
};

// Machine check of the per-level measure bounds for k in [k_lo, k_hi].
// Bounds that reference parameters two levels deeper are emitted only where
// those parameters exist.
std::vector<LemmaRow> lemma_suite(const KeaneFamily& fam, int k_lo, int k_hi,
                                  const EnclosureOptions& opt = {});

}  // namespace keane
