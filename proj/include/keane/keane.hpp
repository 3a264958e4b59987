#pragma once

#include "keane/iet.hpp"
#include "keane/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace keane {

// Visit-count matrix of one inducing step with multiplicities (m, n):
// column j lists how often the j-th sub-tower passes through each base
// interval before first return.
Mat4i keane_matrix(const Int& m, const Int& n);

// Column sums of keane_matrix(m, n): (m+n, m+n+1, n+1, n+2).
Vec4i keane_column_sums(const Int& m, const Int& n);

// Parameter sequence (m_k, n_k), k = 1..K, with the generating rule recorded
// for serialization.
struct ParamSeq {
  std::string rule;                        // "explicit", "minimal-admissible", ...
  std::optional<Rat> alpha;                // present for alpha-indexed rules
  std::vector<std::pair<Int, Int>> pairs;  // (m_k, n_k)
};

// Admissibility report.  `basic` is the regime where the construction's
// ordering/travel facts hold (all m_k, n_k >= 2).  `strict` additionally
// requires n_1 > 9, 3(n_k+1) <= m_k for all k, and m_k <= (n_{k+1}+1)/2 for
// all k with a successor.  Violations are listed as human-readable warnings;
// nothing throws, since finitely many constraint violations are harmless for
// the limit behaviour the parameters are designed for.
struct AdmissibilityReport {
  bool basic = true;
  bool strict = true;
  std::vector<std::string> issues;
};
AdmissibilityReport check_admissible(const std::vector<std::pair<Int, Int>>& pairs);

// Left-to-right order of the named pieces at a level: Standard means
// I_1..I_4, Reversed means I_4..I_1.  Orientation alternates with the level
// because each inducing step reverses the naming.
enum class Orientation { Standard, Reversed };

// The finite-depth tower family: an interval exchange on [0,1) whose first
// return maps to a nested chain of intervals I^(0) ⊇ I^(1) ⊇ ... ⊇ I^(K)
// realize the visit matrices A_{m_k,n_k}.  All data is derived exactly from
// the pair sequence and a positive seed vector on the simplex.
class KeaneFamily {
 public:
  explicit KeaneFamily(std::vector<std::pair<Int, Int>> pairs, Vec4r seed = default_seed());
  static Vec4r default_seed();  // (1/4, 1/4, 1/4, 1/4)

  int K() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<Int, Int>>& pairs() const { return pairs_; }
  const Int& m(int k) const;  // 1-based
  const Int& n(int k) const;  // 1-based

  Mat4i matrix(int k) const;                  // A_{m_k,n_k}, 1 <= k <= K
  Mat4i product(int k_from, int k_to) const;  // A_{k_from}···A_{k_to}, inclusive

  // First-return times b_{k,j} of the level-k pieces, 0 <= k <= K
  // (b_0 = (1,1,1,1)).
  const Vec4i& b_vector(int k) const;

  // Normalized piece lengths at level k relative to I^(k); level 0 gives the
  // lengths of the exchange itself.
  const Vec4r& level_lengths(int k) const;

  // Absolute geometry.
  Rat level_width(int k) const;                    // |I^(k)|
  RInterval level_interval(int k) const;           // I^(k) in [0,1)
  Orientation orientation(int k) const;            // piece order at level k
  int position_of_name(int k, int j) const;        // 1..4 from the left
  RInterval piece(int k, int j) const;             // I_j^(k), named, absolute
  Rat piece_shift(int k, int j) const;             // translation of the return map on I_j^(k)
  Rat induced_apply(int k, const Rat& x) const;    // first-return map of I^(k), absolute coords

  // The exchange itself.
  IETSpec iet() const;

  // The level-k return system rescaled to [0,1) with pieces in positional
  // (left-to-right) order; equals iet() at k = 0.
  IETSpec positioned_induced(int k) const;

 private:
  std::vector<std::pair<Int, Int>> pairs_;
  Vec4r seed_;
  std::vector<Mat4i> mats_;    // A_k, index k-1
  std::vector<Vec4i> b_;       // b_k, index k
  std::vector<Vec4r> lens_;    // normalized level lengths, index k
  std::vector<Rat> width_;     // |I^(k)|, index k
  std::vector<Rat> left_;      // left endpoint of I^(k), index k
  void require_level(int k) const;
};

}  // namespace keane
