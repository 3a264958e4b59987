#pragma once

#include "keane/rational.hpp"

#include <vector>

namespace keane {

// Permutation in one-line notation: images[j-1] = pi(j), the rank the j-th
// subinterval's image takes from the left after the exchange.
struct Permutation {
  std::vector<int> images;

  static Permutation one_line(std::vector<int> imgs) {
    Permutation p{std::move(imgs)};
    p.validate();
    return p;
  }

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int j) const { return images.at(j - 1); }

  void validate() const {
    int n = size();
    if (n < 2) throw domain_error("Permutation: need at least 2 letters");
    std::vector<bool> seen(n + 1, false);
    for (int v : images) {
      if (v < 1 || v > n || seen[v]) throw domain_error("Permutation: not a bijection on 1..n");
      seen[v] = true;
    }
  }

  Permutation inverse() const {
    std::vector<int> inv(images.size());
    for (int j = 1; j <= size(); ++j) inv[(*this)(j) - 1] = j;
    return Permutation{std::move(inv)};
  }

  bool is_identity() const {
    for (int j = 1; j <= size(); ++j)
      if ((*this)(j) != j) return false;
    return true;
  }

  bool operator==(const Permutation& o) const { return images == o.images; }
};

}  // namespace keane
