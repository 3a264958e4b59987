#include "keane/keane.hpp"

#include <sstream>

namespace keane {

Mat4i keane_matrix(const Int& m, const Int& n) {
  if (m < 1 || n < 1) throw domain_error("keane_matrix: m and n must be positive");
  Mat4i A;
  A << Int(0), Int(0), Int(1), Int(1),
       m - 1,  m,      Int(0), Int(0),
       n,      n,      n - 1,  n,
       Int(1), Int(1), Int(1), Int(1);
  return A;
}

Vec4i keane_column_sums(const Int& m, const Int& n) {
  Vec4i s;
  s << m + n, m + n + 1, n + 1, n + 2;
  return s;
}

AdmissibilityReport check_admissible(const std::vector<std::pair<Int, Int>>& pairs) {
  AdmissibilityReport rep;
  auto note = [&](bool strict_only, int k, const std::string& what) {
    if (!strict_only) rep.basic = false;
    rep.strict = false;
    std::ostringstream os;
    os << "k=" << k << ": " << what;
    rep.issues.push_back(os.str());
  };
  const int K = static_cast<int>(pairs.size());
  for (int k = 1; k <= K; ++k) {
    const auto& [m, n] = pairs[k - 1];
    if (m < 2) note(false, k, "m_k < 2 (construction facts need m_k >= 2)");
    if (n < 2) note(false, k, "n_k < 2 (construction facts need n_k >= 2)");
    if (3 * (n + 1) > m) note(true, k, "3(n_k+1) <= m_k violated");
    if (k < K) {
      const Int& n_next = pairs[k].second;
      if (2 * m > n_next + 1) note(true, k, "m_k <= (n_{k+1}+1)/2 violated");
    }
  }
  if (K >= 1 && pairs[0].second <= 9) note(true, 1, "n_1 > 9 violated");
  return rep;
}

Vec4r KeaneFamily::default_seed() {
  Vec4r v;
  Rat q(1, 4);
  v << q, q, q, q;
  return v;
}

KeaneFamily::KeaneFamily(std::vector<std::pair<Int, Int>> pairs, Vec4r seed)
    : pairs_(std::move(pairs)), seed_(std::move(seed)) {
  if (pairs_.empty()) throw domain_error("KeaneFamily: need at least one (m, n) pair");
  if (!on_open_simplex(seed_)) throw domain_error("KeaneFamily: seed must be positive and sum to 1");
  const int K = static_cast<int>(pairs_.size());

  mats_.reserve(K);
  for (const auto& [m, n] : pairs_) mats_.push_back(keane_matrix(m, n));

  // Return times: b_0 = (1,1,1,1), b_k = A_k^T b_{k-1}.
  b_.resize(K + 1);
  b_[0] << Int(1), Int(1), Int(1), Int(1);
  for (int k = 1; k <= K; ++k) b_[k] = mats_[k - 1].transpose() * b_[k - 1];

  // Unnormalized level vectors u_K = seed, u_{k} = A_{k+1} u_{k+1}; the
  // all-ones fourth row of A makes sum(u_{k+1}) = u_k[4], so widths and the
  // nesting geometry come out of the same products.
  std::vector<Vec4r> u(K + 1);
  u[K] = seed_;
  for (int k = K - 1; k >= 0; --k) {
    Mat4r Aq;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) Aq(r, c) = Rat(mats_[k](r, c));
    u[k] = Aq * u[k + 1];
  }
  Rat total = vec_sum(u[0]);

  lens_.resize(K + 1);
  width_.resize(K + 1);
  left_.resize(K + 1);
  for (int k = 0; k <= K; ++k) {
    lens_[k] = normalized(u[k]);
    width_[k] = vec_sum(u[k]) / total;
  }
  left_[0] = Rat(0);
  for (int k = 0; k < K; ++k) {
    // I^(k+1) is the fourth named piece of level k.
    Rat abs4 = lens_[k][3] * width_[k];
    if (orientation(k) == Orientation::Standard)
      left_[k + 1] = left_[k] + (width_[k] - abs4);
    else
      left_[k + 1] = left_[k];
  }
}

void KeaneFamily::require_level(int k) const {
  if (k < 0 || k > K()) throw domain_error("KeaneFamily: level out of range");
}

const Int& KeaneFamily::m(int k) const {
  if (k < 1 || k > K()) throw domain_error("KeaneFamily: pair index out of range");
  return pairs_[k - 1].first;
}

const Int& KeaneFamily::n(int k) const {
  if (k < 1 || k > K()) throw domain_error("KeaneFamily: pair index out of range");
  return pairs_[k - 1].second;
}

Mat4i KeaneFamily::matrix(int k) const {
  if (k < 1 || k > K()) throw domain_error("KeaneFamily: matrix index out of range");
  return mats_[k - 1];
}

Mat4i KeaneFamily::product(int k_from, int k_to) const {
  if (k_from < 1 || k_to > K() || k_from > k_to)
    throw domain_error("KeaneFamily: bad product range");
  Mat4i P = mats_[k_from - 1];
  for (int k = k_from + 1; k <= k_to; ++k) P = P * mats_[k - 1];
  return P;
}

const Vec4i& KeaneFamily::b_vector(int k) const {
  require_level(k);
  return b_[k];
}

const Vec4r& KeaneFamily::level_lengths(int k) const {
  require_level(k);
  return lens_[k];
}

Rat KeaneFamily::level_width(int k) const {
  require_level(k);
  return width_[k];
}

RInterval KeaneFamily::level_interval(int k) const {
  require_level(k);
  return {left_[k], left_[k] + width_[k]};
}

Orientation KeaneFamily::orientation(int k) const {
  require_level(k);
  return (k % 2 == 0) ? Orientation::Standard : Orientation::Reversed;
}

int KeaneFamily::position_of_name(int k, int j) const {
  if (j < 1 || j > 4) throw domain_error("KeaneFamily: piece name out of range");
  return orientation(k) == Orientation::Standard ? j : 5 - j;
}

RInterval KeaneFamily::piece(int k, int j) const {
  int pos = position_of_name(k, j);
  Rat lo = left_[k];
  for (int p = 1; p < pos; ++p) {
    int name = orientation(k) == Orientation::Standard ? p : 5 - p;
    lo += lens_[k][name - 1] * width_[k];
  }
  return {lo, lo + lens_[k][j - 1] * width_[k]};
}

IETSpec KeaneFamily::positioned_induced(int k) const {
  require_level(k);
  std::vector<Rat> lens(4);
  std::vector<int> images(4);
  // The return system of I^(k) is the exchange built from the remaining
  // pairs; in Standard orientation its positional permutation is (3,2,4,1),
  // and reversing the naming conjugates by x -> 1-x, giving (4,1,3,2).
  static const int kStd[4] = {3, 2, 4, 1};
  if (orientation(k) == Orientation::Standard) {
    for (int p = 1; p <= 4; ++p) {
      lens[p - 1] = lens_[k][p - 1];
      images[p - 1] = kStd[p - 1];
    }
  } else {
    for (int p = 1; p <= 4; ++p) {
      int name = 5 - p;
      lens[p - 1] = lens_[k][name - 1];
      images[p - 1] = 5 - kStd[name - 1];
    }
  }
  IETSpec out{Permutation::one_line(std::move(images)), std::move(lens)};
  out.validate();
  return out;
}

IETSpec KeaneFamily::iet() const { return positioned_induced(0); }

Rat KeaneFamily::piece_shift(int k, int j) const {
  IETSpec pos = positioned_induced(k);
  int a = position_of_name(k, j);
  return (pos.image_left(a) - pos.left(a)) * width_[k];
}

Rat KeaneFamily::induced_apply(int k, const Rat& x) const {
  for (int j = 1; j <= 4; ++j)
    if (piece(k, j).contains(x)) return x + piece_shift(k, j);
  throw domain_error("KeaneFamily: point outside I^(k)");
}

}  // namespace keane
