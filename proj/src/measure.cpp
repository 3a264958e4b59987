#include "keane/measure.hpp"

#include <algorithm>
#include <numeric>

namespace keane {

namespace {

void require_measure(int measure) {
  if (measure != 2 && measure != 3)
    throw domain_error("measure index must be 2 or 3");
}

// Vertices of the region the deep-level direction vector is known to lie in.
// Without cones (or where the parameter conditions for invariance fail) this
// is the full probability simplex; with them, a sub-simplex pinned to the
// dominant tower.  The cone is used only at levels strictly deeper than the
// level being enclosed, so the certified output never feeds its own input.
std::vector<Vec4r> deep_vertices(const KeaneFamily& fam, int measure, int level,
                                 bool use_cones) {
  auto unit = [](int j) {
    Vec4r e = Vec4r::Zero();
    e[j] = 1;
    return e;
  };
  auto blend = [&](int apex, const Rat& c, int s) {
    Vec4r v = Vec4r::Zero();
    v[apex] = c;
    v[s] += 1 - c;
    return v;
  };
  const int K = fam.K();
  const int apex = measure - 1;  // 0-based coordinate of the dominant tower

  bool valid = use_cones;
  Rat c;
  if (measure == 2) {
    for (int t = level + 1; valid && t <= K; ++t)
      if (!(fam.m(t) >= 3 * fam.n(t) && fam.n(t) >= 2)) valid = false;
    c = make_rat(1, 4);
  } else {
    for (int t = level + 1; valid && t <= K; ++t)
      if (!(3 * (fam.n(t) + 1) <= fam.m(t))) valid = false;
    for (int t = level + 1; valid && t < K; ++t)
      if (!(2 * fam.m(t) <= fam.n(t + 1) + 1)) valid = false;
    if (level < K)
      c = 1 - Rat(3) / Rat(fam.n(level + 1));
    else
      c = 1 - Rat(3) / Rat(2 * fam.m(K) - 1);
    if (c <= 0) valid = false;
  }

  std::vector<Vec4r> verts;
  if (valid) {
    verts.push_back(unit(apex));
    for (int s = 0; s < 4; ++s)
      if (s != apex) verts.push_back(blend(apex, c, s));
  } else {
    for (int j = 0; j < 4; ++j) verts.push_back(unit(j));
  }
  return verts;
}

Box4 vertex_hull_box(const Mat4i& P, const std::vector<Vec4r>& verts) {
  Box4 box;
  Mat4r Pr = P.cast<Rat>();
  bool first = true;
  for (const Vec4r& v : verts) {
    Vec4r img = normalized((Pr * v).eval());
    for (int j = 0; j < 4; ++j) {
      if (first) {
        box[j] = RatInterval(img[j], img[j]);
      } else {
        box[j].lo = std::min(box[j].lo, img[j]);
        box[j].hi = std::max(box[j].hi, img[j]);
      }
    }
    first = false;
  }
  return box;
}

// Shrink the box against the unit-sum constraint; emptiness here means an
// enclosure invariant was violated upstream.
Box4 tighten_box(Box4 box) {
  for (int pass = 0; pass < 4; ++pass) {
    for (int j = 0; j < 4; ++j) {
      Rat other_hi = 0, other_lo = 0;
      for (int t = 0; t < 4; ++t) {
        if (t == j) continue;
        other_hi += box[t].hi;
        other_lo += box[t].lo;
      }
      Rat lo = std::max(std::max(box[j].lo, Rat(1 - other_hi)), Rat(0));
      Rat hi = std::min(std::min(box[j].hi, Rat(1 - other_lo)), Rat(1));
      if (lo > hi) throw domain_error("direction box has no unit-sum point");
      box[j] = RatInterval(lo, hi);
    }
  }
  return box;
}

// Fill coordinates other than j from their lower bounds, pouring the leftover
// mass into them in the given order of b-weight; returns the poured vector.
std::array<Rat, 4> pour(const Box4& box, const Vec4i& b, int j, const Rat& wj,
                        bool ascending) {
  std::array<Rat, 4> w;
  w[j] = wj;
  Rat mass = 1 - wj;
  std::vector<int> others;
  for (int t = 0; t < 4; ++t) {
    if (t == j) continue;
    w[t] = box[t].lo;
    mass -= box[t].lo;
    others.push_back(t);
  }
  if (mass < 0) throw domain_error("infeasible mass in ratio extremum");
  std::stable_sort(others.begin(), others.end(), [&](int a, int c) {
    return ascending ? b[a] < b[c] : b[a] > b[c];
  });
  for (int t : others) {
    Rat cap = box[t].hi - box[t].lo;
    Rat add = std::min(mass, cap);
    w[t] += add;
    mass -= add;
  }
  if (mass > 0) throw domain_error("mass exceeds box capacity in ratio extremum");
  return w;
}

Rat dot(const Vec4i& b, const std::array<Rat, 4>& w) {
  Rat s = 0;
  for (int t = 0; t < 4; ++t) s += Rat(b[t]) * w[t];
  return s;
}

}  // namespace

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::Fail: return "FAIL";
  }
  return "FAIL";
}

RatInterval ratio_over_box(const Box4& box, const Vec4i& b, int j) {
  Box4 t = tighten_box(box);
  // The target w_j/(b.w) is increasing in w_j once the remaining mass is
  // poured at the cheapest (resp. dearest) rates, so each endpoint is exact.
  auto lo_w = pour(t, b, j, t[j].lo, /*ascending=*/false);
  auto hi_w = pour(t, b, j, t[j].hi, /*ascending=*/true);
  return {lo_w[j] / dot(b, lo_w), hi_w[j] / dot(b, hi_w)};
}

RatInterval dot_over_box(const Box4& box, const Vec4i& b) {
  Box4 t = tighten_box(box);
  // Extremes of a linear form over box-and-sum constraints: pour from below.
  int jmin = 0, jmax = 0;
  for (int j = 1; j < 4; ++j) {
    if (b[j] < b[jmin]) jmin = j;
    if (b[j] > b[jmax]) jmax = j;
  }
  auto wmin = pour(t, b, jmin, t[jmin].hi, /*ascending=*/true);
  auto wmax = pour(t, b, jmax, t[jmax].hi, /*ascending=*/false);
  return {dot(b, wmin), dot(b, wmax)};
}

std::vector<LevelEnclosure> enclosure_chain(const KeaneFamily& fam, int measure,
                                            int k_max, const EnclosureOptions& opt) {
  require_measure(measure);
  const int K = fam.K();
  if (k_max < 0) throw domain_error("negative level");
  if (k_max > K - 2)
    throw domain_error("enclosure needs two levels below k_max; extend the sequence");

  if (opt.depth < 2) throw domain_error("enclosure depth must be at least 2");

  std::vector<LevelEnclosure> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    const int r_eff = std::min(opt.depth, K - k);
    Box4 box;
    for (int j = 0; j < 4; ++j) box[j] = RatInterval(Rat(0), Rat(1));
    Mat4i P = fam.matrix(k + 1);
    for (int r = 2; r <= r_eff; ++r) {
      const int level = k + r;
      P = (P * fam.matrix(level)).eval();
      for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c)
          if (P(a, c) <= 0)
            throw domain_error("transition product is not strictly positive");
      Box4 layer = vertex_hull_box(P, deep_vertices(fam, measure, level, opt.use_cones));
      for (int j = 0; j < 4; ++j) box[j] = box[j].intersect(layer[j]);
    }
    box = tighten_box(box);

    const Vec4i b = fam.b_vector(k);
    RatInterval base = dot_over_box(box, b).reciprocal();
    if (k > 0) base = base.intersect(out.back().component[3]);

    Box4 comp;
    RatInterval weighted(Rat(0));
    RatInterval plain(Rat(0));
    for (int j = 0; j < 4; ++j) {
      comp[j] = ratio_over_box(box, b, j).intersect(box[j] * base);
      weighted = weighted + comp[j].scaled(Rat(b[j]));
      plain = plain + comp[j];
    }
    if (!weighted.contains(Rat(1)))
      throw domain_error("tower floors no longer partition the interval");
    base = base.intersect(plain);

    out.push_back(LevelEnclosure{box, comp, base});
  }
  return out;
}

Box4 ratio_box(const KeaneFamily& fam, int measure, int k, const EnclosureOptions& opt) {
  return enclosure_chain(fam, measure, k, opt).back().direction;
}

Box4 component_measures(const KeaneFamily& fam, int measure, int k,
                        const EnclosureOptions& opt) {
  return enclosure_chain(fam, measure, k, opt).back().component;
}

RatInterval level_measure(const KeaneFamily& fam, int measure, int k,
                          const EnclosureOptions& opt) {
  return enclosure_chain(fam, measure, k, opt).back().base;
}

namespace {

enum class Sense { GE, GT, LE, LT };

LemmaRow make_row(std::string id, int k, Sense sense, Rat bound, RatInterval e) {
  LemmaRow row;
  row.lemma_id = std::move(id);
  row.k = k;
  row.bound = bound;
  row.enclosure = e;
  switch (sense) {
    case Sense::GE:
      row.verdict = e.lo >= bound ? Verdict::Pass
                    : e.hi < bound ? Verdict::Fail
                                   : Verdict::Inconclusive;
      row.margin = e.lo - bound;
      break;
    case Sense::GT:
      row.verdict = e.lo > bound ? Verdict::Pass
                    : e.hi <= bound ? Verdict::Fail
                                    : Verdict::Inconclusive;
      row.margin = e.lo - bound;
      break;
    case Sense::LE:
      row.verdict = e.hi <= bound ? Verdict::Pass
                    : e.lo > bound ? Verdict::Fail
                                   : Verdict::Inconclusive;
      row.margin = bound - e.hi;
      break;
    case Sense::LT:
      row.verdict = e.hi < bound ? Verdict::Pass
                    : e.lo >= bound ? Verdict::Fail
                                    : Verdict::Inconclusive;
      row.margin = bound - e.hi;
      break;
  }
  return row;
}

}  // namespace

std::vector<LemmaRow> lemma_suite(const KeaneFamily& fam, int k_lo, int k_hi,
                                  const EnclosureOptions& opt) {
  if (k_lo < 0 || k_hi < k_lo) throw domain_error("bad level range for lemma suite");
  const int K = fam.K();
  auto chain2 = enclosure_chain(fam, 2, k_hi, opt);
  auto chain3 = enclosure_chain(fam, 3, k_hi, opt);

  std::vector<LemmaRow> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    const Box4& r2 = chain2[k].direction;
    const Box4& r3 = chain3[k].direction;
    const Vec4i b = fam.b_vector(k);
    const Rat m1 = Rat(fam.m(k + 1)), n1 = Rat(fam.n(k + 1));
    const bool deep2 = k + 2 <= K;

    if (deep2) {
      const Rat m2 = Rat(fam.m(k + 2)), n2 = Rat(fam.n(k + 2));
      rows.push_back(make_row("L3I2big", k, Sense::GE, m1 / (2 * n1 * n2), r3[1]));
      rows.push_back(
          make_row("L3I2small", k, Sense::LE, 2 * m1 / ((n2 + 1) * (n1 + 1)), r3[1]));
      rows.push_back(make_row("L2I1small", k, Sense::LT, (16 * n2 + 16) / (m1 * m2), r2[0]));
      rows.push_back(make_row("L2I1big", k, Sense::GT, n2 / (4 * m1 * m2), r2[0]));
    }
    rows.push_back(make_row("L3I3big", k, Sense::GE, 1 - 3 / n1, r3[2]));
    rows.push_back(make_row("L3I4small", k, Sense::LE, 1 / n1, r3[3]));
    rows.push_back(make_row("L3I4big", k, Sense::GE, 1 / (2 * n1), r3[3]));
    rows.push_back(make_row("L3I1small", k, Sense::LE, 1 / n1, r3[0]));
    rows.push_back(make_row("L3I1big", k, Sense::GE, 1 / (3 * n1), r3[0]));
    rows.push_back(make_row("L2I2big", k, Sense::GT, m1 / (4 * (n1 + m1 + 2)), r2[1]));
    rows.push_back(make_row("L2I3small", k, Sense::LE, 4 * n1 / m1, r2[2]));
    rows.push_back(make_row("L2I3big", k, Sense::GE, n1 / (2 * m1), r2[2]));
    rows.push_back(make_row("L2I4big", k, Sense::GT, 1 / (2 * m1), r2[3]));
    rows.push_back(make_row("L2I4small", k, Sense::LT, 4 / m1, r2[3]));
    rows.push_back(make_row("L3bigorbit", k, Sense::GT, make_rat(1, 8),
                            chain3[k].component[2].scaled(Rat(b[2]))));
    rows.push_back(make_row("L2bigorbit", k, Sense::GT, make_rat(1, 4),
                            chain2[k].component[1].scaled(Rat(b[1]))));
  }
  return rows;
}

}  // namespace keane
