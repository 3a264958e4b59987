#include "keane/iet.hpp"

#include <algorithm>
#include <deque>

namespace keane {

void IETSpec::validate() const {
  perm.validate();
  if (perm.size() != n()) throw domain_error("IETSpec: permutation/length size mismatch");
  Rat s(0);
  for (const Rat& l : lengths) {
    if (l <= 0) throw domain_error("IETSpec: nonpositive length");
    s += l;
  }
  if (s != 1) throw domain_error("IETSpec: lengths must sum to 1");
}

Rat IETSpec::left(int j) const {
  Rat s(0);
  for (int k = 1; k < j; ++k) s += lengths[k - 1];
  return s;
}

Rat IETSpec::image_left(int j) const {
  Rat s(0);
  for (int k = 1; k <= n(); ++k)
    if (perm(k) < perm(j)) s += lengths[k - 1];
  return s;
}

RInterval IETSpec::interval(int j) const {
  Rat l = left(j);
  return {l, l + lengths[j - 1]};
}

int interval_index(const IETSpec& iet, const Rat& x) {
  if (x < 0 || x >= 1) throw domain_error("interval_index: point outside [0,1)");
  Rat acc(0);
  for (int j = 1; j <= iet.n(); ++j) {
    acc += iet.lengths[j - 1];
    if (x < acc) return j;
  }
  return iet.n();  // unreachable when lengths sum to 1
}

Rat apply(const IETSpec& iet, const Rat& x) {
  int j = interval_index(iet, x);
  return x - iet.left(j) + iet.image_left(j);
}

IETSpec inverse_spec(const IETSpec& iet) {
  // The image blocks, read left to right, are the subintervals of the
  // inverse exchange; block at rank r is the image of j = perm^{-1}(r).
  Permutation pinv = iet.perm.inverse();
  std::vector<Rat> lens(iet.n());
  std::vector<int> images(iet.n());
  for (int r = 1; r <= iet.n(); ++r) {
    int j = pinv(r);
    lens[r - 1] = iet.lengths[j - 1];
    // The inverse sends block r back to position rank of I_j, which is j.
    images[r - 1] = j;
  }
  return IETSpec{Permutation::one_line(std::move(images)), std::move(lens)};
}

Rat apply_inverse(const IETSpec& iet, const Rat& x) { return apply(inverse_spec(iet), x); }

std::vector<OrbitPoint> orbit(const IETSpec& iet, const Rat& x, std::int64_t N,
                              std::int64_t budget) {
  if (N < 0) throw domain_error("orbit: negative length");
  if (N > budget) throw resource_error("orbit: step budget exceeded");
  std::vector<OrbitPoint> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  Rat cur = x;
  out.push_back({cur, interval_index(iet, cur)});
  for (std::int64_t t = 0; t < N; ++t) {
    int j = out.back().symbol;
    cur = cur - iet.left(j) + iet.image_left(j);
    out.push_back({cur, interval_index(iet, cur)});
  }
  return out;
}

namespace {

struct Piece {
  Rat dlo, dhi;   // domain inside sub
  Rat offset;     // current position = domain + offset
  std::int64_t t = 0;
  std::vector<std::int64_t> visits;
};

}  // namespace

InducedMap first_return(const IETSpec& iet, const RInterval& sub, std::int64_t budget) {
  iet.validate();
  if (!(0 <= sub.lo && sub.lo < sub.hi && sub.hi <= 1))
    throw domain_error("first_return: sub must be a nonempty subinterval of [0,1)");
  const int n = iet.n();

  std::vector<Rat> cuts;  // internal discontinuities of the map
  for (int j = 2; j <= n; ++j) cuts.push_back(iet.left(j));
  std::vector<Rat> shifts(n + 1);
  for (int j = 1; j <= n; ++j) shifts[j] = iet.image_left(j) - iet.left(j);

  std::deque<Piece> active;
  active.push_back(Piece{sub.lo, sub.hi, Rat(0), 0, std::vector<std::int64_t>(n, 0)});
  std::vector<Piece> done;
  std::int64_t steps_left = budget;

  while (!active.empty()) {
    Piece p = std::move(active.front());
    active.pop_front();

    // Split at map discontinuities so the current image lies in one I_j.
    Rat clo = p.dlo + p.offset;
    Rat chi = p.dhi + p.offset;
    bool split = false;
    for (const Rat& c : cuts) {
      if (clo < c && c < chi) {
        Piece q = p;
        q.dlo = c - p.offset;
        p.dhi = c - p.offset;
        active.push_front(std::move(q));
        active.push_front(std::move(p));
        split = true;
        break;
      }
    }
    if (split) continue;

    int j = interval_index(iet, clo);
    p.visits[j - 1] += 1;
    if (--steps_left < 0) throw resource_error("first_return: step budget exceeded");
    p.offset += shifts[j];
    p.t += 1;

    // Split at the boundaries of sub; fragments now inside have returned.
    std::vector<Piece> frags;
    frags.push_back(std::move(p));
    for (const Rat& edge : {sub.lo, sub.hi}) {
      std::vector<Piece> next;
      for (Piece& f : frags) {
        Rat flo = f.dlo + f.offset, fhi = f.dhi + f.offset;
        if (flo < edge && edge < fhi) {
          Piece g = f;
          g.dlo = edge - f.offset;
          f.dhi = edge - f.offset;
          next.push_back(std::move(f));
          next.push_back(std::move(g));
        } else {
          next.push_back(std::move(f));
        }
      }
      frags = std::move(next);
    }
    for (Piece& f : frags) {
      Rat flo = f.dlo + f.offset, fhi = f.dhi + f.offset;
      if (sub.lo <= flo && fhi <= sub.hi)
        done.push_back(std::move(f));
      else
        active.push_back(std::move(f));
    }
  }

  std::sort(done.begin(), done.end(), [](const Piece& a, const Piece& b) { return a.dlo < b.dlo; });

  // Merge adjacent fragments that return at the same time with the same
  // translation: they belong to one continuity piece of the induced map.
  std::vector<Piece> merged;
  for (Piece& p : done) {
    if (!merged.empty()) {
      Piece& m = merged.back();
      if (m.dhi == p.dlo && m.t == p.t && m.offset == p.offset) {
        if (m.visits != p.visits)
          throw domain_error("first_return: inconsistent merge (internal error)");
        m.dhi = p.dhi;
        continue;
      }
    }
    merged.push_back(std::move(p));
  }

  InducedMap out;
  out.base = iet;
  out.sub_interval = sub;
  Rat width = sub.hi - sub.lo;
  std::vector<Rat> lens;
  std::vector<std::pair<Rat, int>> image_order;  // (final image left, piece idx)
  for (std::size_t idx = 0; idx < merged.size(); ++idx) {
    const Piece& p = merged[idx];
    out.pieces.push_back({p.dlo, p.dhi});
    out.return_times.push_back(p.t);
    lens.push_back((p.dhi - p.dlo) / width);
    image_order.push_back({p.dlo + p.offset, static_cast<int>(idx)});
  }
  out.landing_pattern.assign(n, std::vector<std::int64_t>(merged.size(), 0));
  for (std::size_t idx = 0; idx < merged.size(); ++idx)
    for (int i = 0; i < n; ++i) out.landing_pattern[i][idx] = merged[idx].visits[i];

  // Consistency: per piece, visit counts add up to the return time, and the
  // returned images tile sub exactly.
  for (std::size_t idx = 0; idx < merged.size(); ++idx) {
    std::int64_t tot = 0;
    for (int i = 0; i < n; ++i) tot += out.landing_pattern[i][idx];
    if (tot != out.return_times[idx])
      throw domain_error("first_return: landing pattern/return time mismatch (internal error)");
  }
  std::sort(image_order.begin(), image_order.end());
  Rat edge = sub.lo;
  for (const auto& [img_left, idx] : image_order) {
    if (img_left != edge) throw domain_error("first_return: images do not tile sub (internal error)");
    edge += merged[idx].dhi - merged[idx].dlo;
  }
  if (edge != sub.hi) throw domain_error("first_return: images do not tile sub (internal error)");

  std::vector<int> images(merged.size());
  for (std::size_t rank = 0; rank < image_order.size(); ++rank)
    images[image_order[rank].second] = static_cast<int>(rank) + 1;
  out.induced = IETSpec{Permutation::one_line(std::move(images)), std::move(lens)};
  out.induced.validate();
  return out;
}

}  // namespace keane
