#include "keane/floor_table.hpp"

#include <algorithm>

namespace keane {

FloorTable FloorTable::build(const KeaneFamily& fam, int k, std::int64_t budget) {
  if (k < 0 || k > fam.K()) throw domain_error("floor table level out of range");
  const Vec4i b = fam.b_vector(k);
  Int total = b[0] + b[1] + b[2] + b[3];
  if (total > budget)
    throw resource_error("floor table needs " + total.get_str() +
                         " floors, budget is " + std::to_string(budget));

  const IETSpec base = fam.iet();
  const RInterval home = fam.level_interval(k);

  FloorTable table;
  table.level_ = k;
  table.floors_.reserve(static_cast<std::size_t>(total.get_si()));
  for (int j = 1; j <= 4; ++j) {
    RInterval cur = fam.piece(k, j);
    const long steps = b[j - 1].get_si();
    for (long t = 0; t < steps; ++t) {
      const int s = interval_index(base, cur.lo);
      if (!(cur.hi <= base.interval(s).hi))
        throw domain_error("tower floor straddles a discontinuity");
      table.floors_.push_back(Floor{cur, j, t, s});
      const Rat shift = base.image_left(s) - base.left(s);
      cur = RInterval{cur.lo + shift, cur.hi + shift};
    }
    if (!(home.lo <= cur.lo && cur.hi <= home.hi))
      throw domain_error("tower does not return into the level interval");
  }

  std::sort(table.floors_.begin(), table.floors_.end(),
            [](const Floor& a, const Floor& c) { return a.span.lo < c.span.lo; });
  Rat edge = 0;
  for (const Floor& f : table.floors_) {
    if (f.span.lo != edge) throw domain_error("tower floors do not tile the interval");
    edge = f.span.hi;
  }
  if (edge != 1) throw domain_error("tower floors do not tile the interval");

  table.prefix_.assign(table.floors_.size() + 1, {0, 0, 0, 0});
  for (std::size_t i = 0; i < table.floors_.size(); ++i) {
    table.prefix_[i + 1] = table.prefix_[i];
    table.prefix_[i + 1][table.floors_[i].tower - 1] += 1;
  }
  return table;
}

std::size_t FloorTable::locate(const Rat& x) const {
  if (x < 0 || x >= 1) throw domain_error("point outside the unit interval");
  auto it = std::upper_bound(floors_.begin(), floors_.end(), x,
                             [](const Rat& v, const Floor& f) { return v < f.span.lo; });
  return static_cast<std::size_t>(it - floors_.begin()) - 1;
}

RatInterval interval_measure(const FloorTable& table, const Box4& floor_measure,
                             const Rat& a, const Rat& b) {
  if (a < 0 || b > 1 || a > b) throw domain_error("bad interval for measure query");
  if (a == b) return RatInterval(Rat(0));
  if (a == 0 && b == 1) return RatInterval(Rat(1));

  const auto& floors = table.floors();
  std::size_t full_lo = 0;
  std::size_t full_hi = floors.size();
  std::vector<std::size_t> partial;

  const std::size_t ia = table.locate(a);
  if (a == floors[ia].span.lo) {
    full_lo = ia;
  } else {
    partial.push_back(ia);
    full_lo = ia + 1;
  }
  if (b < 1) {
    const std::size_t ib = table.locate(b);
    full_hi = ib;
    if (b != floors[ib].span.lo && (partial.empty() || partial.back() != ib))
      partial.push_back(ib);
  }

  RatInterval out{Rat(0), Rat(0)};
  if (full_lo < full_hi) {
    for (int j = 0; j < 4; ++j) {
      const long count = table.prefix_count(full_hi, j) - table.prefix_count(full_lo, j);
      out = out + floor_measure[j].scaled(Rat(count));
    }
  }
  for (std::size_t i : partial)
    out = out + RatInterval(Rat(0), floor_measure[floors[i].tower - 1].hi);
  return out.intersect(RatInterval(Rat(0), Rat(1)));
}

RatInterval point_distance(const FloorTable& table, const Box4& m2, const Box4& m3,
                           const Rat& x, const Rat& y) {
  const Rat lo = std::min(x, y), hi = std::max(x, y);
  return interval_measure(table, m2, lo, hi) + interval_measure(table, m3, lo, hi);
}

}  // namespace keane
