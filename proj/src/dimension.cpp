#include "keane/dimension.hpp"

namespace keane {

namespace {

// Enclosure of -ln(y) over y in J, J strictly positive.
RatInterval neg_log(const RatInterval& J, int digits) {
  Rat lo = -ln_bounds(J.hi, digits).hi;
  Rat hi = -ln_bounds(J.lo, digits).lo;
  return RatInterval(lo, hi);
}

// Quotient of intervals with strictly positive lower endpoints.
RatInterval pos_quotient(const RatInterval& num, const RatInterval& den) {
  if (num.lo <= 0 || den.lo <= 0)
    throw domain_error("quotient needs strictly positive intervals");
  return RatInterval(num.lo / den.hi, num.hi / den.lo);
}

}  // namespace

std::vector<DimRow> dim_bounds(const KeaneFamily& fam, int direction, int k_max,
                               const EnclosureOptions& opt, int digits) {
  if (direction != 2 && direction != 3)
    throw domain_error("dimension direction must be 2 or 3");
  if (k_max < 1) throw domain_error("dimension table needs k_max >= 1");
  const int other = 5 - direction;
  auto own_chain = enclosure_chain(fam, direction, k_max, opt);
  auto other_chain = enclosure_chain(fam, other, k_max, opt);

  std::vector<DimRow> rows;
  bool has_running = false;
  Rat running;
  for (int k = 1; k <= k_max; ++k) {
    DimRow row;
    row.k = k;
    row.direction = direction;
    const RatInterval own = own_chain[k].component[direction - 1];
    const RatInterval oth = other_chain[k].component[direction - 1];
    row.flagged = own.hi >= 1 || oth.hi >= 1;
    if (!row.flagged) {
      const RatInterval den = neg_log(oth, digits);
      row.upper = pos_quotient(ln_bounds(Rat(fam.b_vector(k)[direction - 1]), digits), den);
      row.lower = pos_quotient(neg_log(own, digits), den);
      if (!has_running || row.upper.hi < running) running = row.upper.hi;
      has_running = true;
    }
    row.has_running = has_running;
    if (has_running) row.running_min_hi = running;
    rows.push_back(row);
  }
  return rows;
}

RatInterval slope_estimate(const KeaneFamily& fam, int k, int digits) {
  if (k < 1) throw domain_error("slope estimate needs k >= 1");
  if (k + 2 > fam.K())
    throw domain_error("slope estimate needs parameters two levels deeper");
  const Vec4i b = fam.b_vector(k);
  const Rat arg = Rat(fam.m(k + 1)) / Rat(fam.n(k + 1) * fam.n(k + 2) * b[2]);
  if (arg >= 1) throw domain_error("slope undefined: scale ratio does not decay");
  return pos_quotient(ln_bounds(Rat(b[1]), digits), neg_log(RatInterval(arg), digits));
}

CoveringRow covering_row(const KeaneFamily& fam, int k, int digits) {
  if (k < 1) throw domain_error("covering row needs k >= 1");
  if (k + 1 > fam.K()) throw domain_error("covering row needs one level deeper");
  const Vec4i b = fam.b_vector(k);
  const Rat n_next = Rat(fam.n(k + 1));
  CoveringRow row;
  row.k = k;
  row.bound = make_rat(1, k);
  const auto root = [&](const Rat& x) {
    return pow_bounds(x, 1, static_cast<unsigned long>(k), digits);
  };
  row.literal = root(Rat(b[0]) / n_next).scaled(Rat(b[2]));
  row.normalized = root(Rat(b[0]) / (n_next * Rat(b[2]))).scaled(Rat(b[2]));
  return row;
}

PhaseCount phase_count(const KeaneFamily& fam, int k, const Rat& eps) {
  if (k < 1 || k + 1 > fam.K()) throw domain_error("phase count needs 1 <= k < K");
  if (eps <= 0) throw domain_error("phase count needs a positive tolerance");
  const Vec4i b = fam.b_vector(k);
  PhaseCount pc;
  pc.total = fam.n(k + 1) * b[2];
  const Rat cutoff = Rat(b[0]) / eps - Rat(b[3]);
  Int below;  // #{s in [1..total] : s <= cutoff}
  if (cutoff <= 0) {
    below = 0;
  } else {
    mpz_fdiv_q(below.get_mpz_t(), cutoff.get_num().get_mpz_t(),
               cutoff.get_den().get_mpz_t());
    below = std::min(below, pc.total);
  }
  pc.late = pc.total - below;
  return pc;
}

Int hit_time_direct(const KeaneFamily& fam, const FloorTable& table, const Rat& x,
                    std::int64_t budget) {
  const IETSpec base = fam.iet();
  Rat y = x;
  for (std::int64_t n = 0; n <= budget; ++n) {
    if (table.floors()[table.locate(y)].tower == 1) return Int(static_cast<long>(n));
    y = apply(base, y);
  }
  throw resource_error("hit time exceeds step budget");
}

Int hit_time_towers(const KeaneFamily& fam, const FloorTable& table, const Rat& x,
                    std::int64_t budget) {
  const int k = table.level();
  const Vec4i b = fam.b_vector(k);
  const Floor& f = table.floors()[table.locate(x)];
  if (f.tower == 1) return 0;
  Int acc = b[f.tower - 1] - f.height;
  Rat y = fam.induced_apply(k, fam.piece(k, f.tower).lo + (x - f.span.lo));
  while (true) {
    int j = 0;
    for (int t = 1; t <= 4; ++t)
      if (fam.piece(k, t).contains(y)) j = t;
    if (j == 0) throw domain_error("induced point escaped the level interval");
    if (j == 1) return acc;
    acc += b[j - 1];
    if (acc > budget) throw resource_error("hit time exceeds step budget");
    y = fam.induced_apply(k, y);
  }
}

}  // namespace keane
