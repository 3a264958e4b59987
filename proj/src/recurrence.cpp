#include "keane/recurrence.hpp"

namespace keane {

namespace {

RatInterval neg_power(const Rat& base, const Rat& exponent, int digits) {
  if (base < 1) throw domain_error("negative power needs base >= 1");
  if (exponent <= 0) throw domain_error("exponent must be positive");
  if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p())
    throw resource_error("exponent too large");
  return pow_bounds(base, exponent.get_num().get_ui(), exponent.get_den().get_ui(),
                    digits)
      .reciprocal();
}

}  // namespace

ControlledNiceResult controlled_nice_check(const KeaneFamily& fam, int k, const Rat& c,
                                           const Rat& exponent,
                                           const EnclosureOptions& opt, int digits) {
  if (k < 2) throw domain_error("covering check needs k >= 2");
  if (k > fam.K() - 2)
    throw domain_error("covering check needs parameters two levels deeper");
  if (c < 0) throw domain_error("covering widening must be nonnegative");

  ControlledNiceResult res;
  res.k = k;
  res.c = c;
  res.exponent = exponent;

  const Vec4i b_prev = fam.b_vector(k - 1);
  const Vec4i b = fam.b_vector(k);
  Rat scale_q = Rat(fam.n(k) * b_prev[2]) / Rat(Int(k - 1) * Int(k - 1));
  mpz_fdiv_q(res.scale.get_mpz_t(), scale_q.get_num().get_mpz_t(),
             scale_q.get_den().get_mpz_t());
  if (res.scale < 1) throw domain_error("covering scale underflows");
  res.radius = neg_power(Rat(res.scale), exponent, digits);

  auto comp_prev = component_measures(fam, 2, k - 1, opt);
  auto comp = component_measures(fam, 2, k, opt);

  // Column 3 of the level-k matrix: how many level-k tower-3 floors cover one
  // floor of each level-(k-1) tower (tower 2 is exempt from the bound).
  const std::array<Int, 4> counts{Int(1), Int(0), fam.n(k) - 1, Int(1)};
  Rat lhs = 0;
  for (int i : {0, 2, 3}) {
    Rat covered = Rat(counts[i]) * comp[2].hi + 2 * c * res.radius.hi;
    lhs += Rat(b_prev[i]) * std::min(comp_prev[i].hi, covered);
  }
  res.lhs_hi = lhs;
  res.rhs_hi = Rat(b[2]) * comp[2].hi +
               Rat(b_prev[0] + b_prev[2] + b_prev[3]) * 2 * c * res.radius.hi;
  res.margin = res.rhs_hi - res.lhs_hi;
  res.verdict = res.margin >= 0 ? Verdict::Pass : Verdict::Fail;
  return res;
}

ControlMostResult control_most_bound(const KeaneFamily& fam, int k,
                                     const EnclosureOptions& opt) {
  if (k < 1) throw domain_error("mass bound needs k >= 1");
  if (k > fam.K() - 2)
    throw domain_error("mass bound needs parameters two levels deeper");

  ControlMostResult res;
  res.k = k;
  const Vec4i b = fam.b_vector(k);
  auto comp = component_measures(fam, 3, k, opt);
  Rat lhs = 0;
  for (int i : {0, 1, 3}) lhs += Rat(b[i]) * comp[i].hi;
  res.lhs_hi = lhs;

  const Rat n1 = Rat(fam.n(k + 1));
  res.rhs = Rat(b[0]) / n1 +
            2 * Rat(b[1]) * Rat(fam.m(k + 1)) / (n1 * Rat(fam.n(k + 2))) +
            Rat(b[3]) / n1;
  res.verdict = res.lhs_hi <= res.rhs ? Verdict::Pass : Verdict::Fail;

  res.products_below_next_n = true;
  for (int i : {0, 2, 3})
    if (!(b[i] * b[1] < fam.n(k + 1))) res.products_below_next_n = false;

  res.witness_decreasing = true;
  for (int t = 1; t < k; ++t) {
    Rat wt = make_rat(1, Int(t) * Int(t)) + Rat(3) / Rat(fam.b_vector(t)[1]);
    Rat wn = make_rat(1, Int(t + 1) * Int(t + 1)) + Rat(3) / Rat(fam.b_vector(t + 1)[1]);
    if (!(wn < wt)) res.witness_decreasing = false;
  }
  return res;
}

RecurrenceRun recurrence_stat(const KeaneFamily& fam, const FloorTable& table,
                              const Box4& m2, const Box4& m3, const Rat& x,
                              const Rat& y, const Rat& exponent, long N,
                              const Rat& threshold, std::int64_t budget, int digits) {
  if (N < 1) throw domain_error("recurrence run needs at least one step");
  RecurrenceRun run;
  run.level = table.level();
  run.exponent = exponent;
  run.x = x;
  run.y = y;
  run.requested = N;
  run.threshold = threshold;

  long steps = N;
  if (budget < N) {
    steps = static_cast<long>(budget);
    run.truncated = true;
  }
  if (exponent <= 0) throw domain_error("exponent must be positive");
  if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p())
    throw resource_error("exponent too large");
  const unsigned long p = exponent.get_num().get_ui();
  const unsigned long q = exponent.get_den().get_ui();

  const IETSpec base = fam.iet();
  Rat pos = x;
  Rat running;
  bool have_running = false;
  bool certainly_dipped = false;
  bool possibly_dipped = false;
  run.records.reserve(static_cast<std::size_t>(steps));
  for (long n = 1; n <= steps; ++n) {
    pos = apply(base, pos);
    RecurrenceRecord rec;
    rec.n = n;
    rec.distance = point_distance(table, m2, m3, pos, y);
    rec.stat = pow_bounds(Rat(n), p, q, digits) * rec.distance;
    if (!have_running || rec.stat.hi < running) running = rec.stat.hi;
    have_running = true;
    rec.running_min_hi = running;
    if (rec.stat.hi < threshold) certainly_dipped = true;
    if (rec.stat.lo < threshold) possibly_dipped = true;
    run.records.push_back(std::move(rec));
  }
  run.verdict = certainly_dipped ? Verdict::Pass
                : possibly_dipped ? Verdict::Inconclusive
                                  : Verdict::Fail;
  return run;
}

}  // namespace keane
