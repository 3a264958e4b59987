#include "keane/report.hpp"

#include <ostream>

namespace keane {

namespace {

constexpr int kDigits = 50;

std::string down(const Rat& x) { return to_decimal(x, kDigits, Round::Down); }
std::string up(const Rat& x) { return to_decimal(x, kDigits, Round::Up); }

}  // namespace

void write_lemma_csv(std::ostream& out, const std::vector<LemmaRow>& rows) {
  out << "lemma_id,k,verdict,bound,enclosure_lo,enclosure_hi,margin\n";
  for (const LemmaRow& r : rows)
    out << r.lemma_id << ',' << r.k << ',' << verdict_string(r.verdict) << ','
        << rat_string(r.bound) << ',' << down(r.enclosure.lo) << ','
        << up(r.enclosure.hi) << ',' << down(r.margin) << '\n';
}

void write_dimension_csv(std::ostream& out, const std::vector<DimRow>& rows) {
  out << "k,direction,upper,upper_err,lower,lower_err,running_min\n";
  for (const DimRow& r : rows) {
    out << r.k << ',' << r.direction << ',';
    if (!r.flagged)
      out << up(r.upper.mid()) << ',' << up(r.upper.width() / 2) << ','
          << up(r.lower.mid()) << ',' << up(r.lower.width() / 2) << ',';
    else
      out << ",,,,";
    if (r.has_running) out << up(r.running_min_hi);
    out << '\n';
  }
}

void write_recurrence_csv(std::ostream& out, const RecurrenceRun& run) {
  out << "n,distance_lo,distance_hi,stat_lo,stat_hi,running_min_hi\n";
  for (const RecurrenceRecord& r : run.records)
    out << r.n << ',' << down(r.distance.lo) << ',' << up(r.distance.hi) << ','
        << down(r.stat.lo) << ',' << up(r.stat.hi) << ',' << up(r.running_min_hi)
        << '\n';
}

void write_covering_csv(std::ostream& out, const std::vector<CoveringRow>& rows) {
  out << "k,literal_lo,literal_hi,normalized_lo,normalized_hi,bound,verdict\n";
  for (const CoveringRow& r : rows) {
    const Verdict v = r.normalized.hi < r.bound   ? Verdict::Pass
                      : r.normalized.lo >= r.bound ? Verdict::Fail
                                                   : Verdict::Inconclusive;
    out << r.k << ',' << down(r.literal.lo) << ',' << up(r.literal.hi) << ','
        << down(r.normalized.lo) << ',' << up(r.normalized.hi) << ','
        << rat_string(r.bound) << ',' << verdict_string(v) << '\n';
  }
}

}  // namespace keane
