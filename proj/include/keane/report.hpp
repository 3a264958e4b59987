#pragma once

#include <iosfwd>

#include "keane/recurrence.hpp"

namespace keane {

// Deterministic CSV emission (UTF-8, LF).  Interval endpoints are printed as
// 50-digit decimals rounded outward (lower endpoints down, upper endpoints
// up), exact bounds as rational strings.

void write_lemma_csv(std::ostream& out, const std::vector<LemmaRow>& rows);
void write_dimension_csv(std::ostream& out, const std::vector<DimRow>& rows);
void write_recurrence_csv(std::ostream& out, const RecurrenceRun& run);
void write_covering_csv(std::ostream& out, const std::vector<CoveringRow>& rows);

}  // namespace keane
