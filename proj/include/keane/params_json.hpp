#pragma once

#include <iosfwd>
#include <string>

#include "keane/keane.hpp"

namespace keane {

// JSON form of a parameter sequence:
//   {"rule": "...", "alpha": "p/q" (optional), "pairs": [["m1","n1"], ...]}
// Integers are decimal strings on output; numbers are also accepted on input.
// Unknown keys are rejected.

std::string params_to_json(const ParamSeq& seq);
ParamSeq params_from_json(const std::string& text);
ParamSeq params_from_stream(std::istream& in);

}  // namespace keane
