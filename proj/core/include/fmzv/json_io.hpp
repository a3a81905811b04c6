#pragma once

#include <string>

#include "fmzv/combination.hpp"
#include "fmzv/genfun.hpp"
#include "fmzv/sweep.hpp"

namespace fmzv {

// JSON document layout, version fmzv/1. Objects serialize with keys in
// sorted order and arrays in the container's canonical (map) order, so
// identical inputs produce byte-identical documents. Rational parts are
// decimal strings to survive any JSON reader unharmed.
//
//   combination: {"schema":"fmzv/1","terms":[{"index":"3,-1",
//                 "coeff":[{"dplus":0,"dminus":2,"num":"1","den":"2"},...]},...]}

std::string combination_to_json(const Combination& c);

// Inverse of combination_to_json. Rejects unknown schema versions, malformed
// index strings, zero denominators, and structurally invalid documents with
// ParseError carrying a byte position where one is available.
Combination combination_from_json(const std::string& text);

std::string sweep_report_to_json(const SweepReport& report);

// Serialized table of the power-sum polynomials indexed by exponent tuple.
std::string p_table_to_json(const PTable& table, unsigned depth, unsigned max_k);

} // namespace fmzv
