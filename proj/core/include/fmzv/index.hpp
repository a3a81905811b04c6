#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fmzv {

// An index is a finite (possibly empty) tuple of integers; entries may be
// zero or negative. The empty index is the unique depth-0 index.
using Index = std::vector<std::int64_t>;

struct IndexInfo {
    std::size_t depth = 0;
    std::optional<std::int64_t> weight; // defined only for positive indices
    bool is_positive = false;           // all entries >= 1 (vacuously true when empty)
    bool is_admissible = false;         // positive and (empty or last entry >= 2)
    std::size_t positive_count = 0;     // number of entries >= 1
    std::int64_t positive_sum = 0;      // sum of entries >= 1
};

IndexInfo classify(const Index& k);

// Text form "k1,k2,...,kr"; the empty string is the empty index.
// Tokens may carry surrounding spaces; anything else raises ParseError with
// the byte offset of the offending token.
Index parse_index(const std::string& text);
std::string format_index(const Index& k);

} // namespace fmzv
