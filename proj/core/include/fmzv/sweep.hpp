#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fmzv/index.hpp"

namespace fmzv {

// One prime excluded from a sweep, with the reason (in practice: the prime
// divides the denominator of an evaluated reduction coefficient).
struct SkipRecord {
    std::uint64_t prime = 0;
    std::string reason;
};

// First observed mismatch between the direct truncated sum and the evaluated
// reduction, with both residues rendered as decimal strings.
struct SweepFailure {
    std::uint64_t prime = 0;
    std::string lhs;
    std::string rhs;
};

// Outcome of one check-reduce run. Invariants: all_passed iff first_failure
// is absent; primes_checked and primes_skipped are disjoint, sorted, and
// together cover every prime in the requested range.
struct SweepReport {
    Index index;
    unsigned exponent = 1;
    std::vector<std::uint64_t> primes_checked;
    std::vector<SkipRecord> primes_skipped;
    bool all_passed = true;
    std::optional<SweepFailure> first_failure;
};

// Which elimination strategies the sweep exercises: the canonical leftmost
// order alone, or leftmost and rightmost with agreement required.
enum class StrategySet { leftmost, all };

// Primes in [from, upto] by sieve, ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t from, std::uint64_t upto);

// Worker count used when the caller passes 0: the FMZV_THREADS environment
// variable if set to a positive integer, otherwise min(4, hardware threads).
unsigned worker_count_default();

// For every prime p in [primes_from, primes_upto], compare
// zeta_trunc_mod(k, p, n, (0,p)) against the evaluated reduction of k in
// Z/p^nZ. Primes raising DenominatorCollision are recorded as skipped; a
// residue mismatch marks the report failed but never cancels other primes.
// One task per prime on a fixed pool of `workers` threads (0 = default);
// results are merged in ascending prime order regardless of scheduling.
SweepReport check_reduce(const Index& k, std::uint64_t primes_from, std::uint64_t primes_upto,
                         unsigned exponent, StrategySet strategies = StrategySet::leftmost,
                         unsigned workers = 0);

} // namespace fmzv
