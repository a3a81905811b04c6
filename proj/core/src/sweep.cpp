#include "fmzv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "fmzv/errors.hpp"
#include "fmzv/reduction.hpp"

namespace fmzv {

std::vector<std::uint64_t> primes_in_range(std::uint64_t from, std::uint64_t upto) {
    std::vector<std::uint64_t> out;
    if (upto < 2) return out;
    std::vector<bool> composite(upto + 1, false);
    for (std::uint64_t p = 2; p * p <= upto; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t m = p * p; m <= upto; m += p) composite[m] = true;
    }
    for (std::uint64_t p = std::max<std::uint64_t>(from, 2); p <= upto; ++p)
        if (!composite[p]) out.push_back(p);
    return out;
}

unsigned worker_count_default() {
    if (const char* env = std::getenv("FMZV_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return std::min(4u, hw);
}

namespace {

enum class PrimeStatus { passed, skipped, failed };

struct PrimeResult {
    PrimeStatus status = PrimeStatus::passed;
    std::string reason; // skip reason
    std::string lhs;    // failure residues
    std::string rhs;
    std::exception_ptr error; // unexpected exception, rethrown after the join
};

} // namespace

SweepReport check_reduce(const Index& k, std::uint64_t primes_from, std::uint64_t primes_upto,
                         unsigned exponent, StrategySet strategies, unsigned workers) {
    if (exponent == 0) throw DomainError("prime-power exponent must be positive");

    SweepReport report;
    report.index = k;
    report.exponent = exponent;

    // The reduction is prime-independent; do it once up front. Workers only
    // evaluate, so all shared state below is read-only.
    const ReductionTrace canonical = reduce_full(k, EliminationOrder::leftmost);
    std::optional<ReductionTrace> alternate;
    if (strategies == StrategySet::all) alternate = reduce_full(k, EliminationOrder::rightmost);

    const std::vector<std::uint64_t> primes = primes_in_range(primes_from, primes_upto);
    std::vector<PrimeResult> results(primes.size());

    const auto run_one = [&](std::size_t slot) {
        const std::uint64_t p = primes[slot];
        PrimeResult& res = results[slot];
        try {
            const ModResidue direct = zeta_trunc_mod(k, p, exponent, TruncationRange{0, p});
            const ModResidue reduced = evaluate_combination(canonical.final, p, exponent);
            if (reduced != direct) {
                res.status = PrimeStatus::failed;
                res.lhs = std::to_string(direct.value);
                res.rhs = std::to_string(reduced.value);
                return;
            }
            if (alternate) {
                const ModResidue other = evaluate_combination(alternate->final, p, exponent);
                if (other != direct) {
                    res.status = PrimeStatus::failed;
                    res.lhs = std::to_string(direct.value);
                    res.rhs = std::to_string(other.value);
                    return;
                }
            }
            res.status = PrimeStatus::passed;
        } catch (const DenominatorCollision& e) {
            res.status = PrimeStatus::skipped;
            res.reason = e.what();
        } catch (...) {
            res.error = std::current_exception();
        }
    };

    unsigned pool = workers == 0 ? worker_count_default() : workers;
    pool = static_cast<unsigned>(std::min<std::size_t>(pool, std::max<std::size_t>(primes.size(), 1)));
    if (pool <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (unsigned w = 0; w < pool; ++w) {
            threads.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1)) run_one(i);
            });
        }
        for (std::thread& t : threads) t.join();
    }

    // Deterministic merge: slots are already in ascending prime order.
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const PrimeResult& res = results[i];
        if (res.error) std::rethrow_exception(res.error);
        switch (res.status) {
        case PrimeStatus::passed:
            report.primes_checked.push_back(primes[i]);
            break;
        case PrimeStatus::skipped:
            report.primes_skipped.push_back({primes[i], res.reason});
            break;
        case PrimeStatus::failed:
            report.primes_checked.push_back(primes[i]);
            if (!report.first_failure) report.first_failure = SweepFailure{primes[i], res.lhs, res.rhs};
            break;
        }
    }
    report.all_passed = !report.first_failure.has_value();
    return report;
}

} // namespace fmzv
