#include "fmzv/trunc_zeta.hpp"

#include <numeric>
#include <vector>

#include "fmzv/errors.hpp"

namespace fmzv {

namespace {

void check_range(TruncationRange range) {
    if (range.a > range.b) throw DomainError("truncation range requires a <= b");
}

} // namespace

Rational zeta_trunc_exact(const Index& k, TruncationRange range, DpStats* stats) {
    check_range(range);
    const std::size_t r = k.size();
    if (r == 0) return Rational(1);
    std::vector<Rational> state(r + 1, Rational(0));
    state[0] = 1;
    for (std::uint64_t m = range.a + 1; m < range.b; ++m) {
        const Rational base(m);
        for (std::size_t j = r; j >= 1; --j) {
            state[j] += pow_rat(base, -k[j - 1]) * state[j - 1];
            if (stats) ++stats->inner_updates;
        }
    }
    return state[r];
}

ModResidue zeta_trunc_mod(const Index& k, std::uint64_t p, unsigned n, TruncationRange range,
                          DpStats* stats) {
    check_range(range);
    const ModResidue one(p, n, 1);
    const std::size_t r = k.size();
    if (r == 0) return one;
    std::vector<ModResidue> state(r + 1, ModResidue(p, n, 0));
    state[0] = one;
    for (std::uint64_t m = range.a + 1; m < range.b; ++m) {
        const ModResidue base(p, n, m);
        for (std::size_t j = r; j >= 1; --j) {
            state[j] = state[j] + base.pow(-k[j - 1]) * state[j - 1];
            if (stats) ++stats->inner_updates;
        }
    }
    return state[r];
}

Rational zeta_trunc_bruteforce(const Index& k, TruncationRange range) {
    check_range(range);
    const std::size_t r = k.size();
    if (r == 0) return Rational(1);

    constexpr std::uint64_t kWorkBound = 10'000'000;
    std::uint64_t work = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (work > kWorkBound / std::max<std::uint64_t>(range.b - range.a, 1))
            throw SizeGuard("zeta_trunc_bruteforce: (b-a)^depth exceeds 10^7");
        work *= range.b - range.a;
    }
    if (work > kWorkBound) throw SizeGuard("zeta_trunc_bruteforce: (b-a)^depth exceeds 10^7");

    if (range.b - range.a <= r) return Rational(0); // fewer candidates than slots

    // Common rescaling: with M = lcm(a+1..b-1) and K the sum of positive
    // entries, every tuple term times M^K is an integer, so the whole
    // enumeration runs in BigInt and a single division at the end restores
    // the exact rational.
    BigInt M(1);
    for (std::uint64_t m = range.a + 1; m < range.b; ++m) M = boost::multiprecision::lcm(M, BigInt(m));
    std::uint64_t K = 0;
    for (const auto e : k)
        if (e > 0) K += static_cast<std::uint64_t>(e);

    // factor[i][m - a - 1] = the slot-i contribution of n_i = m, pre-scaled.
    const std::size_t width = static_cast<std::size_t>(range.b - range.a - 1);
    std::vector<std::vector<BigInt>> factor(r, std::vector<BigInt>(width));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::uint64_t m = range.a + 1; m < range.b; ++m) {
            const std::size_t col = static_cast<std::size_t>(m - range.a - 1);
            factor[i][col] = k[i] > 0 ? pow_int(M / m, static_cast<std::uint64_t>(k[i]))
                                      : pow_int(BigInt(m), static_cast<std::uint64_t>(-k[i]));
        }
    }

    BigInt sum(0);
    // Depth-first over strictly increasing tuples, carrying the partial product.
    std::vector<std::size_t> col(r, 0);
    std::vector<BigInt> partial(r + 1);
    partial[0] = 1;
    std::size_t level = 0;
    col[0] = 0;
    while (true) {
        if (col[level] >= width - (r - 1 - level)) {
            if (level == 0) break;
            --level;
            ++col[level];
            continue;
        }
        partial[level + 1] = partial[level] * factor[level][col[level]];
        if (level + 1 == r) {
            sum += partial[level + 1];
            ++col[level];
        } else {
            ++level;
            col[level] = col[level - 1] + 1;
        }
    }
    return Rational(sum, pow_int(M, K));
}

} // namespace fmzv
