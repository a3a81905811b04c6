#include "fmzv/bernoulli.hpp"

#include <mutex>

namespace fmzv {

namespace {

// Minus-convention numbers Bm_j = B_j(0), computed by the classical
// recurrence sum_{j<m} C(m+1,j) * Bm_j = -(m+1) * Bm_m ... rearranged below.
// The Seki numbers are (-1)^j * Bm_j (only j = 1 changes sign).
std::vector<Rational>& minus_convention_cache() {
    static std::vector<Rational> cache{Rational(1)};
    return cache;
}

std::mutex& bernoulli_mutex() {
    static std::mutex m;
    return m;
}

void extend_minus_convention(unsigned N) {
    auto& cache = minus_convention_cache();
    for (unsigned m = static_cast<unsigned>(cache.size()); m <= N; ++m) {
        // sum_{j=0}^{m} C(m+1,j) B_j(0) = 0 for m >= 1.
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(binomial(m + 1, m)));
    }
}

} // namespace

std::vector<Rational> bernoulli_numbers(unsigned N) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex());
    extend_minus_convention(N);
    const auto& cache = minus_convention_cache();
    std::vector<Rational> out(N + 1);
    for (unsigned j = 0; j <= N; ++j) out[j] = (j % 2 == 0) ? cache[j] : -cache[j];
    return out;
}

Rational bernoulli_number(unsigned j) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex());
    extend_minus_convention(j);
    const Rational& b = minus_convention_cache()[j];
    return (j % 2 == 0) ? b : -b;
}

PolyQ bernoulli_polynomial(unsigned n) {
    std::vector<Rational> minus(n + 1);
    {
        std::lock_guard<std::mutex> lock(bernoulli_mutex());
        extend_minus_convention(n);
        const auto& cache = minus_convention_cache();
        for (unsigned j = 0; j <= n; ++j) minus[j] = cache[j];
    }
    // B_n(x) = sum_j C(n,j) B_j(0) x^{n-j}.
    PolyQ p;
    for (unsigned j = 0; j <= n; ++j) p.add_term(n - j, Rational(binomial(n, j)) * minus[j]);
    return p;
}

} // namespace fmzv
