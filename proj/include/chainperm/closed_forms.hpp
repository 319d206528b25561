#pragma once

/**
 * @file closed_forms.hpp
 * @brief Exact counting formulas and recurrences for the two chain families.
 *
 * f(n) = |S_n(231,1432:231)|:  f(n) = L(n+1) - ceil(n/2) - 1, equivalently
 *        f(1) = 1, f(2) = 2, f(n) = ceil((n-1)/2) + f(n-1) + f(n-2).
 * g(n) = |S_n(213,312:~213)|:  g(n) = 2^(n-2) + n - 1, equivalently
 *        g(2) = 2, g(n) = g(n-1) + 2^(n-3) + 1.
 *
 * L is the Lucas sequence with L(1) = 1, L(2) = 3 (and L(0) = 2 by running
 * the recurrence backward). Everything is arbitrary precision: 2^(n-2) and
 * L(n) outgrow 64 bits near n = 90, and the formulas stay valid far beyond
 * the reach of enumeration.
 *
 * Arguments below a formula's stated domain throw DomainError rather than
 * silently extending. In particular g is only defined from n = 2; the n = 1
 * count of S_1(213,312:~213) is 1 by enumeration, outside the formula.
 */

#include <cstddef>
#include <vector>

#include "chainperm/bigint.hpp"
#include "chainperm/errors.hpp"

namespace chainperm {

/// Memoizing Lucas-number cache. Not synchronized: use one instance per
/// thread, or the cache-free lucas() below.
class LucasSequence {
public:
    /// L(m); extends the cache as needed.
    const BigUint& at(std::size_t m) {
        while (cache_.size() <= m)
            cache_.push_back(cache_[cache_.size() - 1] + cache_[cache_.size() - 2]);
        return cache_[m];
    }

private:
    std::vector<BigUint> cache_{BigUint(2), BigUint(1)};  // L(0), L(1)
};

/// L(m), recomputed per call; safe for unrestricted concurrent use.
inline BigUint lucas(int m) {
    if (m < 0) throw DomainError("lucas: m must be non-negative");
    BigUint prev(2), cur(1);  // L(0), L(1)
    if (m == 0) return prev;
    for (int i = 1; i < m; ++i) {
        BigUint next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// L(n+1) - ceil(n/2) - 1, for n >= 1.
inline BigUint f_closed(int n) {
    if (n < 1) throw DomainError("f_closed: requires n >= 1");
    return lucas(n + 1) - BigUint(static_cast<std::uint64_t>(n + 1) / 2 + 1);
}

/// f(1) = 1, f(2) = 2, f(n) = ceil((n-1)/2) + f(n-1) + f(n-2).
inline BigUint f_recurrence(int n) {
    if (n < 1) throw DomainError("f_recurrence: requires n >= 1");
    BigUint prev(1), cur(2);  // f(1), f(2)
    if (n == 1) return prev;
    for (int i = 3; i <= n; ++i) {
        BigUint next = BigUint(static_cast<std::uint64_t>(i) / 2) + cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// 2^(n-2) + n - 1, for n >= 2.
inline BigUint g_closed(int n) {
    if (n < 2) throw DomainError("g_closed: requires n >= 2");
    return BigUint::pow2(static_cast<unsigned>(n - 2)) +
           BigUint(static_cast<std::uint64_t>(n - 1));
}

/// g(2) = 2, g(n) = g(n-1) + 2^(n-3) + 1.
inline BigUint g_recurrence(int n) {
    if (n < 2) throw DomainError("g_recurrence: requires n >= 2");
    BigUint cur(2);  // g(2)
    for (int i = 3; i <= n; ++i)
        cur += BigUint::pow2(static_cast<unsigned>(i - 3)) + BigUint(1);
    return cur;
}

/// |P1_n| = ceil((n-1)/2), for n >= 3: the avoiders of (231,1432:231)
/// beginning with n.
inline BigUint p1_count(int n) {
    if (n < 3) throw DomainError("p1_count: requires n >= 3");
    return BigUint(static_cast<std::uint64_t>(n) / 2);
}

/// |Q2_n| = 2^(n-3) + 1, for n >= 3: the avoiders of (213,312:~213)
/// ending with 1.
inline BigUint q2_count(int n) {
    if (n < 3) throw DomainError("q2_count: requires n >= 3");
    return BigUint::pow2(static_cast<unsigned>(n - 3)) + BigUint(1);
}

}  // namespace chainperm
