#pragma once

/**
 * @file structural.hpp
 * @brief Constructive generators and classifiers for the two chain-avoidance
 *        families; the fast, structure-backed alternative to brute force.
 *
 * S_n(231,1432:231) splits, for n >= 3, into three disjoint classes by shape:
 * words beginning with n (an explicit two-run family), words ending with n
 * (sigma + 1), and words ending with n(n-1) (sigma + 21). The recursion over
 * those classes drives gen_chain231.
 *
 * S_n(213,312:~213) consists of unimodal permutations and splits into words
 * beginning with 1 (1 + sigma) and an explicit family of words ending with 1
 * (gen_q2), driving gen_chain213.
 *
 * Every generator returns a lexicographically sorted list, so agreement with
 * the brute-force enumerator is plain list equality.
 */

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <mutex>
#include <vector>

#include "chainperm/chain.hpp"
#include "chainperm/errors.hpp"
#include "chainperm/permutation.hpp"

namespace chainperm {

/// The chain (231,1432 : 231).
inline const Chain& chain231() {
    static const Chain c = parse_chain("231,1432:231");
    return c;
}

/// The chain (213,312 : ~213).
inline const Chain& chain213() {
    static const Chain c = parse_chain("213,312:~213");
    return c;
}

/// The three shapes an avoider of (231,1432:231) can take for n >= 3.
enum class TrichotomyTag {
    StartsWithMax,     // pi_1 = n            (P1)
    EndsWithMax,       // pi_n = n            (P2)
    EndsMaxThenSecond  // pi_{n-1} pi_n = n(n-1)  (P3)
};

/// Assigns the unique applicable tag. The shapes are checked in the fixed
/// order P1, P2, P3 and are mutually exclusive for n >= 3. Throws
/// NotInTrichotomy when none applies, which certifies that the input lies
/// outside S_n(231,1432:231) -- useful as a falsification probe.
inline TrichotomyTag classify_trichotomy(const Permutation& p) {
    const int n = p.size();
    if (n < 3) throw DomainError("classify_trichotomy: requires n >= 3");
    const bool starts_max = p(1) == n;
    const bool ends_max = p(n) == n;
    const bool ends_pair = p(n - 1) == n && p(n) == n - 1;
    assert(static_cast<int>(starts_max) + static_cast<int>(ends_max) +
               static_cast<int>(ends_pair) <=
           1);
    if (starts_max) return TrichotomyTag::StartsWithMax;
    if (ends_max) return TrichotomyTag::EndsWithMax;
    if (ends_pair) return TrichotomyTag::EndsMaxThenSecond;
    throw NotInTrichotomy("permutation " + to_text(p) +
                          " matches none of the three shapes");
}

/// The avoiders of (231,1432:231) beginning with n:
/// n (n-1) ... (n-k+1) 1 2 ... (n-k) for ceil(n/2) <= k <= n-1, ordered by
/// increasing k (which is lexicographic order). Exactly ceil((n-1)/2) words.
inline std::vector<Permutation> gen_p1(int n) {
    if (n < 3) throw DomainError("gen_p1: requires n >= 3");
    std::vector<Permutation> out;
    for (int k = (n + 1) / 2; k <= n - 1; ++k) {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(n));
        for (int v = n; v >= n - k + 1; --v) w.push_back(v);
        for (int v = 1; v <= n - k; ++v) w.push_back(v);
        out.push_back(Permutation::from_one_line(std::move(w)));
    }
    return out;
}

/// The strongly 312-avoiding permutations ending in 1:
/// (k+1)(k+2) ... n k (k-1) ... 1 for ceil(n/2) <= k <= n-1, ordered by
/// increasing k. Each element's inverse lies in gen_p1(n).
inline std::vector<Permutation> gen_bona_smith_family(int n) {
    if (n < 2) throw DomainError("gen_bona_smith_family: requires n >= 2");
    std::vector<Permutation> out;
    for (int k = (n + 1) / 2; k <= n - 1; ++k) {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(n));
        for (int v = k + 1; v <= n; ++v) w.push_back(v);
        for (int v = k; v >= 1; --v) w.push_back(v);
        out.push_back(Permutation::from_one_line(std::move(w)));
    }
    return out;
}

/// The avoiders of (213,312:~213) ending with 1, for n >= 3: the cycle
/// 2 3 ... n 1 plus, for every subset S of {2,...,n-2}, the word
/// ascending(S) n (n-1) descending({2,...,n-2} \ S) 1. Subsets are iterated
/// by an (n-3)-bit counter; the two families are disjoint (asserted, not
/// assumed). Sorted lexicographically; 2^(n-3) + 1 words in total.
inline std::vector<Permutation> gen_q2(int n) {
    if (n < 3) throw DomainError("gen_q2: requires n >= 3");
    if (n > 34) throw DomainError("gen_q2: subset construction is limited to n <= 34");
    std::vector<Permutation> out;

    std::vector<int> cycle;
    cycle.reserve(static_cast<std::size_t>(n));
    for (int v = 2; v <= n; ++v) cycle.push_back(v);
    cycle.push_back(1);
    out.push_back(Permutation::from_one_line(std::move(cycle)));

    const int bits = n - 3;  // one bit per element of {2,...,n-2}
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < bits; ++j)
            if (mask & (1u << j)) w.push_back(j + 2);
        w.push_back(n);
        w.push_back(n - 1);
        for (int j = bits - 1; j >= 0; --j)
            if (!(mask & (1u << j))) w.push_back(j + 2);
        w.push_back(1);
        out.push_back(Permutation::from_one_line(std::move(w)));
    }

    std::sort(out.begin(), out.end());
    assert(std::adjacent_find(out.begin(), out.end()) == out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

// Shared recursion driver for the two memoized family generators. Base cases
// are S_0, S_1, S_2 in full; Step builds S_m from the smaller lists.
template <typename Step>
inline std::vector<Permutation> memoized_family(int n, std::vector<std::vector<Permutation>>& cache,
                                                std::mutex& mu, Step&& step) {
    if (n < 0) throw DomainError("family generators require n >= 0");
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        cache.push_back({Permutation()});
        cache.push_back({Permutation::identity(1)});
        cache.push_back({parse_permutation("12"), parse_permutation("21")});
    }
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        std::vector<Permutation> next = step(m, cache);
        std::sort(next.begin(), next.end());
        assert(std::adjacent_find(next.begin(), next.end()) == next.end());
        cache.push_back(std::move(next));
    }
    return cache[static_cast<std::size_t>(n)];
}

}  // namespace detail

/// S_n(231,1432:231), built recursively from the trichotomy:
/// gen_p1(n), plus sigma + 1 over S_{n-1} avoiders, plus sigma + 21 over
/// S_{n-2} avoiders. Memoized by n; sorted lexicographically.
inline std::vector<Permutation> gen_chain231(int n) {
    static std::mutex mu;
    static std::vector<std::vector<Permutation>> cache;
    return detail::memoized_family(
        n, cache, mu, [](int m, const std::vector<std::vector<Permutation>>& c) {
            std::vector<Permutation> next = gen_p1(m);
            const Permutation one = Permutation::identity(1);
            const Permutation two_one = parse_permutation("21");
            for (const auto& s : c[static_cast<std::size_t>(m - 1)])
                next.push_back(direct_sum(s, one));
            for (const auto& s : c[static_cast<std::size_t>(m - 2)])
                next.push_back(direct_sum(s, two_one));
            return next;
        });
}

/// S_n(213,312:~213), built recursively: 1 + sigma over S_{n-1} avoiders,
/// plus gen_q2(n). Memoized by n; sorted lexicographically.
inline std::vector<Permutation> gen_chain213(int n) {
    static std::mutex mu;
    static std::vector<std::vector<Permutation>> cache;
    return detail::memoized_family(
        n, cache, mu, [](int m, const std::vector<std::vector<Permutation>>& c) {
            std::vector<Permutation> next = gen_q2(m);
            const Permutation one = Permutation::identity(1);
            for (const auto& s : c[static_cast<std::size_t>(m - 1)])
                next.push_back(direct_sum(one, s));
            return next;
        });
}

/// Falsification probe for the peak property of unimodal permutations:
/// wherever pi^2 has a consecutive-213 window centered at an interior
/// position i, the center must satisfy pi(i) = n. Returns true iff that
/// holds for every interior window; the property says it always does.
/// Throws NotUnimodal for non-unimodal input, DomainError for n < 3.
inline bool check_peak_lemma(const Permutation& p) {
    const int n = p.size();
    if (n < 3) throw DomainError("check_peak_lemma: requires n >= 3");
    if (!is_unimodal(p))
        throw NotUnimodal("check_peak_lemma: input is not unimodal: " + to_text(p));
    const Permutation sq = compose(p, p);
    for (int i = 2; i <= n - 1; ++i) {
        const int a = sq(i - 1), b = sq(i), c = sq(i + 1);
        const bool window_is_213 = b < a && a < c;
        if (window_is_213 && p(i) != n) return false;
    }
    return true;
}

}  // namespace chainperm
