#pragma once

// Brute-force reference implementations used only by tests. These stay
// deliberately independent of the library's search paths: pattern search is
// plain all-index-subsets enumeration with pairwise order comparison, and
// chain filtering walks every permutation of S_n with no pruning.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "chainperm/chain.hpp"
#include "chainperm/permutation.hpp"

namespace oracles {

inline bool order_iso(const std::vector<int>& values, const std::vector<int>& pat) {
    for (std::size_t a = 0; a < pat.size(); ++a)
        for (std::size_t b = a + 1; b < pat.size(); ++b)
            if ((values[a] < values[b]) != (pat[a] < pat[b])) return false;
    return true;
}

namespace detail {

template <typename Visit>
inline bool visit_subsets(const std::vector<int>& word, std::size_t k, std::size_t start,
                          std::vector<std::size_t>& idx, Visit&& visit) {
    if (idx.size() == k) return visit(idx);
    for (std::size_t i = start; i + (k - idx.size()) <= word.size(); ++i) {
        idx.push_back(i);
        if (visit_subsets(word, k, i + 1, idx, visit)) return true;
        idx.pop_back();
    }
    return false;
}

}  // namespace detail

// Lexicographically least classical occurrence, by trying every index subset
// in lexicographic order.
inline std::optional<std::vector<int>> classical_witness(const std::vector<int>& word,
                                                         const std::vector<int>& pat) {
    if (pat.empty() || pat.size() > word.size()) return std::nullopt;
    std::vector<std::size_t> idx;
    std::optional<std::vector<int>> found;
    detail::visit_subsets(word, pat.size(), 0, idx, [&](const std::vector<std::size_t>& chosen) {
        std::vector<int> vals;
        for (std::size_t i : chosen) vals.push_back(word[i]);
        if (!order_iso(vals, pat)) return false;
        std::vector<int> positions;
        for (std::size_t i : chosen) positions.push_back(static_cast<int>(i) + 1);
        found = std::move(positions);
        return true;
    });
    return found;
}

inline std::uint64_t classical_count(const std::vector<int>& word, const std::vector<int>& pat) {
    if (pat.empty() || pat.size() > word.size()) return 0;
    std::uint64_t count = 0;
    std::vector<std::size_t> idx;
    detail::visit_subsets(word, pat.size(), 0, idx, [&](const std::vector<std::size_t>& chosen) {
        std::vector<int> vals;
        for (std::size_t i : chosen) vals.push_back(word[i]);
        if (order_iso(vals, pat)) ++count;
        return false;  // keep going
    });
    return count;
}

inline std::optional<std::vector<int>> consecutive_witness(const std::vector<int>& word,
                                                           const std::vector<int>& pat) {
    if (pat.empty() || pat.size() > word.size()) return std::nullopt;
    for (std::size_t first = 0; first + pat.size() <= word.size(); ++first) {
        std::vector<int> vals(word.begin() + static_cast<std::ptrdiff_t>(first),
                              word.begin() + static_cast<std::ptrdiff_t>(first + pat.size()));
        if (order_iso(vals, pat)) {
            std::vector<int> positions;
            for (std::size_t i = 0; i < pat.size(); ++i)
                positions.push_back(static_cast<int>(first + i) + 1);
            return positions;
        }
    }
    return std::nullopt;
}

inline std::uint64_t consecutive_count(const std::vector<int>& word, const std::vector<int>& pat) {
    if (pat.empty() || pat.size() > word.size()) return 0;
    std::uint64_t count = 0;
    for (std::size_t first = 0; first + pat.size() <= word.size(); ++first) {
        std::vector<int> vals(word.begin() + static_cast<std::ptrdiff_t>(first),
                              word.begin() + static_cast<std::ptrdiff_t>(first + pat.size()));
        if (order_iso(vals, pat)) ++count;
    }
    return count;
}

// All of S_n, lexicographic.
inline std::vector<chainperm::Permutation> all_perms(int n) {
    std::vector<chainperm::Permutation> out;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        out.push_back(chainperm::Permutation::from_one_line(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Unpruned filter of all n! permutations through the full-report check.
inline std::vector<chainperm::Permutation> filter_chain(int n, const chainperm::Chain& c) {
    std::vector<chainperm::Permutation> out;
    for (const auto& p : all_perms(n))
        if (chainperm::check_chain(p, c).verdict) out.push_back(p);
    return out;
}

// All 2^(n-1) unimodal permutations of [n]: each subset of {1,...,n-1}
// ascends before the peak n, the complement descends after it.
inline std::vector<chainperm::Permutation> unimodal_perms(int n) {
    std::vector<chainperm::Permutation> out;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(n));
        for (int v = 1; v <= n - 1; ++v)
            if (mask & (1u << (v - 1))) w.push_back(v);
        w.push_back(n);
        for (int v = n - 1; v >= 1; --v)
            if (!(mask & (1u << (v - 1)))) w.push_back(v);
        out.push_back(chainperm::Permutation::from_one_line(std::move(w)));
    }
    return out;
}

}  // namespace oracles
