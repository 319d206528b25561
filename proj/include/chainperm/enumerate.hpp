#pragma once

/**
 * @file enumerate.hpp
 * @brief Brute-force enumeration and counting of chain avoiders over S_n.
 *
 * The search walks S_n in lexicographic order of one-line notation,
 * extending prefixes value by value. A prefix that already contains a
 * level-1 classical pattern is abandoned: classical containment is monotone
 * under extension, so no completion can avoid the chain. Consecutive
 * patterns and all higher levels are checked on complete permutations only,
 * since powers of a prefix are undefined.
 *
 * Parallel runs partition the space by first entry. Workers share nothing
 * mutable and the merge preserves first-entry order, so output is
 * bit-identical for any worker count.
 */

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

#include "chainperm/bigint.hpp"
#include "chainperm/chain.hpp"
#include "chainperm/closed_forms.hpp"
#include "chainperm/errors.hpp"
#include "chainperm/pattern.hpp"
#include "chainperm/permutation.hpp"
#include "chainperm/structural.hpp"

namespace chainperm {

enum class CountMethod { Brute, Structural, Closed };

struct CountEntry {
    int n;
    BigUint count;
};

/// Per-n counts for one chain over a contiguous range of n, tagged with the
/// method that produced them.
struct CountSequence {
    Chain chain;
    CountMethod method;
    std::vector<CountEntry> entries;  // sorted by n, contiguous
};

namespace detail {

// A chain separated into what the search needs: level-1 classical words for
// prefix pruning, level-1 consecutive words for the leaf check, and the
// higher levels verbatim.
struct CompiledChain {
    std::vector<std::vector<int>> prune_words;
    std::vector<std::vector<int>> level1_consecutive;
    std::vector<std::vector<Pattern>> higher;  // higher[i] constrains pi^(i+2)
};

inline CompiledChain compile(const Chain& c) {
    CompiledChain cc;
    const auto& levels = c.levels();
    for (const Pattern& pat : levels[0]) {
        if (pat.flavor() == PatternFlavor::Classical)
            cc.prune_words.push_back(pat.word().values());
        else
            cc.level1_consecutive.push_back(pat.word().values());
    }
    std::size_t last = 0;
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (!levels[i].empty()) last = i + 1;
    for (std::size_t i = 1; i < last; ++i) cc.higher.push_back(levels[i]);
    return cc;
}

inline bool prefix_viable(const CompiledChain& cc, const std::vector<int>& word) {
    for (const auto& pw : cc.prune_words)
        if (word_contains_classical_at_last(word, pw)) return false;
    return true;
}

// Checks everything prefix pruning could not: level-1 consecutive patterns
// and all higher levels, with powers computed incrementally.
inline bool passes_full_checks(const CompiledChain& cc, const std::vector<int>& word) {
    for (const auto& pw : cc.level1_consecutive)
        if (word_contains_consecutive(word, pw)) return false;
    if (!cc.higher.empty()) {
        const Permutation p = Permutation::from_one_line(word);
        Permutation cur = p;
        for (const auto& level : cc.higher) {
            cur = compose(p, cur);
            for (const Pattern& pat : level)
                if (!avoids(cur, pat)) return false;
        }
    }
    return true;
}

// Depth-first lexicographic extension below a fixed first entry.
// leaf(word) is called for every complete avoider, in lexicographic order.
template <typename Leaf>
inline void extend(const CompiledChain& cc, int n, std::vector<int>& word,
                   std::uint32_t used, Leaf&& leaf) {
    if (static_cast<int>(word.size()) == n) {
        if (passes_full_checks(cc, word)) leaf(word);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        const std::uint32_t bit = 1u << v;
        if (used & bit) continue;
        word.push_back(v);
        if (prefix_viable(cc, word)) extend(cc, n, word, used | bit, leaf);
        word.pop_back();
    }
}

template <typename Leaf>
inline void walk_unit(const CompiledChain& cc, int n, int first, Leaf&& leaf) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    word.push_back(first);
    if (prefix_viable(cc, word)) extend(cc, n, word, 1u << first, leaf);
}

// Runs unit(first) for first = 1..n and returns the per-unit results in
// first-entry order, regardless of worker count.
template <typename R, typename UnitFn>
inline std::vector<R> run_units(int n, int threads, UnitFn&& unit) {
    std::vector<R> out(static_cast<std::size_t>(n));
    const int workers = std::min(std::max(threads, 1), n);
    if (workers == 1) {
        for (int first = 1; first <= n; ++first)
            out[static_cast<std::size_t>(first - 1)] = unit(first);
        return out;
    }
    std::atomic<int> next{1};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                while (true) {
                    const int first = next.fetch_add(1);
                    if (first > n) break;
                    out[static_cast<std::size_t>(first - 1)] = unit(first);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

inline void check_enumeration_domain(int n) {
    if (n < 0) throw DomainError("enumeration: n must be non-negative");
    if (n > 24) throw DomainError("enumeration: n is limited to 24");
}

}  // namespace detail

/// Streams every p in S_n with avoids_chain(p, c), in lexicographic order of
/// one-line notation. With threads == 1 results are emitted as found; with
/// more workers each first-entry block is buffered and emitted in order, so
/// the emission order is identical either way.
inline void for_each_avoider(int n, const Chain& c,
                             const std::function<void(const Permutation&)>& emit,
                             int threads = 1) {
    detail::check_enumeration_domain(n);
    const detail::CompiledChain cc = detail::compile(c);
    if (n == 0) {
        if (detail::passes_full_checks(cc, {})) emit(Permutation());
        return;
    }
    if (threads <= 1) {
        for (int first = 1; first <= n; ++first)
            detail::walk_unit(cc, n, first, [&](const std::vector<int>& word) {
                emit(Permutation::from_one_line(word));
            });
        return;
    }
    auto blocks = detail::run_units<std::vector<Permutation>>(
        n, threads, [&](int first) {
            std::vector<Permutation> acc;
            detail::walk_unit(cc, n, first, [&](const std::vector<int>& word) {
                acc.push_back(Permutation::from_one_line(word));
            });
            return acc;
        });
    for (const auto& block : blocks)
        for (const auto& p : block) emit(p);
}

/// Materialized enumerate: all avoiders in lexicographic order.
inline std::vector<Permutation> enumerate_avoiders(int n, const Chain& c, int threads = 1) {
    std::vector<Permutation> out;
    for_each_avoider(n, c, [&](const Permutation& p) { out.push_back(p); }, threads);
    return out;
}

/// |enumerate_avoiders(n, c)| without materializing the list.
inline std::uint64_t count_avoiders(int n, const Chain& c, int threads = 1) {
    detail::check_enumeration_domain(n);
    const detail::CompiledChain cc = detail::compile(c);
    if (n == 0) return detail::passes_full_checks(cc, {}) ? 1 : 0;
    auto counts = detail::run_units<std::uint64_t>(n, threads, [&](int first) {
        std::uint64_t count = 0;
        detail::walk_unit(cc, n, first, [&](const std::vector<int>&) { ++count; });
        return count;
    });
    std::uint64_t total = 0;
    for (std::uint64_t c0 : counts) total += c0;
    return total;
}

namespace detail {

inline BigUint count_by_method(const Chain& c, int n, CountMethod method, int threads) {
    switch (method) {
        case CountMethod::Brute:
            return BigUint(count_avoiders(n, c, threads));
        case CountMethod::Structural:
            if (c == chain231()) return BigUint(gen_chain231(n).size());
            if (c == chain213()) return BigUint(gen_chain213(n).size());
            throw UnsupportedChain("structural counting supports only " +
                                   to_text(chain231()) + " and " + to_text(chain213()) +
                                   "; got " + to_text(c));
        case CountMethod::Closed:
            if (c == chain231()) return f_closed(n);
            if (c == chain213()) return g_closed(n);
            throw UnsupportedChain("closed-form counting supports only " +
                                   to_text(chain231()) + " and " + to_text(chain213()) +
                                   "; got " + to_text(c));
    }
    throw DomainError("unknown counting method");
}

}  // namespace detail

/// Counts for every n in [n_min, n_max] with the chosen method. Structural
/// and closed methods support only the two recognized chains and throw
/// UnsupportedChain otherwise.
inline CountSequence sequence(const Chain& c, int n_min, int n_max, CountMethod method,
                              int threads = 1) {
    if (n_min < 0 || n_min > n_max)
        throw DomainError("sequence: requires 0 <= n_min <= n_max");
    CountSequence cs{c, method, {}};
    cs.entries.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n)
        cs.entries.push_back({n, detail::count_by_method(c, n, method, threads)});
    return cs;
}

}  // namespace chainperm
