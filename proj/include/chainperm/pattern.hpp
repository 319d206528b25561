#pragma once

/**
 * @file pattern.hpp
 * @brief Classical and consecutive pattern containment: decision, first
 *        witness, and exhaustive occurrence counting.
 *
 * Classical search is a depth-first index extension with a feasible-value
 * window per pattern slot. Because candidate positions are tried in
 * increasing order, the first complete match is the lexicographically least
 * position vector, which keeps witnesses deterministic. Consecutive search
 * slides a length-k window and compares rank sequences.
 *
 * The core routines work on any word with distinct entries (not just full
 * permutations of [n]); the enumerator relies on this for prefix pruning.
 */

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chainperm/errors.hpp"
#include "chainperm/permutation.hpp"

namespace chainperm {

enum class PatternFlavor { Classical, Consecutive };

/// A pattern word of length k >= 1, flagged classical or consecutive.
class Pattern {
public:
    Pattern(Permutation word, PatternFlavor flavor)
        : word_(std::move(word)), flavor_(flavor) {
        if (word_.empty()) throw DomainError("pattern word must have length >= 1");
    }

    static Pattern classical(Permutation word) {
        return Pattern(std::move(word), PatternFlavor::Classical);
    }
    static Pattern consecutive(Permutation word) {
        return Pattern(std::move(word), PatternFlavor::Consecutive);
    }

    const Permutation& word() const { return word_; }
    PatternFlavor flavor() const { return flavor_; }
    int length() const { return word_.size(); }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    Permutation word_;
    PatternFlavor flavor_;
};

/// Positions (1-based, strictly increasing) of one pattern occurrence.
/// For consecutive patterns the positions are contiguous.
struct Occurrence {
    std::vector<int> positions;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

namespace detail {

// Depth-first search for an order-isomorphic subsequence. `pos` has pat.size()
// slots; slots [0, slot) are fixed. When `pinned_last` is set, the final slot
// is pre-assigned to the last index of the word, so a match is an occurrence
// ending exactly there.
inline bool classical_dfs(std::span<const int> word, std::span<const int> pat,
                          std::size_t slot, std::size_t start,
                          std::vector<std::size_t>& pos, bool pinned_last) {
    const std::size_t k = pat.size();
    const std::size_t free_slots = pinned_last ? k - 1 : k;
    if (slot == free_slots) return true;

    // feasible-value window for this slot, induced by the fixed slots
    int lo = std::numeric_limits<int>::min();
    int hi = std::numeric_limits<int>::max();
    auto tighten = [&](std::size_t t) {
        const int v = word[pos[t]];
        if (pat[t] < pat[slot]) {
            if (v > lo) lo = v;
        } else {
            if (v < hi) hi = v;
        }
    };
    for (std::size_t t = 0; t < slot; ++t) tighten(t);
    if (pinned_last) tighten(k - 1);

    // i leaves room for the remaining free slots
    const std::size_t limit = word.size() - (pinned_last ? 1 : 0);
    for (std::size_t i = start; i + (free_slots - slot) <= limit; ++i) {
        if (word[i] <= lo || word[i] >= hi) continue;
        pos[slot] = i;
        if (classical_dfs(word, pat, slot + 1, i + 1, pos, pinned_last)) return true;
    }
    return false;
}

inline void classical_count_dfs(std::span<const int> word, std::span<const int> pat,
                                std::size_t slot, std::size_t start,
                                std::vector<std::size_t>& pos, std::uint64_t& count) {
    const std::size_t k = pat.size();
    if (slot == k) {
        ++count;
        return;
    }
    int lo = std::numeric_limits<int>::min();
    int hi = std::numeric_limits<int>::max();
    for (std::size_t t = 0; t < slot; ++t) {
        const int v = word[pos[t]];
        if (pat[t] < pat[slot]) {
            if (v > lo) lo = v;
        } else {
            if (v < hi) hi = v;
        }
    }
    for (std::size_t i = start; i + (k - slot) <= word.size(); ++i) {
        if (word[i] <= lo || word[i] >= hi) continue;
        pos[slot] = i;
        classical_count_dfs(word, pat, slot + 1, i + 1, pos, count);
    }
}

// rank sequence of word[first, first+k) equals pat?
inline bool window_matches(std::span<const int> word, std::size_t first,
                           std::span<const int> pat) {
    const std::size_t k = pat.size();
    for (std::size_t a = 0; a < k; ++a) {
        int rank = 1;
        for (std::size_t b = 0; b < k; ++b)
            if (word[first + b] < word[first + a]) ++rank;
        if (rank != pat[a]) return false;
    }
    return true;
}

}  // namespace detail

/// Lexicographically least classical occurrence of `pat` in `word`, as
/// 1-based positions; std::nullopt if the word avoids the pattern.
inline std::optional<std::vector<int>> classical_occurrence(std::span<const int> word,
                                                            std::span<const int> pat) {
    if (pat.size() > word.size() || pat.empty()) return std::nullopt;
    std::vector<std::size_t> pos(pat.size());
    if (!detail::classical_dfs(word, pat, 0, 0, pos, false)) return std::nullopt;
    std::vector<int> out(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) out[i] = static_cast<int>(pos[i]) + 1;
    return out;
}

inline bool word_contains_classical(std::span<const int> word, std::span<const int> pat) {
    if (pat.size() > word.size() || pat.empty()) return false;
    std::vector<std::size_t> pos(pat.size());
    return detail::classical_dfs(word, pat, 0, 0, pos, false);
}

/// True iff `word` has a classical occurrence of `pat` whose final entry is
/// the last entry of the word. Used for incremental prefix checks: a word
/// known to avoid `pat` before its last entry was appended contains `pat`
/// afterwards iff this returns true.
inline bool word_contains_classical_at_last(std::span<const int> word,
                                            std::span<const int> pat) {
    if (pat.size() > word.size() || pat.empty()) return false;
    std::vector<std::size_t> pos(pat.size());
    pos[pat.size() - 1] = word.size() - 1;
    return detail::classical_dfs(word, pat, 0, 0, pos, true);
}

/// Leftmost consecutive occurrence of `pat` in `word`, as 1-based positions.
inline std::optional<std::vector<int>> consecutive_occurrence(std::span<const int> word,
                                                              std::span<const int> pat) {
    if (pat.size() > word.size() || pat.empty()) return std::nullopt;
    for (std::size_t first = 0; first + pat.size() <= word.size(); ++first) {
        if (detail::window_matches(word, first, pat)) {
            std::vector<int> out(pat.size());
            for (std::size_t i = 0; i < pat.size(); ++i)
                out[i] = static_cast<int>(first + i) + 1;
            return out;
        }
    }
    return std::nullopt;
}

inline bool word_contains_consecutive(std::span<const int> word, std::span<const int> pat) {
    if (pat.size() > word.size() || pat.empty()) return false;
    for (std::size_t first = 0; first + pat.size() <= word.size(); ++first)
        if (detail::window_matches(word, first, pat)) return true;
    return false;
}

/// Witness occurrence of `pat` in `p` (the lexicographically least position
/// vector), or std::nullopt if `p` avoids the pattern. Patterns longer than
/// p are never contained.
inline std::optional<Occurrence> contains(const Permutation& p, const Pattern& pat) {
    const auto& w = p.values();
    const auto& s = pat.word().values();
    auto hit = (pat.flavor() == PatternFlavor::Classical)
                   ? classical_occurrence(w, s)
                   : consecutive_occurrence(w, s);
    if (!hit) return std::nullopt;
    return Occurrence{std::move(*hit)};
}

inline bool avoids(const Permutation& p, const Pattern& pat) {
    const auto& w = p.values();
    const auto& s = pat.word().values();
    return pat.flavor() == PatternFlavor::Classical
               ? !word_contains_classical(w, s)
               : !word_contains_consecutive(w, s);
}

/// Number of distinct occurrences of `pat` in `p`.
inline std::uint64_t count_occurrences(const Permutation& p, const Pattern& pat) {
    const auto& w = p.values();
    const auto& s = pat.word().values();
    if (s.size() > w.size()) return 0;
    if (pat.flavor() == PatternFlavor::Consecutive) {
        std::uint64_t count = 0;
        for (std::size_t first = 0; first + s.size() <= w.size(); ++first)
            if (detail::window_matches(w, first, s)) ++count;
        return count;
    }
    std::uint64_t count = 0;
    std::vector<std::size_t> pos(s.size());
    detail::classical_count_dfs(w, s, 0, 0, pos, count);
    return count;
}

/// Digit form, "~"-prefixed for consecutive flavor ("231", "~213").
/// Words longer than 9 have no text form.
inline std::string to_text(const Pattern& pat) {
    std::string out = pat.flavor() == PatternFlavor::Consecutive ? "~" : "";
    return out + to_compact_text(pat.word());
}

namespace detail {

// Parses one pattern token; offsets in errors are absolute (token starts at
// `offset` within the original input).
inline Pattern parse_pattern_token(std::string_view token, std::size_t offset) {
    if (token.empty()) throw ParseError("empty pattern", offset);
    bool consecutive = false;
    std::size_t i = 0;
    if (token[0] == '~') {
        consecutive = true;
        i = 1;
        if (token.size() == 1) throw ParseError("'~' must be followed by a pattern word", offset);
    }
    if (token.size() - i > 9)
        throw ParseError("pattern words are limited to length <= 9", offset + i);
    std::vector<int> values;
    for (; i < token.size(); ++i) {
        if (token[i] < '1' || token[i] > '9')
            throw ParseError(std::string("unexpected character '") + token[i] +
                                 "' in pattern word",
                             offset + i);
        values.push_back(token[i] - '0');
    }
    try {
        Permutation word = Permutation::from_one_line(std::move(values));
        return Pattern(std::move(word),
                       consecutive ? PatternFlavor::Consecutive : PatternFlavor::Classical);
    } catch (const NotABijection& e) {
        throw ParseError(std::string("pattern word is not a permutation: ") + e.what(),
                         offset);
    }
}

}  // namespace detail

/// Parses "231" (classical) or "~213" (consecutive). Surrounding whitespace
/// is ignored.
inline Pattern parse_pattern(std::string_view text) {
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    std::size_t b = 0, e = text.size();
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    return detail::parse_pattern_token(text.substr(b, e - b), b);
}

}  // namespace chainperm
