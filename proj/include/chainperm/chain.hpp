#pragma once

/**
 * @file chain.hpp
 * @brief Chains of pattern constraints on successive powers of a
 *        permutation, their text grammar, and avoidance decisions.
 *
 * A chain has levels 1..k; level i constrains pi^i with a set of patterns.
 * pi avoids the chain iff pi^i avoids every pattern of level i for all i.
 *
 * Grammar:  chain   := level (":" level)*
 *           level   := "-" | pattern ("," pattern)*
 *           pattern := "~"? digits
 * "-" is an unconstrained placeholder level so later powers can be
 * constrained. Whitespace around tokens is ignored; canonical rendering
 * uses none.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chainperm/errors.hpp"
#include "chainperm/pattern.hpp"
#include "chainperm/permutation.hpp"

namespace chainperm {

/// Ordered levels of pattern sets; levels()[i-1] constrains pi^i.
/// Immutable after construction. Within a level, patterns are distinct and
/// kept in the order given (duplicates collapse); equality between chains is
/// per-level set equality.
class Chain {
public:
    explicit Chain(std::vector<std::vector<Pattern>> levels) : levels_(std::move(levels)) {
        if (levels_.empty()) throw DomainError("chain must have at least one level");
        bool any = false;
        for (auto& level : levels_) {
            std::vector<Pattern> unique;
            for (auto& pat : level)
                if (std::find(unique.begin(), unique.end(), pat) == unique.end())
                    unique.push_back(std::move(pat));
            level = std::move(unique);
            any = any || !level.empty();
        }
        if (!any) throw DomainError("chain must constrain at least one level");
    }

    const std::vector<std::vector<Pattern>>& levels() const { return levels_; }

    /// Number of levels, k.
    int length() const { return static_cast<int>(levels_.size()); }

    friend bool operator==(const Chain& a, const Chain& b) {
        if (a.levels_.size() != b.levels_.size()) return false;
        for (std::size_t i = 0; i < a.levels_.size(); ++i) {
            const auto& la = a.levels_[i];
            const auto& lb = b.levels_[i];
            if (la.size() != lb.size()) return false;
            for (const auto& pat : la)
                if (std::find(lb.begin(), lb.end(), pat) == lb.end()) return false;
        }
        return true;
    }

private:
    std::vector<std::vector<Pattern>> levels_;
};

/// Parses the chain grammar. Throws ParseError for empty input, a bad
/// pattern word, an empty level (e.g. trailing ":"), or a chain in which
/// every level is unconstrained.
inline Chain parse_chain(std::string_view text) {
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    auto trim = [&](std::size_t& b, std::size_t& e) {
        while (b < e && is_space(text[b])) ++b;
        while (e > b && is_space(text[e - 1])) --e;
    };

    std::size_t tb = 0, te = text.size();
    trim(tb, te);
    if (tb == te) throw ParseError("empty chain", 0);

    std::vector<std::vector<Pattern>> levels;
    std::size_t level_begin = tb;
    bool done = false;
    while (!done) {
        std::size_t colon = text.find(':', level_begin);
        std::size_t lb = level_begin;
        std::size_t le = (colon == std::string_view::npos || colon >= te) ? te : colon;
        done = (le == te);
        trim(lb, le);
        if (lb == le) throw ParseError("empty level", level_begin);

        std::vector<Pattern> level;
        if (le - lb == 1 && text[lb] == '-') {
            // unconstrained placeholder
        } else {
            std::size_t pat_begin = lb;
            bool level_done = false;
            while (!level_done) {
                std::size_t comma = text.find(',', pat_begin);
                std::size_t pb = pat_begin;
                std::size_t pe = (comma == std::string_view::npos || comma >= le) ? le : comma;
                level_done = (pe == le);
                trim(pb, pe);
                if (pb == pe) throw ParseError("empty pattern in level", pat_begin);
                level.push_back(detail::parse_pattern_token(text.substr(pb, pe - pb), pb));
                pat_begin = level_done ? le : comma + 1;
            }
        }
        levels.push_back(std::move(level));
        level_begin = done ? te : colon + 1;
    }

    bool any = false;
    for (const auto& level : levels) any = any || !level.empty();
    if (!any) throw ParseError("chain constrains nothing: every level is '-'", 0);
    return Chain(std::move(levels));
}

/// Canonical text form: levels joined by ':', patterns by ',', empty levels
/// as '-'; no whitespace. parse_chain(to_text(c)) == c.
inline std::string to_text(const Chain& c) {
    std::string out;
    for (std::size_t i = 0; i < c.levels().size(); ++i) {
        if (i) out += ':';
        const auto& level = c.levels()[i];
        if (level.empty()) {
            out += '-';
            continue;
        }
        for (std::size_t j = 0; j < level.size(); ++j) {
            if (j) out += ',';
            out += to_text(level[j]);
        }
    }
    return out;
}

/// Per-(level, pattern) outcome of a chain check.
struct AvoidanceReport {
    struct Entry {
        int power_index;                   // i: the entry concerns pi^i
        Permutation power;                 // pi^i itself
        Pattern pattern;
        std::optional<Occurrence> witness;
    };

    bool verdict = true;  // true iff every entry is witness-free
    std::vector<Entry> entries;
};

/// Full diagnostic check: computes pi^1, pi^2, ... incrementally (one
/// composition per level) and records, for every (level, pattern), the
/// witness occurrence if any. Does not short-circuit.
inline AvoidanceReport check_chain(const Permutation& p, const Chain& c) {
    AvoidanceReport report;
    const auto& levels = c.levels();
    std::size_t last = 0;
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (!levels[i].empty()) last = i + 1;

    Permutation cur;
    for (std::size_t i = 1; i <= last; ++i) {
        cur = (i == 1) ? p : compose(p, cur);
        for (const Pattern& pat : levels[i - 1]) {
            auto witness = contains(cur, pat);
            if (witness) report.verdict = false;
            report.entries.push_back(
                {static_cast<int>(i), cur, pat, std::move(witness)});
        }
    }
    return report;
}

/// Boolean fast path: same decision as check_chain(p, c).verdict, but
/// short-circuits on the first contained pattern.
inline bool avoids_chain(const Permutation& p, const Chain& c) {
    const auto& levels = c.levels();
    std::size_t last = 0;
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (!levels[i].empty()) last = i + 1;

    Permutation cur;
    for (std::size_t i = 1; i <= last; ++i) {
        cur = (i == 1) ? p : compose(p, cur);
        for (const Pattern& pat : levels[i - 1])
            if (!avoids(cur, pat)) return false;
    }
    return true;
}

/// True iff both p and p^2 avoid the (classical) pattern; equivalent to
/// avoiding the chain (pat : pat).
inline bool strongly_avoids(const Permutation& p, const Pattern& pat) {
    if (pat.flavor() != PatternFlavor::Classical)
        throw DomainError("strongly_avoids requires a classical pattern");
    return avoids(p, pat) && avoids(compose(p, p), pat);
}

}  // namespace chainperm
