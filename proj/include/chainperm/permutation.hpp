#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations of {1,...,n} in one-line notation and their algebra:
 *        composition, powers, inverse, direct sum, unimodality, text I/O.
 */

#include <cassert>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chainperm/errors.hpp"

namespace chainperm {

/// Immutable permutation of {1,...,n}, stored in one-line notation:
/// values()[i] = pi(i+1). The empty permutation (n = 0) and n = 1 are legal
/// everywhere. Values are 1-based in the API and in all I/O.
///
/// Permutation is a value type with no mutating operations; instances can be
/// shared freely between threads.
class Permutation {
public:
    Permutation() = default;

    /// Builds a permutation from one-line notation. Throws NotABijection
    /// (carrying the 1-based offending index) on a duplicate, out-of-range,
    /// or missing value. An empty sequence yields the empty permutation.
    static Permutation from_one_line(std::vector<int> values) {
        const int n = static_cast<int>(values.size());
        std::vector<char> seen(values.size(), 0);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const int v = values[i];
            if (v < 1 || v > n)
                throw NotABijection("value " + std::to_string(v) +
                                        " out of range [1," + std::to_string(n) +
                                        "] at index " + std::to_string(i + 1),
                                    i + 1);
            if (seen[static_cast<std::size_t>(v - 1)])
                throw NotABijection("duplicate value " + std::to_string(v) +
                                        " at index " + std::to_string(i + 1),
                                    i + 1);
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
        return Permutation(std::move(values), Trusted{});
    }

    /// The identity 1 2 ... n.
    static Permutation identity(int n) {
        if (n < 0) throw DomainError("identity: n must be non-negative");
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v), Trusted{});
    }

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    /// 1-based application, pi(i).
    int operator()(int i) const {
        assert(i >= 1 && i <= size());
        return values_[static_cast<std::size_t>(i - 1)];
    }

    /// One-line notation, 1-based values.
    const std::vector<int>& values() const { return values_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

    /// Lexicographic order on one-line notation.
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.values_ <=> b.values_;
    }

private:
    struct Trusted {};
    Permutation(std::vector<int> values, Trusted) : values_(std::move(values)) {}

    std::vector<int> values_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);
    friend Permutation direct_sum(const Permutation&, const Permutation&);
};

/// Functional composition, (p o q)(i) = p(q(i)). Throws LengthMismatch
/// unless both operands have the same length.
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw LengthMismatch("compose: length mismatch (" + std::to_string(p.size()) +
                             " vs " + std::to_string(q.size()) + ")");
    std::vector<int> r(q.values_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = p.values_[static_cast<std::size_t>(q.values_[i] - 1)];
    return Permutation(std::move(r), Permutation::Trusted{});
}

/// q with q(p(i)) = i for all i.
inline Permutation inverse(const Permutation& p) {
    std::vector<int> q(p.values_.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        q[static_cast<std::size_t>(p.values_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(q), Permutation::Trusted{});
}

/// p's word followed by q's word shifted up by |p|.
inline Permutation direct_sum(const Permutation& p, const Permutation& q) {
    std::vector<int> r;
    r.reserve(p.values_.size() + q.values_.size());
    r = p.values_;
    for (int v : q.values_) r.push_back(v + p.size());
    return Permutation(std::move(r), Permutation::Trusted{});
}

/// pi^k by iterated composition; pi^0 is the identity. Exponents here are
/// chain lengths, so no cycle shortcuts.
inline Permutation power(const Permutation& p, int k) {
    if (k < 0) throw DomainError("power: exponent must be non-negative");
    Permutation r = Permutation::identity(p.size());
    for (int i = 0; i < k; ++i) r = compose(p, r);
    return r;
}

/// True iff the word strictly increases to a unique peak and then strictly
/// decreases. Monotone words qualify. Requires n >= 1.
inline bool is_unimodal(const Permutation& p) {
    if (p.empty()) throw DomainError("is_unimodal: requires n >= 1");
    const auto& v = p.values();
    std::size_t i = 1;
    while (i < v.size() && v[i] > v[i - 1]) ++i;
    while (i < v.size() && v[i] < v[i - 1]) ++i;
    return i == v.size();
}

/// Comma-separated one-line form, e.g. "4,3,1,2". Empty string for n = 0.
inline std::string to_text(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.values().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.values()[i]);
    }
    return out;
}

/// Contiguous digit form, e.g. "4312". Only defined for n <= 9.
inline std::string to_compact_text(const Permutation& p) {
    if (p.size() > 9)
        throw DomainError("compact permutation form is limited to n <= 9");
    std::string out;
    for (int v : p.values()) out += static_cast<char>('0' + v);
    return out;
}

/// Parses "4,3,1,2" (comma-separated) or "4312" (contiguous digits, accepted
/// iff n <= 9). Surrounding whitespace is ignored. The empty string is the
/// empty permutation. Throws ParseError on malformed text and NotABijection
/// when the values do not form a permutation.
inline Permutation parse_permutation(std::string_view text) {
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    std::size_t b = 0, e = text.size();
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    const std::string_view s = text.substr(b, e - b);
    if (s.empty()) return Permutation();

    std::vector<int> values;
    if (s.find(',') == std::string_view::npos) {
        // compact digit form
        if (s.size() > 9)
            throw ParseError("compact permutation form is limited to n <= 9; use commas", b);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw ParseError(std::string("unexpected character '") + s[i] +
                                     "' in permutation",
                                 b + i);
            values.push_back(s[i] - '0');
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = s.find(',', pos);
            std::size_t tb = pos, te = (comma == std::string_view::npos) ? s.size() : comma;
            while (tb < te && is_space(s[tb])) ++tb;
            while (te > tb && is_space(s[te - 1])) --te;
            if (tb == te) throw ParseError("empty entry in permutation", b + pos);
            int v = 0;
            auto [ptr, ec] = std::from_chars(s.data() + tb, s.data() + te, v);
            if (ec != std::errc() || ptr != s.data() + te)
                throw ParseError("invalid permutation entry '" +
                                     std::string(s.substr(tb, te - tb)) + "'",
                                 b + tb);
            values.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return Permutation::from_one_line(std::move(values));
}

}  // namespace chainperm
