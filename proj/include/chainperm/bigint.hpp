#pragma once

/**
 * @file bigint.hpp
 * @brief Unsigned arbitrary-precision integers for the counting formulas.
 *
 * Supports exactly what the formulas need: addition, subtraction, powers of
 * two, comparison, and decimal output. Limbs are base 10^9 so printing is a
 * straight concatenation.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "chainperm/errors.hpp"

namespace chainperm {

class BigUint {
public:
    BigUint() = default;

    BigUint(std::uint64_t v) {
        while (v) {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        }
    }

    /// 2^k by repeated doubling.
    static BigUint pow2(unsigned k) {
        BigUint r(1);
        for (unsigned i = 0; i < k; ++i) r += r;
        return r;
    }

    BigUint& operator+=(const BigUint& rhs) { return *this = *this + rhs; }
    BigUint& operator-=(const BigUint& rhs) { return *this = *this - rhs; }

    friend BigUint operator+(const BigUint& a, const BigUint& b) {
        BigUint r;
        const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
        r.limbs_.reserve(n + 1);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry;
            if (i < a.limbs_.size()) s += a.limbs_[i];
            if (i < b.limbs_.size()) s += b.limbs_[i];
            r.limbs_.push_back(static_cast<std::uint32_t>(s % kBase));
            carry = static_cast<std::uint32_t>(s / kBase);
        }
        if (carry) r.limbs_.push_back(carry);
        return r;
    }

    /// Requires a >= b; throws DomainError otherwise.
    friend BigUint operator-(const BigUint& a, const BigUint& b) {
        if (a < b) throw DomainError("BigUint subtraction would be negative");
        BigUint r;
        r.limbs_.reserve(a.limbs_.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                             (i < b.limbs_.size() ? b.limbs_[i] : 0);
            borrow = 0;
            if (d < 0) {
                d += kBase;
                borrow = 1;
            }
            r.limbs_.push_back(static_cast<std::uint32_t>(d));
        }
        while (!r.limbs_.empty() && r.limbs_.back() == 0) r.limbs_.pop_back();
        return r;
    }

    friend bool operator==(const BigUint&, const BigUint&) = default;

    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        std::string out = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string limb = std::to_string(limbs_[i]);
            out += std::string(9 - limb.size(), '0') + limb;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigUint& v) {
        return os << v.to_string();
    }

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;

    // little-endian base-10^9 digits; empty means zero, no trailing zero limbs
    std::vector<std::uint32_t> limbs_;
};

}  // namespace chainperm
