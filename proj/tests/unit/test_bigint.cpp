#include <doctest.h>

#include <cstdint>
#include <random>

#include "chainperm/bigint.hpp"

using chainperm::BigUint;
using chainperm::DomainError;

TEST_CASE("construction and decimal output") {
    CHECK(BigUint().to_string() == "0");
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(1).to_string() == "1");
    CHECK(BigUint(999999999).to_string() == "999999999");
    CHECK(BigUint(1000000000).to_string() == "1000000000");
    CHECK(BigUint(1000000001).to_string() == "1000000001");
    CHECK(BigUint(UINT64_MAX).to_string() == "18446744073709551615");
}

TEST_CASE("powers of two") {
    CHECK(BigUint::pow2(0) == BigUint(1));
    CHECK(BigUint::pow2(10) == BigUint(1024));
    CHECK(BigUint::pow2(63).to_string() == "9223372036854775808");
    CHECK(BigUint::pow2(100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("addition and subtraction agree with native arithmetic") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t a = rng() >> 1, b = rng() >> 1;  // sums stay in range
        CHECK(BigUint(a) + BigUint(b) == BigUint(a + b));
        const std::uint64_t hi = std::max(a, b), lo = std::min(a, b);
        CHECK(BigUint(hi) - BigUint(lo) == BigUint(hi - lo));
    }
}

TEST_CASE("self-addition doubles") {
    BigUint x(123456789123456789ull);
    x += x;
    CHECK(x == BigUint(246913578246913578ull));
    BigUint big = BigUint::pow2(200);
    big += big;
    CHECK(big == BigUint::pow2(201));
}

TEST_CASE("subtraction below zero throws") {
    CHECK_THROWS_AS(BigUint(1) - BigUint(2), DomainError);
    CHECK((BigUint(2) - BigUint(2)) == BigUint(0));
    CHECK((BigUint::pow2(64) - BigUint(1)).to_string() == "18446744073709551615");
}

TEST_CASE("ordering") {
    CHECK(BigUint(0) < BigUint(1));
    CHECK(BigUint(999999999) < BigUint(1000000000));
    CHECK(BigUint::pow2(90) > BigUint(UINT64_MAX));
    CHECK(BigUint::pow2(64) > BigUint::pow2(63));
    CHECK(BigUint(7) == BigUint(3) + BigUint(4));
}
