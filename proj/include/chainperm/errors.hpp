#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainperm {

/// Base class of everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value sequence is not a bijection of {1,...,n}.
struct NotABijection : Error {
    NotABijection(const std::string& msg, std::size_t index)
        : Error(msg), index(index) {}
    std::size_t index;  // 1-based position of the offending value
};

/// Operands of a composition have different lengths.
struct LengthMismatch : Error {
    using Error::Error;
};

/// Text could not be parsed. `position` is a 0-based byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Argument outside the stated domain of a formula or operation.
struct DomainError : Error {
    using Error::Error;
};

/// A permutation matches none of the three shapes pi_1 = n, pi_n = n,
/// pi_{n-1} pi_n = n(n-1); it cannot belong to S_n(231,1432:231).
struct NotInTrichotomy : Error {
    using Error::Error;
};

/// Input to a unimodal-only operation is not unimodal.
struct NotUnimodal : Error {
    using Error::Error;
};

/// Structural or closed-form counting was requested for a chain those
/// methods do not cover.
struct UnsupportedChain : Error {
    using Error::Error;
};

}  // namespace chainperm
