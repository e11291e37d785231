#pragma once

#include <stdexcept>
#include <string>

namespace aplcm {

// Rejected before any computation starts.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// gcd(u0, r) != 1. Kept distinct so callers can tell a disqualified
// progression apart from garbage input.
class NotCoprime : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// The inputs fail the hypothesis of the claim being checked. Not a
// refutation: a check only reports holds = false when the hypothesis is
// satisfied and the conclusion still fails.
class HypothesisNotMet : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Exact arithmetic contradicted an identity that provably holds
// (e.g. the integer cofactor of an lcm decomposition came out
// non-integral). Always a bug in this library, never a property of
// the input.
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace aplcm
