#pragma once

#include <cstdint>

#include "numeric.hpp"

namespace aplcm {

/// Arithmetic progression u_k = u0 + k*r with u0, r >= 1 and gcd(u0, r) = 1.
/// Immutable once constructed; construction validates everything.
class Progression {
public:
    Progression(Natural u0, Natural r);

    const Natural& u0() const { return u0_; }
    const Natural& r() const { return r_; }

    /// u0 + k*r
    Natural term(const Natural& k) const;

    /// k_n = max{0, floor((n - u0) / (r + 1)) + 1}. The floor rounds
    /// toward -inf on the exact signed quotient, then the max clamps.
    /// Defined for n >= 1 only.
    std::uint64_t threshold_index(std::uint64_t n) const;

private:
    Natural u0_;
    Natural r_;
};

}  // namespace aplcm
