#pragma once

#include <cstdint>

#include "progression.hpp"

namespace aplcm {

/// Split of L_{n,k} = lcm{u_k..u_n} into L = A * C where
/// C = (u_k * ... * u_n) / (n-k)! and A is a positive integer cofactor.
struct Decomposition {
    Natural l;
    Rational c;
    Natural a;
};

/// lcm{u_k, ..., u_n}, folded pairwise as lcm(x, y) = x*y / gcd(x, y)
/// in ascending k. Requires k <= n.
Natural lcm_range(const Progression& p, std::uint64_t n, std::uint64_t k);

/// (u_k * ... * u_n) / (n-k)! as a reduced fraction. Requires k <= n.
Rational c_value(const Progression& p, std::uint64_t n, std::uint64_t k);

/// The integer cofactor A with lcm{u_k..u_n} = A * C. Throws
/// InternalContradiction if the quotient is not a positive integer,
/// which exact arithmetic rules out for valid progressions.
Natural a_value(const Progression& p, std::uint64_t n, std::uint64_t k);

/// All three of the above, with the A*C = L identity re-checked.
Decomposition decompose(const Progression& p, std::uint64_t n, std::uint64_t k);

/// lcm over terms u0 + k*r .. u0 + n*r without the coprimality check.
/// Exists so arithmetic on disqualified progressions (gcd(u0, r) > 1)
/// can still be reproduced; reachable externally only through probe.
Natural raw_lcm_range(const Natural& u0, const Natural& r, std::uint64_t n, std::uint64_t k);

}  // namespace aplcm
