#pragma once

#include <cstdint>
#include <vector>

#include "bounds.hpp"

namespace aplcm {

/// (alpha, r) with 2*alpha*r >= r^alpha + 1: the pairs where n > r^alpha
/// does not already imply n >= 2*alpha*r, so the boundary n = r^alpha
/// needs an explicit search.
struct TightPair {
    std::uint64_t alpha = 0;
    std::uint64_t r = 0;
    bool operator==(const TightPair&) const = default;
};

/// A strict violation L_n < u0*r^alpha*(r+1)^n on the boundary n = r^alpha
/// with gcd(u0, r) = 1.
struct Counterexample {
    Natural u0;
    Natural r;
    std::uint64_t alpha = 0;
    std::uint64_t n = 0;
    Natural l_n;
    Natural bound;
};

/// Arithmetic for one probed point, hypotheses satisfied or not.
struct ProbeReport {
    Natural u0;
    Natural r;
    std::uint64_t alpha = 0;
    std::uint64_t n = 0;
    Natural l_n;
    Natural bound;
    bool violates = false;  // l_n < bound
    bool coprime = false;   // gcd(u0, r) == 1
};

/// All tight pairs with alpha in [2, alpha_max], r in [2, r_max],
/// in lexicographic (alpha, r) order. Requires both caps >= 2. The
/// result stabilizes at three pairs once both caps reach 4: beyond the
/// found pairs, 2*alpha*r - r^alpha is negative and decreasing in each
/// variable for alpha, r >= 2.
std::vector<TightPair> tight_pairs(std::uint64_t alpha_max, std::uint64_t r_max);

/// Fixes n = r^alpha and scans u0 from 1 to n-1 with gcd(u0, r) = 1 for
/// strict violations of L_n >= u0*r^alpha*(r+1)^n. The u0 < n cutoff
/// loses nothing: for u0 >= n the bound provably holds. Results sorted
/// by u0; independent of worker count. Requires alpha, r >= 2.
std::vector<Counterexample> counterexample_search(std::uint64_t alpha, std::uint64_t r,
                                                  unsigned workers = 0);

struct SearchReport {
    std::vector<TightPair> pairs;
    std::vector<Counterexample> examples;
};

/// counterexample_search over every tight pair within the caps.
SearchReport full_search(std::uint64_t alpha_max = 10, std::uint64_t r_max = 10,
                         unsigned workers = 0);

/// Single-point check of L_n against u0*r^alpha*(r+1)^n. Tolerates
/// non-coprime u0, r (reported via the coprime flag) so arithmetic
/// outside the bound's hypotheses can still be reproduced.
ProbeReport probe(const Natural& u0, const Natural& r, std::uint64_t alpha, std::uint64_t n);

}  // namespace aplcm
