#pragma once

#include <cstdint>

#include "progression.hpp"

namespace aplcm {

enum class BoundTag { HongYang, Main, Corollary };

/// The three lower bounds on L_n, all of the shape u0 * r^e * (r+1)^n:
///
///   HongYang   e = alpha                hypothesis n > r^alpha
///   Main       e = alpha + a - 2        hypothesis r >= a and n >= 2*alpha*r
///   Corollary  e = alpha + beta + a - 2 hypothesis r >= a and
///                                       n >= 2*(alpha+beta+a-2)*r
///
/// Progression-independent parameter constraints (alpha >= 1 for HongYang;
/// a >= 2 and alpha >= a for the others; beta >= 1 for Corollary) are
/// enforced at construction. The r-dependent constraint r >= a is checked
/// at evaluation time.
class BoundKind {
public:
    static BoundKind hong_yang(std::uint64_t alpha);
    static BoundKind main(std::uint64_t alpha, std::uint64_t a);
    static BoundKind corollary(std::uint64_t alpha, std::uint64_t beta, std::uint64_t a);

    BoundTag tag() const { return tag_; }
    std::uint64_t alpha() const { return alpha_; }
    std::uint64_t a() const { return a_; }
    std::uint64_t beta() const { return beta_; }

    /// The r-exponent e.
    std::uint64_t exponent() const;

private:
    BoundKind(BoundTag tag, std::uint64_t alpha, std::uint64_t a, std::uint64_t beta)
        : tag_(tag), alpha_(alpha), a_(a), beta_(beta) {}

    BoundTag tag_;
    std::uint64_t alpha_;
    std::uint64_t a_;
    std::uint64_t beta_;
};

/// u0 * r^e * (r+1)^n, exact. Rejects Main/Corollary kinds when r < a.
Natural bound_value(const Progression& p, std::uint64_t n, const BoundKind& kind);

/// Whether the kind's hypothesis holds for (p, n). Never throws for a
/// constructed kind; a failing r >= a constraint just yields false.
bool hypothesis_holds(const Progression& p, std::uint64_t n, const BoundKind& kind);

/// r^alpha + 1 >= 2*(alpha+beta+a-2)*r: when true, n > r^alpha alone
/// already implies the Corollary-kind hypothesis. Requires
/// alpha, r >= a >= 2 and beta >= 1.
bool corollary_dominates(std::uint64_t alpha, std::uint64_t beta, std::uint64_t a,
                         const Natural& r);

}  // namespace aplcm
