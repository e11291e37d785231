#include "bounds.hpp"

namespace aplcm {

BoundKind BoundKind::hong_yang(std::uint64_t alpha) {
    if (alpha < 1) throw InvalidArgument("hong_yang bound needs alpha >= 1");
    return BoundKind(BoundTag::HongYang, alpha, 0, 0);
}

BoundKind BoundKind::main(std::uint64_t alpha, std::uint64_t a) {
    if (a < 2) throw InvalidArgument("main bound needs a >= 2");
    if (alpha < a) throw InvalidArgument("main bound needs alpha >= a");
    return BoundKind(BoundTag::Main, alpha, a, 0);
}

BoundKind BoundKind::corollary(std::uint64_t alpha, std::uint64_t beta, std::uint64_t a) {
    if (a < 2) throw InvalidArgument("corollary bound needs a >= 2");
    if (beta < 1) throw InvalidArgument("corollary bound needs beta >= 1");
    if (alpha < a) throw InvalidArgument("corollary bound needs alpha >= a");
    return BoundKind(BoundTag::Corollary, alpha, a, beta);
}

std::uint64_t BoundKind::exponent() const {
    switch (tag_) {
        case BoundTag::HongYang: return alpha_;
        case BoundTag::Main: return alpha_ + a_ - 2;
        case BoundTag::Corollary: return alpha_ + beta_ + a_ - 2;
    }
    throw InvalidArgument("bad bound tag");
}

Natural bound_value(const Progression& p, std::uint64_t n, const BoundKind& kind) {
    if (kind.tag() != BoundTag::HongYang && p.r() < to_natural(kind.a()))
        throw InvalidArgument("bound needs r >= a");
    return p.u0() * natural_pow(p.r(), kind.exponent()) * natural_pow(p.r() + 1, n);
}

bool hypothesis_holds(const Progression& p, std::uint64_t n, const BoundKind& kind) {
    const Natural nn = to_natural(n);
    switch (kind.tag()) {
        case BoundTag::HongYang:
            return nn > natural_pow(p.r(), kind.alpha());
        case BoundTag::Main:
            return p.r() >= to_natural(kind.a()) &&
                   nn >= 2 * to_natural(kind.alpha()) * p.r();
        case BoundTag::Corollary:
            return p.r() >= to_natural(kind.a()) &&
                   nn >= 2 * to_natural(kind.exponent()) * p.r();
    }
    return false;
}

bool corollary_dominates(std::uint64_t alpha, std::uint64_t beta, std::uint64_t a,
                         const Natural& r) {
    if (a < 2 || beta < 1 || alpha < a || r < to_natural(a))
        throw InvalidArgument("corollary_dominates needs alpha, r >= a >= 2 and beta >= 1");
    Natural lhs = natural_pow(r, alpha) + 1;
    Natural rhs = 2 * to_natural(alpha + beta + a - 2) * r;
    return lhs >= rhs;
}

}  // namespace aplcm
