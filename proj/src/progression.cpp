#include "progression.hpp"

namespace aplcm {

Progression::Progression(Natural u0, Natural r) : u0_(std::move(u0)), r_(std::move(r)) {
    if (u0_ < 1) throw InvalidArgument("u0 must be >= 1");
    if (r_ < 1) throw InvalidArgument("r must be >= 1");
    Natural g = gcd(u0_, r_);
    if (g != 1)
        throw NotCoprime("u0 and r are not coprime (gcd = " + g.get_str() + ")");
}

Natural Progression::term(const Natural& k) const {
    if (k < 0) throw InvalidArgument("term index must be nonnegative");
    return u0_ + k * r_;
}

std::uint64_t Progression::threshold_index(std::uint64_t n) const {
    if (n == 0) throw InvalidArgument("threshold index is defined for n >= 1");
    mpz_class diff = to_natural(n) - u0_;  // may be negative
    mpz_class den = r_ + 1;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), diff.get_mpz_t(), den.get_mpz_t());
    q += 1;
    if (q < 0) return 0;
    // q <= (n - u0)/(r + 1) + 1 <= n, so this always fits
    return static_cast<std::uint64_t>(q.get_ui());
}

}  // namespace aplcm
