#include "lcm_engine.hpp"

namespace aplcm {

namespace {

void require_range(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw InvalidArgument("need k <= n");
}

Natural term_product(const Natural& u0, const Natural& r, std::uint64_t n, std::uint64_t k) {
    Natural prod = 1;
    Natural u = u0 + to_natural(k) * r;
    for (std::uint64_t i = k; i <= n; ++i, u += r) prod *= u;
    return prod;
}

}  // namespace

Natural raw_lcm_range(const Natural& u0, const Natural& r, std::uint64_t n, std::uint64_t k) {
    require_range(n, k);
    if (u0 < 1) throw InvalidArgument("need u0 >= 1");
    if (r < 1) throw InvalidArgument("need r >= 1");
    Natural acc = u0 + to_natural(k) * r;
    Natural u = acc;
    for (std::uint64_t i = k + 1; i <= n; ++i) {
        u += r;
        acc = lcm(acc, u);
    }
    return acc;
}

Natural lcm_range(const Progression& p, std::uint64_t n, std::uint64_t k) {
    return raw_lcm_range(p.u0(), p.r(), n, k);
}

Rational c_value(const Progression& p, std::uint64_t n, std::uint64_t k) {
    require_range(n, k);
    // one product, one factorial, one reduction
    return make_rational(term_product(p.u0(), p.r(), n, k), factorial(n - k));
}

Natural a_value(const Progression& p, std::uint64_t n, std::uint64_t k) {
    require_range(n, k);
    Natural num = factorial(n - k) * lcm_range(p, n, k);
    Natural den = term_product(p.u0(), p.r(), n, k);
    if (!divides(den, num))
        throw InternalContradiction("lcm cofactor is not an integer for u0=" + p.u0().get_str() +
                                    " r=" + p.r().get_str() + " n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    Natural a;
    mpz_divexact(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (a < 1) throw InternalContradiction("lcm cofactor is not positive");
    return a;
}

Decomposition decompose(const Progression& p, std::uint64_t n, std::uint64_t k) {
    Decomposition d{lcm_range(p, n, k), c_value(p, n, k), a_value(p, n, k)};
    // a * num(c) == l * den(c), i.e. l == a * c exactly
    if (d.a * d.c.get_num() != d.l * d.c.get_den())
        throw InternalContradiction("decomposition identity L = A*C failed");
    return d;
}

}  // namespace aplcm
