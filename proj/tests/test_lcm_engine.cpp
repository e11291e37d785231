#include "doctest.h"

#include "lcm_engine.hpp"
#include "oracle.hpp"

using aplcm::a_value;
using aplcm::c_value;
using aplcm::decompose;
using aplcm::InvalidArgument;
using aplcm::lcm_range;
using aplcm::Natural;
using aplcm::Progression;
using aplcm::Rational;
using aplcm::raw_lcm_range;

TEST_CASE("lcm over index ranges, known values") {
    Progression odd(1, 2);
    CHECK(lcm_range(odd, 4, 0) == 315);     // lcm{1,3,5,7,9}
    CHECK(lcm_range(odd, 4, 2) == 315);     // lcm{5,7,9}
    CHECK(lcm_range(odd, 8, 0) == 765765);  // lcm{1,3,...,17}
    CHECK(lcm_range(odd, 8, 3) == 765765);  // 1, 3, 5 divide 9 and 15
    CHECK(lcm_range(odd, 0, 0) == 1);
    CHECK(lcm_range(odd, 5, 5) == 11);

    CHECK(lcm_range(Progression(1, 1), 5, 0) == 60);  // lcm{1..6}

    CHECK_THROWS_AS(lcm_range(odd, 3, 4), InvalidArgument);
}

TEST_CASE("raw lcm accepts non-coprime sequences") {
    CHECK(raw_lcm_range(2, 2, 8, 0) == 5040);  // lcm{2,4,...,18}
    CHECK(raw_lcm_range(6, 4, 3, 1) == 630);  // lcm{10,14,18}
    CHECK_THROWS_AS(raw_lcm_range(0, 2, 4, 0), InvalidArgument);
    CHECK_THROWS_AS(raw_lcm_range(2, 0, 4, 0), InvalidArgument);
    CHECK_THROWS_AS(raw_lcm_range(2, 2, 1, 2), InvalidArgument);
}

TEST_CASE("C is the reduced term product over (n-k)!") {
    Progression odd(1, 2);
    Rational c = c_value(odd, 4, 0);
    CHECK(c.get_num() == 315);
    CHECK(c.get_den() == 8);

    // 1*2*3*4 / 3! reduces to an integer
    Rational whole = c_value(Progression(1, 1), 3, 0);
    CHECK(whole.get_num() == 4);
    CHECK(whole.get_den() == 1);

    CHECK(c_value(odd, 5, 5) == Rational(11));
    CHECK_THROWS_AS(c_value(odd, 2, 3), InvalidArgument);
}

TEST_CASE("A is integral and recombines exactly") {
    Progression odd(1, 2);
    CHECK(a_value(odd, 4, 0) == 8);
    CHECK(a_value(odd, 8, 3) == 40);

    for (unsigned u0 = 1; u0 <= 6; ++u0) {
        for (unsigned r = 1; r <= 5; ++r) {
            if (aplcm::gcd(u0, r) != 1) continue;
            Progression p(u0, r);
            for (std::uint64_t n = 0; n <= 18; ++n) {
                for (std::uint64_t k = 0; k <= n; ++k) {
                    aplcm::Decomposition d = decompose(p, n, k);
                    CHECK(d.a >= 1);
                    // L = A * C, checked as an exact rational identity
                    CHECK(d.l * d.c.get_den() == d.a * d.c.get_num());
                    CHECK(d.l == lcm_range(p, n, k));
                }
            }
        }
    }
}

TEST_CASE("singleton and empty-prefix edge cases") {
    Progression p(5, 3);
    CHECK(a_value(p, 7, 7) == 1);                    // L = C = u_7
    CHECK(c_value(p, 7, 7) == Rational(p.term(7)));  // 0! = 1
    CHECK(a_value(Progression(1, 1), 5, 0) == 10);   // lcm{1..6} = 60 over C = 6

    aplcm::Decomposition base = decompose(p, 0, 0);
    CHECK(base.l == 5);
    CHECK(base.c == Rational(5));
    CHECK(base.a == 1);
}

TEST_CASE("lcm grows by divisibility and dominates C") {
    for (auto [u0, r] : {std::pair<unsigned, unsigned>{1, 2}, {3, 2}, {5, 4}, {2, 7}}) {
        Progression p(u0, r);
        for (std::uint64_t k : {0ull, 2ull}) {
            Natural prev = lcm_range(p, k, k);
            for (std::uint64_t n = k + 1; n <= k + 20; ++n) {
                Natural cur = lcm_range(p, n, k);
                CHECK(aplcm::divides(prev, cur));
                CHECK(Rational(cur) >= c_value(p, n, k));
                prev = cur;
            }
        }
    }
}

TEST_CASE("fold-based lcm agrees with the prime-exponent oracle") {
    for (unsigned u0 = 1; u0 <= 10; ++u0) {
        for (unsigned r = 1; r <= 6; ++r) {
            if (aplcm::gcd(u0, r) != 1) continue;
            Progression p(u0, r);
            for (std::uint64_t n = 0; n <= 24; n += 3) {
                for (std::uint64_t k = 0; k <= n; k += 5)
                    CHECK(lcm_range(p, n, k) == oracle::lcm_progression(u0, r, n, k));
            }
        }
    }
    CHECK(raw_lcm_range(4, 6, 9, 2) == oracle::lcm_progression(4, 6, 9, 2));
}
