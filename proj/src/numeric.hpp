#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace aplcm {

// All exact values are GMP integers/rationals. Natural values are
// nonnegative by contract; signed intermediates appear only where a
// formula subtracts (threshold_index).
using Natural = mpz_class;
using Rational = mpq_class;

inline Natural to_natural(std::uint64_t v) {
    return Natural(static_cast<unsigned long>(v));
}

inline Natural natural_pow(const Natural& base, std::uint64_t exp) {
    Natural out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

inline Natural factorial(std::uint64_t n) {
    Natural out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

inline Natural gcd(const Natural& a, const Natural& b) {
    Natural out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Natural lcm(const Natural& a, const Natural& b) {
    Natural out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline bool divides(const Natural& d, const Natural& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact bit length; 0 for the value 0.
inline std::uint64_t bit_length(const Natural& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Reduced fraction with positive denominator.
inline Rational make_rational(const Natural& num, const Natural& den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    Rational q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string dec_string(const Natural& x) { return x.get_str(); }

// Always "p/q", including q = 1, so fraction-valued quantities are
// visibly fractions in every output format.
inline std::string ratio_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Integer-valued rationals print as plain integers; anything else as "p/q".
inline std::string exact_string(const Rational& q) {
    return is_integer(q) ? q.get_num().get_str() : ratio_string(q);
}

// Strict decimal parse of a nonnegative integer.
inline Natural parse_natural(const std::string& s) {
    if (s.empty()) throw InvalidArgument("empty integer literal");
    for (char c : s)
        if (c < '0' || c > '9')
            throw InvalidArgument("not a nonnegative decimal integer: '" + s + "'");
    Natural out;
    if (out.set_str(s, 10) != 0)
        throw InvalidArgument("not a nonnegative decimal integer: '" + s + "'");
    return out;
}

inline std::uint64_t to_uint64(const Natural& x, const char* what) {
    if (x < 0 || !x.fits_ulong_p())
        throw InvalidArgument(std::string(what) + " out of range");
    return static_cast<std::uint64_t>(x.get_ui());
}

}  // namespace aplcm
