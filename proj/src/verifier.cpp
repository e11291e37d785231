#include "verifier.hpp"

#include "parallel.hpp"

namespace aplcm {

namespace {

std::string bool_string(bool b) { return b ? "1" : "0"; }

Natural two_alpha_r(std::uint64_t alpha, const Natural& r) {
    return 2 * to_natural(alpha) * r;
}

void require(bool ok, const char* what) {
    if (!ok) throw HypothesisNotMet(what);
}

}  // namespace

const char* claim_token(Claim c) {
    switch (c) {
        case Claim::Lemma21: return "lemma21";
        case Claim::Lemma22: return "lemma22";
        case Claim::Lemma31: return "lemma31";
        case Claim::Ineq3: return "ineq3";
        case Claim::Ineq5: return "ineq5";
        case Claim::DivisibilityStep: return "divstep";
        case Claim::Theorem11: return "theorem11";
        case Claim::Theorem12: return "theorem12";
        case Claim::Corollary31: return "corollary31";
    }
    return "?";
}

std::optional<Claim> claim_from_token(std::string_view token) {
    for (Claim c : kAllClaims)
        if (token == claim_token(c)) return c;
    return std::nullopt;
}

ClaimShape claim_shape(Claim c) {
    ClaimShape s;
    switch (c) {
        case Claim::Lemma21:
        case Claim::Lemma22:
        case Claim::Ineq3:
            s.u0 = s.r = s.n = true;
            break;
        case Claim::Ineq5:
            s.r = s.alpha = s.a = true;
            break;
        case Claim::Lemma31:
        case Claim::DivisibilityStep:
        case Claim::Theorem12:
            s.u0 = s.r = s.n = s.alpha = s.a = true;
            break;
        case Claim::Theorem11:
            s.u0 = s.r = s.n = s.alpha = true;
            break;
        case Claim::Corollary31:
            s.u0 = s.r = s.n = s.alpha = s.a = s.beta = true;
            break;
    }
    return s;
}

VerificationRecord check_lemma_2_1(const Progression& p, std::uint64_t n) {
    require(n >= 1, "lemma21 needs n >= 1");
    Natural l = lcm_range(p, n, 0);
    Rational c = c_value(p, n, 0);
    // A = L / C; the claim is that it is a positive integer
    Rational a = make_rational(l * c.get_den(), c.get_num());
    VerificationRecord rec{Claim::Lemma21, Params{p.u0(), p.r(), n}, false, {}};
    rec.holds = is_integer(a) && a >= 1;
    rec.witnesses = {{"L_n", dec_string(l)}, {"C_n0", ratio_string(c)}, {"A_n0", exact_string(a)}};
    return rec;
}

VerificationRecord check_lemma_2_2(const Progression& p, std::uint64_t n) {
    require(n >= 1, "lemma22 needs n >= 1");
    const std::uint64_t kn = p.threshold_index(n);
    Natural l_n = lcm_range(p, n, 0);
    Natural l_nkn = lcm_range(p, n, kn);
    Rational c_nkn = c_value(p, n, kn);
    Natural rhs = p.u0() * natural_pow(p.r() + 1, n);
    bool link1 = l_n >= l_nkn;
    bool link2 = Rational(l_nkn) >= c_nkn;
    bool link3 = c_nkn >= Rational(rhs);
    VerificationRecord rec{Claim::Lemma22, Params{p.u0(), p.r(), n}, link1 && link2 && link3, {}};
    rec.witnesses = {{"L_n", dec_string(l_n)},
                     {"k_n", std::to_string(kn)},
                     {"L_n_kn", dec_string(l_nkn)},
                     {"C_n_kn", ratio_string(c_nkn)},
                     {"u0*(r+1)^n", dec_string(rhs)}};
    return rec;
}

VerificationRecord check_lemma_3_1(const Progression& p, std::uint64_t n, std::uint64_t alpha,
                                   std::uint64_t a) {
    require(a >= 2, "lemma31 needs a >= 2");
    require(alpha >= a, "lemma31 needs alpha >= a");
    require(p.r() >= to_natural(a), "lemma31 needs r >= a");
    require(to_natural(n) >= two_alpha_r(alpha, p.r()), "lemma31 needs n >= 2*alpha*r");

    const std::uint64_t kn = p.threshold_index(n);
    Natural gap = to_natural(n - kn);
    Natural target = to_natural(alpha + a - 2) * p.r();
    VerificationRecord rec{Claim::Lemma31, Params{p.u0(), p.r(), n, alpha, a}, gap > target, {}};
    const bool n_gt_u0 = to_natural(n) > p.u0();
    rec.witnesses = {{"k_n", std::to_string(kn)},
                     {"n-k_n", dec_string(gap)},
                     {"(alpha+a-2)*r", dec_string(target)},
                     {"n>u0", bool_string(n_gt_u0)}};
    if (n_gt_u0) {
        // the case-split branch: record the intermediate bounds the strict
        // inequality rests on
        Rational ineq3 = make_rational(to_natural(n - 1) * p.r(), p.r() + 1);
        Rational ineq5_lhs = make_rational(two_alpha_r(alpha, p.r()) - 1, p.r() + 1);
        rec.witnesses.push_back({"(n-1)*r/(r+1)", ratio_string(ineq3)});
        rec.witnesses.push_back({"(2*alpha*r-1)/(r+1)", ratio_string(ineq5_lhs)});
        rec.witnesses.push_back({"alpha+a-2", std::to_string(alpha + a - 2)});
    }
    return rec;
}

VerificationRecord check_ineq_3(const Progression& p, std::uint64_t n) {
    require(n >= 1, "ineq3 needs n >= 1");
    require(to_natural(n) > p.u0(), "ineq3 needs n > u0");
    const std::uint64_t kn = p.threshold_index(n);
    Rational lhs{to_natural(n - kn)};
    Rational rhs = make_rational(to_natural(n - 1) * p.r(), p.r() + 1);
    VerificationRecord rec{Claim::Ineq3, Params{p.u0(), p.r(), n}, lhs >= rhs, {}};
    rec.witnesses = {{"k_n", std::to_string(kn)},
                     {"n-k_n", dec_string(to_natural(n - kn))},
                     {"(n-1)*r/(r+1)", ratio_string(rhs)}};
    return rec;
}

VerificationRecord check_ineq_5(const Natural& r, std::uint64_t alpha, std::uint64_t a) {
    require(a >= 2, "ineq5 needs a >= 2");
    require(alpha >= a, "ineq5 needs alpha >= a");
    require(r >= to_natural(a), "ineq5 needs r >= a");
    Rational lhs = make_rational(two_alpha_r(alpha, r) - 1, r + 1);
    Natural rhs = to_natural(alpha + a - 2);
    VerificationRecord rec{Claim::Ineq5, Params{Natural(0), r, 0, alpha, a}, lhs > Rational(rhs),
                           {}};
    rec.witnesses = {{"(2*alpha*r-1)/(r+1)", ratio_string(lhs)},
                     {"alpha+a-2", dec_string(rhs)}};
    return rec;
}

VerificationRecord check_divisibility_step(const Progression& p, std::uint64_t n,
                                           std::uint64_t alpha, std::uint64_t a) {
    require(a >= 2, "divstep needs a >= 2");
    require(alpha >= a, "divstep needs alpha >= a");
    require(p.r() >= to_natural(a), "divstep needs r >= a");
    require(to_natural(n) >= two_alpha_r(alpha, p.r()), "divstep needs n >= 2*alpha*r");

    const std::uint64_t kn = p.threshold_index(n);
    Natural cofactor = a_value(p, n, kn);
    Natural r_pow = natural_pow(p.r(), alpha + a - 2);
    Natural fac = factorial(n - kn);
    Rational b_n = make_rational(fac, r_pow);
    bool divides_cofactor = divides(r_pow, cofactor);
    bool b_integral = is_integer(b_n) && b_n >= 1;
    VerificationRecord rec{Claim::DivisibilityStep, Params{p.u0(), p.r(), n, alpha, a},
                           divides_cofactor && b_integral, {}};
    rec.witnesses = {{"k_n", std::to_string(kn)},
                     {"A_n_kn", dec_string(cofactor)},
                     {"r^(alpha+a-2)", dec_string(r_pow)},
                     {"(n-k_n)!", dec_string(fac)},
                     {"B_n", exact_string(b_n)}};
    return rec;
}

VerificationRecord check_theorem(const Progression& p, std::uint64_t n, const BoundKind& kind) {
    if (!hypothesis_holds(p, n, kind)) throw HypothesisNotMet("theorem hypothesis not satisfied");
    Natural l_n = lcm_range(p, n, 0);
    Natural bound = bound_value(p, n, kind);
    Claim claim = Claim::Theorem11;
    Params params{p.u0(), p.r(), n, kind.alpha()};
    switch (kind.tag()) {
        case BoundTag::HongYang:
            break;
        case BoundTag::Main:
            claim = Claim::Theorem12;
            params.a = kind.a();
            break;
        case BoundTag::Corollary:
            claim = Claim::Corollary31;
            params.a = kind.a();
            params.beta = kind.beta();
            break;
    }
    VerificationRecord rec{claim, params, l_n >= bound, {}};
    rec.witnesses = {{"L_n", dec_string(l_n)}, {"bound", dec_string(bound)}};
    return rec;
}

bool admissible(Claim c, const Params& q) {
    switch (c) {
        case Claim::Lemma21:
        case Claim::Lemma22:
            return q.n >= 1;
        case Claim::Ineq3:
            return q.n >= 1 && to_natural(q.n) > q.u0;
        case Claim::Ineq5:
            return q.a >= 2 && q.alpha >= q.a && q.r >= to_natural(q.a);
        case Claim::Lemma31:
        case Claim::DivisibilityStep:
        case Claim::Theorem12:
            return q.a >= 2 && q.alpha >= q.a && q.r >= to_natural(q.a) &&
                   to_natural(q.n) >= two_alpha_r(q.alpha, q.r);
        case Claim::Theorem11:
            return q.alpha >= 1 && to_natural(q.n) > natural_pow(q.r, q.alpha);
        case Claim::Corollary31:
            return q.a >= 2 && q.beta >= 1 && q.alpha >= q.a && q.r >= to_natural(q.a) &&
                   to_natural(q.n) >= 2 * to_natural(q.alpha + q.beta + q.a - 2) * q.r;
    }
    return false;
}

VerificationRecord run_check(Claim c, const Params& q) {
    if (c == Claim::Ineq5) {
        return check_ineq_5(q.r, q.alpha, q.a);
    }
    Progression p(q.u0, q.r);
    if (!admissible(c, q)) throw HypothesisNotMet("parameters fail the claim's hypotheses");
    switch (c) {
        case Claim::Lemma21: return check_lemma_2_1(p, q.n);
        case Claim::Lemma22: return check_lemma_2_2(p, q.n);
        case Claim::Lemma31: return check_lemma_3_1(p, q.n, q.alpha, q.a);
        case Claim::Ineq3: return check_ineq_3(p, q.n);
        case Claim::DivisibilityStep: return check_divisibility_step(p, q.n, q.alpha, q.a);
        case Claim::Theorem11: return check_theorem(p, q.n, BoundKind::hong_yang(q.alpha));
        case Claim::Theorem12: return check_theorem(p, q.n, BoundKind::main(q.alpha, q.a));
        case Claim::Corollary31:
            return check_theorem(p, q.n, BoundKind::corollary(q.alpha, q.beta, q.a));
        case Claim::Ineq5: break;  // handled above
    }
    throw InvalidArgument("unknown claim");
}

namespace {

// Hypothesis-anchored n window start, for claims that have one.
std::optional<Natural> n_anchor(Claim c, const Params& q) {
    switch (c) {
        case Claim::Lemma31:
        case Claim::DivisibilityStep:
        case Claim::Theorem12:
            return two_alpha_r(q.alpha, q.r);
        case Claim::Theorem11:
            return natural_pow(q.r, q.alpha) + 1;
        case Claim::Corollary31:
            return 2 * to_natural(q.alpha + q.beta + q.a - 2) * q.r;
        default:
            return std::nullopt;
    }
}

}  // namespace

std::vector<VerificationRecord> sweep(const SweepSpec& spec) {
    const ClaimShape shape = claim_shape(spec.claim);

    // iterate a dimension only if the claim consumes it
    auto dim = [](bool used, const Range& rr) {
        return used ? rr : Range{0, 0};
    };
    const Range u0s = dim(shape.u0, spec.u0);
    const Range rs = dim(shape.r, spec.r);
    const Range alphas = dim(shape.alpha, spec.alpha);
    const Range as = dim(shape.a, spec.a);
    const Range betas = dim(shape.beta, spec.beta);

    if (shape.n && !spec.n && !n_anchor(spec.claim, Params{Natural(1), Natural(1), 0, 1, 2, 1}))
        throw InvalidArgument(std::string(claim_token(spec.claim)) +
                              " has no hypothesis threshold; give an explicit n range");

    std::vector<Params> tuples;
    for (std::uint64_t u0 = u0s.lo; u0 <= u0s.hi && !u0s.empty(); ++u0) {
        const Natural u0n = to_natural(u0);
        for (std::uint64_t r = rs.lo; r <= rs.hi && !rs.empty(); ++r) {
            const Natural rn = to_natural(r);
            if (shape.u0 && (u0 < 1 || r < 1 || gcd(u0n, rn) != 1)) continue;
            if (!shape.u0 && shape.r && r < 1) continue;
            for (std::uint64_t alpha = alphas.lo; alpha <= alphas.hi && !alphas.empty(); ++alpha) {
                for (std::uint64_t a = as.lo; a <= as.hi && !as.empty(); ++a) {
                    for (std::uint64_t beta = betas.lo; beta <= betas.hi && !betas.empty();
                         ++beta) {
                        Params q;
                        if (shape.u0) q.u0 = u0n;
                        if (shape.r) q.r = rn;
                        q.alpha = alpha;
                        q.a = a;
                        q.beta = beta;
                        if (!shape.n) {
                            if (admissible(spec.claim, q)) tuples.push_back(q);
                            continue;
                        }
                        Range nr;
                        if (spec.n) {
                            nr = *spec.n;
                        } else {
                            auto anchor = n_anchor(spec.claim, q);
                            // claims reach here only with an anchor; guarded above
                            if (!anchor->fits_ulong_p())
                                throw InvalidArgument("anchored n window does not fit in 64 bits");
                            nr.lo = anchor->get_ui();
                            nr.hi = nr.lo + spec.n_extra;
                        }
                        for (std::uint64_t n = nr.lo; n <= nr.hi && !nr.empty(); ++n) {
                            q.n = n;
                            if (admissible(spec.claim, q)) tuples.push_back(q);
                        }
                    }
                }
            }
        }
    }

    std::vector<VerificationRecord> out(tuples.size());
    parallel_for(tuples.size(), spec.workers,
                 [&](std::size_t i) { out[i] = run_check(spec.claim, tuples[i]); });
    return out;
}

}  // namespace aplcm
