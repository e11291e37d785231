#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"
#include "lcm_engine.hpp"

namespace aplcm {

/// Every claim the verifier can machine-check on concrete instances.
enum class Claim {
    Lemma21,           // C_{n,0} divides L_n (integral cofactor at k = 0)
    Lemma22,           // L_n >= L_{n,k_n} >= C_{n,k_n} >= u0*(r+1)^n
    Lemma31,           // n - k_n > (alpha+a-2)*r
    Ineq3,             // n - k_n >= (n-1)*r/(r+1)   (branch n > u0)
    Ineq5,             // (2*alpha*r-1)/(r+1) > alpha+a-2
    DivisibilityStep,  // r^(alpha+a-2) divides A_{n,k_n}
    Theorem11,         // L_n >= u0*r^alpha*(r+1)^n          when n > r^alpha
    Theorem12,         // L_n >= u0*r^(alpha+a-2)*(r+1)^n    when n >= 2*alpha*r
    Corollary31,       // L_n >= u0*r^(alpha+beta+a-2)*(r+1)^n
};

inline constexpr Claim kAllClaims[] = {
    Claim::Lemma21, Claim::Lemma22,          Claim::Lemma31,   Claim::Ineq3,
    Claim::Ineq5,   Claim::DivisibilityStep, Claim::Theorem11, Claim::Theorem12,
    Claim::Corollary31,
};

const char* claim_token(Claim c);
std::optional<Claim> claim_from_token(std::string_view token);

/// Which of (u0, r, n, alpha, a, beta) a claim consumes.
struct ClaimShape {
    bool u0 = false, r = false, n = false, alpha = false, a = false, beta = false;
};
ClaimShape claim_shape(Claim c);

struct Params {
    Natural u0{0};
    Natural r{0};
    std::uint64_t n = 0;
    std::uint64_t alpha = 0;
    std::uint64_t a = 0;
    std::uint64_t beta = 0;
};

/// One named exact quantity from a checked inequality. Values are decimal
/// integers or "p/q" fractions; together they are always enough to replay
/// the claim's inequality without recomputing anything.
struct Witness {
    std::string name;
    std::string value;
};

struct VerificationRecord {
    Claim claim;
    Params params;  // only the fields in claim_shape(claim) are meaningful
    bool holds = false;
    std::vector<Witness> witnesses;
};

/// Per-claim checks. Preconditions (the claim's hypotheses) are rejected
/// with HypothesisNotMet; holds = false is reserved for a satisfied
/// hypothesis whose conclusion fails, which no valid input produces.
VerificationRecord check_lemma_2_1(const Progression& p, std::uint64_t n);
VerificationRecord check_lemma_2_2(const Progression& p, std::uint64_t n);
VerificationRecord check_lemma_3_1(const Progression& p, std::uint64_t n, std::uint64_t alpha,
                                   std::uint64_t a);
VerificationRecord check_ineq_3(const Progression& p, std::uint64_t n);
VerificationRecord check_ineq_5(const Natural& r, std::uint64_t alpha, std::uint64_t a);
VerificationRecord check_divisibility_step(const Progression& p, std::uint64_t n,
                                           std::uint64_t alpha, std::uint64_t a);
VerificationRecord check_theorem(const Progression& p, std::uint64_t n, const BoundKind& kind);

/// Whether the claim's hypotheses hold for these parameters. run_check
/// throws HypothesisNotMet on inadmissible input; sweep silently skips it.
bool admissible(Claim c, const Params& q);

/// Dispatch a single check from a generic parameter set.
VerificationRecord run_check(Claim c, const Params& q);

/// Inclusive range; empty when hi < lo.
struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool empty() const { return hi < lo; }
};

/// Cartesian sweep over the claim's applicable parameters. n either comes
/// from an explicit range or, for claims with an n-threshold hypothesis,
/// from the window [threshold, threshold + n_extra]. Tuples that do not
/// form a valid progression or fail the claim's hypotheses are skipped.
/// Output order is lexicographic in (u0, r, alpha, a, beta, n) and does
/// not depend on the worker count.
struct SweepSpec {
    Claim claim = Claim::Lemma22;
    Range u0{1, 1};
    Range r{1, 1};
    Range alpha{1, 1};
    Range a{2, 2};
    Range beta{1, 1};
    std::optional<Range> n;
    std::uint64_t n_extra = 0;
    unsigned workers = 0;  // 0 = hardware default
};

std::vector<VerificationRecord> sweep(const SweepSpec& spec);

}  // namespace aplcm
