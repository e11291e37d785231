#include "search.hpp"

#include <optional>

#include "lcm_engine.hpp"
#include "parallel.hpp"

namespace aplcm {

std::vector<TightPair> tight_pairs(std::uint64_t alpha_max, std::uint64_t r_max) {
    if (alpha_max < 2 || r_max < 2) throw InvalidArgument("tight_pairs needs caps >= 2");
    std::vector<TightPair> out;
    for (std::uint64_t alpha = 2; alpha <= alpha_max; ++alpha) {
        for (std::uint64_t r = 2; r <= r_max; ++r) {
            Natural lhs = 2 * to_natural(alpha) * to_natural(r);
            Natural rhs = natural_pow(to_natural(r), alpha) + 1;
            if (lhs >= rhs) out.push_back({alpha, r});
        }
    }
    return out;
}

std::vector<Counterexample> counterexample_search(std::uint64_t alpha, std::uint64_t r,
                                                  unsigned workers) {
    if (alpha < 2 || r < 2) throw InvalidArgument("counterexample_search needs alpha, r >= 2");
    const Natural rn = to_natural(r);
    const Natural n_exact = natural_pow(rn, alpha);
    if (!n_exact.fits_ulong_p())
        throw InvalidArgument("r^alpha does not fit in 64 bits");
    const std::uint64_t n = n_exact.get_ui();

    std::vector<Natural> candidates;
    for (Natural u0 = 1; u0 < n_exact; ++u0)
        if (gcd(u0, rn) == 1) candidates.push_back(u0);

    // bound = u0 * base with base fixed per (alpha, r)
    const Natural base = natural_pow(rn, alpha) * natural_pow(rn + 1, n);

    std::vector<std::optional<Counterexample>> slots(candidates.size());
    parallel_for(candidates.size(), workers, [&](std::size_t i) {
        const Natural& u0 = candidates[i];
        Natural l_n = raw_lcm_range(u0, rn, n, 0);
        Natural bound = u0 * base;
        if (l_n < bound) slots[i] = Counterexample{u0, rn, alpha, n, l_n, bound};
    });

    std::vector<Counterexample> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;  // candidates ascend in u0, so this is already sorted
}

SearchReport full_search(std::uint64_t alpha_max, std::uint64_t r_max, unsigned workers) {
    SearchReport report;
    report.pairs = tight_pairs(alpha_max, r_max);
    for (const TightPair& tp : report.pairs) {
        auto found = counterexample_search(tp.alpha, tp.r, workers);
        report.examples.insert(report.examples.end(), found.begin(), found.end());
    }
    return report;
}

ProbeReport probe(const Natural& u0, const Natural& r, std::uint64_t alpha, std::uint64_t n) {
    if (u0 < 1 || r < 1) throw InvalidArgument("probe needs u0, r >= 1");
    ProbeReport rep;
    rep.u0 = u0;
    rep.r = r;
    rep.alpha = alpha;
    rep.n = n;
    rep.l_n = raw_lcm_range(u0, r, n, 0);
    rep.bound = u0 * natural_pow(r, alpha) * natural_pow(r + 1, n);
    rep.violates = rep.l_n < rep.bound;
    rep.coprime = gcd(u0, r) == 1;
    return rep;
}

}  // namespace aplcm
