// Acceptance gate. Each numbered criterion prints exactly one PASS/FAIL
// line; the process exits with the number of failures. Every expected
// value, range, and time budget is pinned here, in code.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lcm_engine.hpp"
#include "oracle.hpp"
#include "search.hpp"
#include "verifier.hpp"

using namespace aplcm;

namespace {

struct Result {
    bool ok = false;
    std::string detail;
};

int g_failures = 0;

void report(int idx, const Result& r) {
    std::printf("%s %2d  %s\n", r.ok ? "PASS" : "FAIL", idx, r.detail.c_str());
    std::fflush(stdout);
    if (!r.ok) ++g_failures;
}

double ms_between(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

template <class F>
double best_of_3_ms(F&& f) {
    double best = 1e18;
    for (int i = 0; i < 3; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, ms_between(t0, t1));
    }
    return best;
}

std::string ms_str(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g ms", ms);
    return buf;
}

// ---- criterion 1: golden boundary values L_4 = 315 < 324 ------------------

Result criterion1() {
    Progression p(1, 2);
    Natural l, b;
    const double ms = best_of_3_ms([&] {
        l = lcm_range(p, 4, 0);
        b = bound_value(p, 4, BoundKind::hong_yang(2));
    });
    const bool values = l == 315 && b == 324 && l < b;
    const bool fast = ms <= 1.0;
    Result r;
    r.ok = values && fast;
    r.detail = "golden point: L_4(1,2) = " + dec_string(l) + " < " + dec_string(b) +
               " = exponential-window bound [" + ms_str(ms) + " <= 1 ms]";
    return r;
}

// ---- criterion 2: flawed non-coprime example reproduced -------------------

Result criterion2() {
    ProbeReport rep;
    const double ms = best_of_3_ms([&] { rep = probe(2, 2, 3, 8); });
    const bool values = rep.l_n == 5040 && rep.bound == 104976 && rep.violates && !rep.coprime;
    const bool fast = ms <= 1.0;
    Result r;
    r.ok = values && fast;
    r.detail = "non-coprime probe: lcm{2,4,...,18} = " + dec_string(rep.l_n) + " < " +
               dec_string(rep.bound) + ", coprime flag " + (rep.coprime ? "up" : "down") + " [" +
               ms_str(ms) + " <= 1 ms]";
    return r;
}

// ---- criterion 3: the boundary search finds exactly one violation ---------

Result criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    SearchReport rep = full_search(10, 10, 0);
    const double ms = ms_between(t0, std::chrono::steady_clock::now());
    const bool unique =
        rep.examples.size() == 1 && rep.examples[0].u0 == 1 && rep.examples[0].r == 2 &&
        rep.examples[0].alpha == 2 && rep.examples[0].n == 4 && rep.examples[0].l_n == 315 &&
        rep.examples[0].bound == 324;
    Result r;
    r.ok = unique && ms <= 10000.0;
    r.detail = "full search at caps (10,10): " + std::to_string(rep.examples.size()) +
               " violation(s), expected the single (u0=1, r=2, alpha=2, n=4) [" + ms_str(ms) +
               " <= 10 s]";
    return r;
}

// ---- criterion 4: tight pairs match the brute-force oracle ----------------

Result criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    auto ours = tight_pairs(10, 10);
    const double ms = ms_between(t0, std::chrono::steady_clock::now());
    auto ref = oracle::tight_pairs(10, 10);
    bool match = ours.size() == 3 && ref.size() == ours.size();
    if (match)
        for (size_t i = 0; i < ours.size(); ++i)
            match = match && ours[i].alpha == ref[i].first && ours[i].r == ref[i].second;
    Result r;
    r.ok = match && ms <= 1000.0;
    r.detail = "tight pairs at caps (10,10): " + std::to_string(ours.size()) +
               " found, oracle " + std::to_string(ref.size()) + " [" + ms_str(ms) + " <= 1 s]";
    return r;
}

// ---- criterion 5: integral cofactor across the full small box -------------

Result criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checked = 0, failed = 0, expected = 0;
    for (unsigned u0 = 1; u0 <= 20; ++u0)
        for (unsigned r = 1; r <= 6; ++r) {
            if (std::gcd(u0, r) != 1) continue;
            expected += 61 * 62 / 2;
            Progression p(u0, r);
            for (std::uint64_t n = 0; n <= 60; ++n)
                for (std::uint64_t k = 0; k <= n; ++k) {
                    ++checked;
                    if (a_value(p, n, k) < 1) ++failed;
                }
        }
    const double ms = ms_between(t0, std::chrono::steady_clock::now());
    Result r;
    r.ok = failed == 0 && checked == expected && ms <= 60000.0;
    r.detail = "integral cofactor: " + std::to_string(checked) + "/" +
               std::to_string(expected) + " decompositions integral over u0<=20, r<=6, "
               "0<=k<=n<=60, " + std::to_string(failed) + " failures [" + ms_str(ms) +
               " <= 60 s]";
    return r;
}

// ---- criterion 6: threshold chain across the full small box ---------------

Result criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checked = 0, failed = 0, expected = 0;
    for (unsigned u0 = 1; u0 <= 30; ++u0)
        for (unsigned r = 1; r <= 5; ++r) {
            if (std::gcd(u0, r) != 1) continue;
            expected += 100;
            Progression p(u0, r);
            for (std::uint64_t n = 1; n <= 100; ++n) {
                ++checked;
                if (!check_lemma_2_2(p, n).holds) ++failed;
            }
        }
    const double ms = ms_between(t0, std::chrono::steady_clock::now());
    Result r;
    r.ok = failed == 0 && checked == expected && ms <= 120000.0;
    r.detail = "threshold chain: " + std::to_string(checked) + "/" + std::to_string(expected) +
               " instances hold over u0<=30, r<=5, n<=100, " + std::to_string(failed) +
               " failures [" + ms_str(ms) + " <= 120 s]";
    return r;
}

// ---- criteria 7 and 8: the big hypothesis-window sweep --------------------

// tuples with r, alpha in [2,8], a in [2, min(alpha, r)], u0 in [1,50]
// coprime to r, and the 21 values n = 2*alpha*r ... 2*alpha*r + 20
std::uint64_t expected_window_tuples() {
    std::uint64_t count = 0;
    for (unsigned r = 2; r <= 8; ++r)
        for (unsigned alpha = 2; alpha <= 8; ++alpha)
            for (unsigned a = 2; a <= std::min(alpha, r); ++a)
                for (unsigned u0 = 1; u0 <= 50; ++u0)
                    if (std::gcd(u0, r) == 1) count += 21;
    return count;
}

SweepSpec window_spec(Claim claim) {
    SweepSpec spec;
    spec.claim = claim;
    spec.u0 = {1, 50};
    spec.r = {2, 8};
    spec.alpha = {2, 8};
    spec.a = {2, 8};
    spec.n_extra = 20;
    spec.workers = 0;
    return spec;
}

Result sweep_result(const char* what, double budget_ms, double ms_used, std::uint64_t checked,
                    std::uint64_t failed, std::uint64_t expected) {
    Result r;
    r.ok = failed == 0 && checked == expected && (budget_ms <= 0 || ms_used <= budget_ms);
    r.detail = std::string(what) + ": " + std::to_string(checked) + "/" +
               std::to_string(expected) + " instances hold, " + std::to_string(failed) +
               " failures [" + ms_str(ms_used) +
               (budget_ms > 0 ? " <= " + ms_str(budget_ms) : "") + "]";
    return r;
}

Result criterion7() {
    const std::uint64_t expected = 2 * expected_window_tuples();
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checked = 0, failed = 0;
    for (Claim claim : {Claim::Lemma31, Claim::DivisibilityStep}) {
        auto records = sweep(window_spec(claim));
        checked += records.size();
        for (const auto& rec : records)
            if (!rec.holds) ++failed;
    }
    const double ms = ms_between(t0, std::chrono::steady_clock::now());
    return sweep_result("threshold gap + divisibility sweep", 600000.0, ms, checked, failed,
                        expected);
}

Result criterion8() {
    const std::uint64_t expected = expected_window_tuples();
    auto t0 = std::chrono::steady_clock::now();
    auto records = sweep(window_spec(Claim::Theorem12));
    std::uint64_t failed = 0;
    for (const auto& rec : records)
        if (!rec.holds) ++failed;
    const double ms = ms_between(t0, std::chrono::steady_clock::now());
    return sweep_result("sharpened lower bound sweep", 0.0, ms, records.size(), failed,
                        expected);
}

// ---- criterion 9: fold lcm vs prime-exponent oracle, randomized -----------

Result criterion9() {
    std::mt19937_64 rng(20250815);
    std::uniform_int_distribution<unsigned> u0_d(1, 20), r_d(1, 6);
    std::uniform_int_distribution<std::uint64_t> n_d(0, 60);
    const int kInstances = 10000;
    int mismatches = 0;
    for (int i = 0; i < kInstances; ++i) {
        unsigned u0 = u0_d(rng), r = r_d(rng);
        while (std::gcd(u0, r) != 1) {
            u0 = u0_d(rng);
            r = r_d(rng);
        }
        const std::uint64_t n = n_d(rng);
        const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, n)(rng);
        if (lcm_range(Progression(u0, r), n, k) != oracle::lcm_progression(u0, r, n, k))
            ++mismatches;
    }
    Result r;
    r.ok = mismatches == 0;
    r.detail = "fold vs prime-exponent oracle: " + std::to_string(kInstances) +
               " random instances (seed 20250815), " + std::to_string(mismatches) +
               " mismatches";
    return r;
}

// ---- criterion 10: worker count never changes output bytes ----------------

struct CmdRun {
    int exit = -1;
    std::string out;
};

CmdRun run_cmd(const std::string& cmd) {
    CmdRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Result criterion10() {
    const std::string bin = APLCM_CLI_BIN;
    const std::string cmds[] = {
        "verify theorem12 --u0 1..10 --r 2..4 --alpha 2..3 --a 2 --n-extra 4 --format jsonl",
        "verify lemma22 --u0 1..6 --r 1..4 --n 1..40 --format csv",
        "search --alpha-max 10 --r-max 10 --format csv",
        "scan --u0 3 --r 4 --alpha 3 --a 2 --n-max 120 --format csv",
    };
    int bad = 0;
    for (const std::string& cmd : cmds) {
        CmdRun w1 = run_cmd("WORKERS=1 " + bin + " " + cmd + " 2>/dev/null");
        CmdRun w4 = run_cmd("WORKERS=4 " + bin + " " + cmd + " 2>/dev/null");
        if (w1.exit != 0 || w4.exit != 0 || w1.out.empty() || w1.out != w4.out) ++bad;
    }
    Result r;
    r.ok = bad == 0;
    r.detail = "determinism: 4 command lines byte-compared for WORKERS=1 vs WORKERS=4, " +
               std::to_string(bad) + " differed";
    return r;
}

template <class F>
void run_criterion(int idx, F&& f) {
    Result r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("unexpected exception: ") + e.what();
    }
    report(idx, r);
}

}  // namespace

int main() {
    run_criterion(1, criterion1);
    run_criterion(2, criterion2);
    run_criterion(3, criterion3);
    run_criterion(4, criterion4);
    run_criterion(5, criterion5);
    run_criterion(6, criterion6);
    run_criterion(7, criterion7);
    run_criterion(8, criterion8);
    run_criterion(9, criterion9);
    run_criterion(10, criterion10);
    std::printf("%d/10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
