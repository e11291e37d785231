#include "doctest.h"

#include <cstring>
#include <string>

#include "aplcm.h"

namespace {

struct Scoped {
    char* s = nullptr;
    ~Scoped() { aplcm_string_free(s); }
    std::string str() const { return s ? s : "<null>"; }
};

}  // namespace

TEST_CASE("library identity and status names") {
    CHECK(std::strlen(aplcm_version()) > 0);
    CHECK(std::string(aplcm_status_name(APLCM_OK)) == "ok");
    CHECK(std::string(aplcm_status_name(APLCM_ERR_NOT_COPRIME)) == "not coprime");
    aplcm_string_free(nullptr);  // must be a no-op
}

TEST_CASE("progression lifecycle over the C boundary") {
    aplcm_progression* p = nullptr;
    REQUIRE(aplcm_progression_new("10", "3", &p) == APLCM_OK);

    Scoped term;
    CHECK(aplcm_progression_term(p, "4", &term.s) == APLCM_OK);
    CHECK(term.str() == "22");

    uint64_t kn = 99;
    CHECK(aplcm_threshold_index(p, 5, &kn) == APLCM_OK);
    CHECK(kn == 0);
    CHECK(aplcm_threshold_index(p, 0, &kn) == APLCM_ERR_INVALID);
    CHECK(std::strlen(aplcm_last_error()) > 0);

    aplcm_progression_free(p);
    aplcm_progression_free(nullptr);
}

TEST_CASE("constructor failures map to status codes") {
    aplcm_progression* p = nullptr;
    CHECK(aplcm_progression_new("4", "6", &p) == APLCM_ERR_NOT_COPRIME);
    CHECK(aplcm_progression_new("0", "2", &p) == APLCM_ERR_INVALID);
    CHECK(aplcm_progression_new("12x", "5", &p) == APLCM_ERR_INVALID);
    CHECK(aplcm_progression_new(nullptr, "5", &p) == APLCM_ERR_INVALID);
    CHECK(aplcm_progression_new("-3", "5", &p) == APLCM_ERR_INVALID);
}

TEST_CASE("decompose returns exact strings") {
    aplcm_progression* p = nullptr;
    REQUIRE(aplcm_progression_new("1", "2", &p) == APLCM_OK);
    Scoped l, c, a;
    REQUIRE(aplcm_decompose(p, 4, 0, &l.s, &c.s, &a.s) == APLCM_OK);
    CHECK(l.str() == "315");
    CHECK(c.str() == "315/8");
    CHECK(a.str() == "8");

    CHECK(aplcm_decompose(p, 3, 4, &l.s, &c.s, &a.s) == APLCM_ERR_INVALID);
    aplcm_progression_free(p);
}

TEST_CASE("bounds and hypotheses over the C boundary") {
    aplcm_progression* p = nullptr;
    REQUIRE(aplcm_progression_new("1", "2", &p) == APLCM_OK);

    Scoped b;
    REQUIRE(aplcm_bound_value(p, 4, APLCM_BOUND_HONG_YANG, 2, 0, 0, &b.s) == APLCM_OK);
    CHECK(b.str() == "324");

    Scoped m;
    REQUIRE(aplcm_bound_value(p, 8, APLCM_BOUND_MAIN, 2, 2, 0, &m.s) == APLCM_OK);
    CHECK(m.str() == "26244");

    int holds = -1;
    CHECK(aplcm_hypothesis_holds(p, 4, APLCM_BOUND_HONG_YANG, 2, 0, 0, &holds) == APLCM_OK);
    CHECK(holds == 0);
    CHECK(aplcm_hypothesis_holds(p, 5, APLCM_BOUND_HONG_YANG, 2, 0, 0, &holds) == APLCM_OK);
    CHECK(holds == 1);

    Scoped bad;
    CHECK(aplcm_bound_value(p, 4, APLCM_BOUND_MAIN, 2, 1, 0, &bad.s) == APLCM_ERR_INVALID);

    int dom = -1;
    CHECK(aplcm_corollary_dominates(5, 1, 2, "2", &dom) == APLCM_OK);
    CHECK(dom == 1);
    CHECK(aplcm_corollary_dominates(2, 1, 2, "2", &dom) == APLCM_OK);
    CHECK(dom == 0);
    CHECK(aplcm_corollary_dominates(2, 0, 2, "2", &dom) == APLCM_ERR_INVALID);

    aplcm_progression_free(p);
}

TEST_CASE("claim inventory") {
    REQUIRE(aplcm_claim_count() == 9);
    bool saw_lemma22 = false, saw_theorem12 = false;
    for (size_t i = 0; i < aplcm_claim_count(); ++i) {
        std::string token = aplcm_claim_token(i);
        CHECK(!token.empty());
        if (token == "lemma22") saw_lemma22 = true;
        if (token == "theorem12") saw_theorem12 = true;
    }
    CHECK(saw_lemma22);
    CHECK(saw_theorem12);
    CHECK(aplcm_claim_token(aplcm_claim_count()) == nullptr);

    CHECK(aplcm_claim_uses("theorem12", "a") == 1);
    CHECK(aplcm_claim_uses("theorem11", "a") == 0);
    CHECK(aplcm_claim_uses("ineq5", "u0") == 0);
    CHECK(aplcm_claim_uses("ineq5", "r") == 1);
    CHECK(aplcm_claim_uses("corollary31", "beta") == 1);
    CHECK(aplcm_claim_uses("nonsense", "r") == 0);
    CHECK(aplcm_claim_uses("lemma21", "nonsense") == 0);
}

TEST_CASE("sweep over the C boundary") {
    aplcm_sweep_spec spec = {};
    spec.claim = "lemma22";
    spec.u0_lo = 1;
    spec.u0_hi = 3;
    spec.r_lo = 1;
    spec.r_hi = 2;
    spec.has_n_range = 1;
    spec.n_lo = 1;
    spec.n_hi = 4;
    spec.workers = 1;

    aplcm_records* rs = nullptr;
    REQUIRE(aplcm_sweep(&spec, &rs) == APLCM_OK);
    // coprime (u0, r) pairs: (1,1) (1,2) (2,1) (3,1) (3,2); n = 1..4 each
    CHECK(aplcm_records_count(rs) == 20);
    CHECK(std::string(aplcm_records_claim(rs, 0)) == "lemma22");
    CHECK(aplcm_records_holds(rs, 0) == 1);
    CHECK(std::string(aplcm_records_param(rs, 0, "u0")) == "1");
    CHECK(std::string(aplcm_records_param(rs, 0, "n")) == "1");
    CHECK(aplcm_records_param(rs, 0, "alpha") == nullptr);  // not a lemma22 parameter
    CHECK(aplcm_records_param(rs, 0, "bogus") == nullptr);

    const size_t wn = aplcm_records_witness_count(rs, 0);
    REQUIRE(wn == 5);
    CHECK(std::string(aplcm_records_witness_name(rs, 0, 0)) == "L_n");
    CHECK(std::string(aplcm_records_witness_value(rs, 0, 0)) == "2");  // lcm{1, 2}
    CHECK(aplcm_records_witness_name(rs, 0, wn) == nullptr);
    CHECK(aplcm_records_claim(rs, aplcm_records_count(rs)) == nullptr);
    aplcm_records_free(rs);

    spec.claim = "no_such_claim";
    CHECK(aplcm_sweep(&spec, &rs) == APLCM_ERR_INVALID);
    spec.claim = nullptr;
    CHECK(aplcm_sweep(&spec, &rs) == APLCM_ERR_INVALID);
    CHECK(aplcm_sweep(nullptr, &rs) == APLCM_ERR_INVALID);
    aplcm_records_free(nullptr);
}

TEST_CASE("search and probe over the C boundary") {
    aplcm_search* s = nullptr;
    REQUIRE(aplcm_search_run(10, 10, 1, &s) == APLCM_OK);
    REQUIRE(aplcm_search_tight_pair_count(s) == 3);
    uint64_t alpha = 0, r = 0;
    REQUIRE(aplcm_search_tight_pair(s, 0, &alpha, &r) == APLCM_OK);
    CHECK(alpha == 2);
    CHECK(r == 2);
    CHECK(aplcm_search_tight_pair(s, 7, &alpha, &r) == APLCM_ERR_INVALID);

    REQUIRE(aplcm_search_counterexample_count(s) == 1);
    CHECK(std::string(aplcm_search_counterexample_field(s, 0, "u0")) == "1");
    CHECK(std::string(aplcm_search_counterexample_field(s, 0, "l_n")) == "315");
    CHECK(std::string(aplcm_search_counterexample_field(s, 0, "bound")) == "324");
    CHECK(aplcm_search_counterexample_field(s, 0, "nope") == nullptr);
    CHECK(aplcm_search_counterexample_field(s, 5, "u0") == nullptr);
    aplcm_search_free(s);
    aplcm_search_free(nullptr);

    Scoped l, b;
    int violates = -1, coprime = -1;
    REQUIRE(aplcm_probe("2", "2", 3, 8, &l.s, &b.s, &violates, &coprime) == APLCM_OK);
    CHECK(l.str() == "5040");
    CHECK(b.str() == "104976");
    CHECK(violates == 1);
    CHECK(coprime == 0);
}

TEST_CASE("scan over the C boundary") {
    REQUIRE(aplcm_scan_column_count() == 7);
    CHECK(std::string(aplcm_scan_column_name(0)) == "n");
    CHECK(std::string(aplcm_scan_column_name(6)) == "verdict");
    CHECK(aplcm_scan_column_name(7) == nullptr);

    aplcm_progression* p = nullptr;
    REQUIRE(aplcm_progression_new("1", "2", &p) == APLCM_OK);
    aplcm_scan* s = nullptr;
    REQUIRE(aplcm_scan_run(p, 2, 2, 10, &s) == APLCM_OK);
    REQUIRE(aplcm_scan_row_count(s) == 10);

    // row for n=8: L_8 = 765765 needs 20 bits; main bound 26244 needs 15
    CHECK(std::string(aplcm_scan_cell(s, 7, 0)) == "8");
    CHECK(std::string(aplcm_scan_cell(s, 7, 1)) == "20");
    CHECK(std::string(aplcm_scan_cell(s, 7, 3)) == "15");
    CHECK(std::string(aplcm_scan_cell(s, 7, 4)) == "true");   // 8 > 2^2
    CHECK(std::string(aplcm_scan_cell(s, 7, 5)) == "true");   // 8 >= 2*2*2
    CHECK(std::string(aplcm_scan_cell(s, 7, 6)) == "true");   // 765765 >= 26244
    CHECK(std::string(aplcm_scan_cell(s, 0, 5)) == "false");  // n=1 below the window
    CHECK(aplcm_scan_cell(s, 10, 0) == nullptr);
    aplcm_scan_free(s);

    // scan needs r >= a
    aplcm_scan* bad = nullptr;
    CHECK(aplcm_scan_run(p, 3, 3, 5, &bad) == APLCM_ERR_INVALID);
    aplcm_progression_free(p);
    aplcm_scan_free(nullptr);
}
