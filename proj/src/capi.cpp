#include "aplcm.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "lcm_engine.hpp"
#include "progression.hpp"
#include "search.hpp"
#include "verifier.hpp"

namespace {

thread_local std::string t_last_error;

template <class F>
aplcm_status wrap(F&& f) {
    try {
        f();
        t_last_error.clear();
        return APLCM_OK;
    } catch (const aplcm::NotCoprime& e) {
        t_last_error = e.what();
        return APLCM_ERR_NOT_COPRIME;
    } catch (const aplcm::HypothesisNotMet& e) {
        t_last_error = e.what();
        return APLCM_ERR_HYPOTHESIS;
    } catch (const aplcm::InvalidArgument& e) {
        t_last_error = e.what();
        return APLCM_ERR_INVALID;
    } catch (const aplcm::InternalContradiction& e) {
        t_last_error = e.what();
        return APLCM_ERR_CONTRADICTION;
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return APLCM_ERR_NOMEM;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return APLCM_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown failure";
        return APLCM_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what) {
    if (!p) throw aplcm::InvalidArgument(std::string("null ") + what);
}

aplcm::BoundKind make_kind(aplcm_bound_kind kind, uint64_t alpha, uint64_t a, uint64_t beta) {
    switch (kind) {
        case APLCM_BOUND_HONG_YANG: return aplcm::BoundKind::hong_yang(alpha);
        case APLCM_BOUND_MAIN: return aplcm::BoundKind::main(alpha, a);
        case APLCM_BOUND_COROLLARY: return aplcm::BoundKind::corollary(alpha, beta, a);
    }
    throw aplcm::InvalidArgument("bad bound kind");
}

constexpr const char* kParamNames[6] = {"u0", "r", "n", "alpha", "a", "beta"};

constexpr const char* kScanColumns[] = {"n",      "lcm_bits", "hy_bound_bits", "main_bound_bits",
                                        "hy_hyp", "main_hyp", "verdict"};
constexpr size_t kScanColumnCount = sizeof(kScanColumns) / sizeof(kScanColumns[0]);

}  // namespace

struct aplcm_progression {
    aplcm::Progression p;
};

struct aplcm_records {
    struct Row {
        const char* claim;
        bool holds;
        std::array<std::string, 6> params;  // same order as kParamNames
        std::array<bool, 6> has;
        std::vector<aplcm::Witness> witnesses;
    };
    std::vector<Row> rows;
};

struct aplcm_search {
    std::vector<aplcm::TightPair> pairs;
    // u0, r, alpha, n, l_n, bound
    std::vector<std::array<std::string, 6>> examples;
};

struct aplcm_scan {
    std::vector<std::array<std::string, kScanColumnCount>> rows;
};

namespace {

aplcm_records::Row render_record(const aplcm::VerificationRecord& rec) {
    const aplcm::ClaimShape shape = aplcm::claim_shape(rec.claim);
    aplcm_records::Row row;
    row.claim = aplcm::claim_token(rec.claim);
    row.holds = rec.holds;
    row.has = {shape.u0, shape.r, shape.n, shape.alpha, shape.a, shape.beta};
    if (shape.u0) row.params[0] = aplcm::dec_string(rec.params.u0);
    if (shape.r) row.params[1] = aplcm::dec_string(rec.params.r);
    if (shape.n) row.params[2] = std::to_string(rec.params.n);
    if (shape.alpha) row.params[3] = std::to_string(rec.params.alpha);
    if (shape.a) row.params[4] = std::to_string(rec.params.a);
    if (shape.beta) row.params[5] = std::to_string(rec.params.beta);
    row.witnesses = rec.witnesses;
    return row;
}

}  // namespace

extern "C" {

const char* aplcm_version(void) { return "1.0.0"; }

const char* aplcm_status_name(aplcm_status st) {
    switch (st) {
        case APLCM_OK: return "ok";
        case APLCM_ERR_INVALID: return "invalid argument";
        case APLCM_ERR_NOT_COPRIME: return "not coprime";
        case APLCM_ERR_HYPOTHESIS: return "hypothesis not satisfied";
        case APLCM_ERR_CONTRADICTION: return "internal contradiction";
        case APLCM_ERR_NOMEM: return "out of memory";
        case APLCM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* aplcm_last_error(void) { return t_last_error.c_str(); }

void aplcm_string_free(char* s) { std::free(s); }

aplcm_status aplcm_progression_new(const char* u0, const char* r, aplcm_progression** out) {
    return wrap([&] {
        need(u0, "u0");
        need(r, "r");
        need(out, "output");
        auto handle = std::make_unique<aplcm_progression>(
            aplcm_progression{aplcm::Progression(aplcm::parse_natural(u0), aplcm::parse_natural(r))});
        *out = handle.release();
    });
}

void aplcm_progression_free(aplcm_progression* p) { delete p; }

aplcm_status aplcm_progression_term(const aplcm_progression* p, const char* k, char** out_term) {
    return wrap([&] {
        need(p, "progression");
        need(k, "k");
        need(out_term, "output");
        *out_term = dup_string(aplcm::dec_string(p->p.term(aplcm::parse_natural(k))));
    });
}

aplcm_status aplcm_threshold_index(const aplcm_progression* p, uint64_t n, uint64_t* out_kn) {
    return wrap([&] {
        need(p, "progression");
        need(out_kn, "output");
        *out_kn = p->p.threshold_index(n);
    });
}

aplcm_status aplcm_decompose(const aplcm_progression* p, uint64_t n, uint64_t k, char** out_lcm,
                             char** out_c, char** out_a) {
    return wrap([&] {
        need(p, "progression");
        need(out_lcm, "output");
        need(out_c, "output");
        need(out_a, "output");
        aplcm::Decomposition d = aplcm::decompose(p->p, n, k);
        std::unique_ptr<char, decltype(&std::free)> l(dup_string(aplcm::dec_string(d.l)),
                                                      &std::free);
        std::unique_ptr<char, decltype(&std::free)> c(dup_string(aplcm::ratio_string(d.c)),
                                                      &std::free);
        *out_a = dup_string(aplcm::dec_string(d.a));
        *out_c = c.release();
        *out_lcm = l.release();
    });
}

aplcm_status aplcm_bound_value(const aplcm_progression* p, uint64_t n, aplcm_bound_kind kind,
                               uint64_t alpha, uint64_t a, uint64_t beta, char** out_bound) {
    return wrap([&] {
        need(p, "progression");
        need(out_bound, "output");
        *out_bound =
            dup_string(aplcm::dec_string(aplcm::bound_value(p->p, n, make_kind(kind, alpha, a, beta))));
    });
}

aplcm_status aplcm_hypothesis_holds(const aplcm_progression* p, uint64_t n, aplcm_bound_kind kind,
                                    uint64_t alpha, uint64_t a, uint64_t beta, int* out_holds) {
    return wrap([&] {
        need(p, "progression");
        need(out_holds, "output");
        *out_holds = aplcm::hypothesis_holds(p->p, n, make_kind(kind, alpha, a, beta)) ? 1 : 0;
    });
}

aplcm_status aplcm_corollary_dominates(uint64_t alpha, uint64_t beta, uint64_t a, const char* r,
                                       int* out) {
    return wrap([&] {
        need(r, "r");
        need(out, "output");
        *out = aplcm::corollary_dominates(alpha, beta, a, aplcm::parse_natural(r)) ? 1 : 0;
    });
}

size_t aplcm_claim_count(void) { return std::size(aplcm::kAllClaims); }

const char* aplcm_claim_token(size_t i) {
    if (i >= std::size(aplcm::kAllClaims)) return nullptr;
    return aplcm::claim_token(aplcm::kAllClaims[i]);
}

int aplcm_claim_uses(const char* claim, const char* param) {
    if (!claim || !param) return 0;
    auto c = aplcm::claim_from_token(claim);
    if (!c) return 0;
    aplcm::ClaimShape s = aplcm::claim_shape(*c);
    const bool flags[6] = {s.u0, s.r, s.n, s.alpha, s.a, s.beta};
    for (size_t i = 0; i < 6; ++i)
        if (std::strcmp(param, kParamNames[i]) == 0) return flags[i] ? 1 : 0;
    return 0;
}

aplcm_status aplcm_sweep(const aplcm_sweep_spec* spec, aplcm_records** out) {
    return wrap([&] {
        need(spec, "sweep spec");
        need(out, "output");
        need(spec->claim, "claim");
        auto claim = aplcm::claim_from_token(spec->claim);
        if (!claim)
            throw aplcm::InvalidArgument(std::string("unknown claim '") + spec->claim + "'");
        aplcm::SweepSpec s;
        s.claim = *claim;
        s.u0 = {spec->u0_lo, spec->u0_hi};
        s.r = {spec->r_lo, spec->r_hi};
        s.alpha = {spec->alpha_lo, spec->alpha_hi};
        s.a = {spec->a_lo, spec->a_hi};
        s.beta = {spec->beta_lo, spec->beta_hi};
        if (spec->has_n_range) s.n = aplcm::Range{spec->n_lo, spec->n_hi};
        s.n_extra = spec->n_extra;
        s.workers = spec->workers;
        auto records = aplcm::sweep(s);
        auto handle = std::make_unique<aplcm_records>();
        handle->rows.reserve(records.size());
        for (const auto& rec : records) handle->rows.push_back(render_record(rec));
        *out = handle.release();
    });
}

void aplcm_records_free(aplcm_records* rs) { delete rs; }

size_t aplcm_records_count(const aplcm_records* rs) { return rs ? rs->rows.size() : 0; }

const char* aplcm_records_claim(const aplcm_records* rs, size_t i) {
    if (!rs || i >= rs->rows.size()) return nullptr;
    return rs->rows[i].claim;
}

int aplcm_records_holds(const aplcm_records* rs, size_t i) {
    if (!rs || i >= rs->rows.size()) return 0;
    return rs->rows[i].holds ? 1 : 0;
}

const char* aplcm_records_param(const aplcm_records* rs, size_t i, const char* name) {
    if (!rs || i >= rs->rows.size() || !name) return nullptr;
    for (size_t k = 0; k < 6; ++k) {
        if (std::strcmp(name, kParamNames[k]) == 0)
            return rs->rows[i].has[k] ? rs->rows[i].params[k].c_str() : nullptr;
    }
    return nullptr;
}

size_t aplcm_records_witness_count(const aplcm_records* rs, size_t i) {
    if (!rs || i >= rs->rows.size()) return 0;
    return rs->rows[i].witnesses.size();
}

const char* aplcm_records_witness_name(const aplcm_records* rs, size_t i, size_t j) {
    if (!rs || i >= rs->rows.size() || j >= rs->rows[i].witnesses.size()) return nullptr;
    return rs->rows[i].witnesses[j].name.c_str();
}

const char* aplcm_records_witness_value(const aplcm_records* rs, size_t i, size_t j) {
    if (!rs || i >= rs->rows.size() || j >= rs->rows[i].witnesses.size()) return nullptr;
    return rs->rows[i].witnesses[j].value.c_str();
}

aplcm_status aplcm_search_run(uint64_t alpha_max, uint64_t r_max, unsigned workers,
                              aplcm_search** out) {
    return wrap([&] {
        need(out, "output");
        aplcm::SearchReport report = aplcm::full_search(alpha_max, r_max, workers);
        auto handle = std::make_unique<aplcm_search>();
        handle->pairs = std::move(report.pairs);
        for (const auto& ex : report.examples)
            handle->examples.push_back({aplcm::dec_string(ex.u0), aplcm::dec_string(ex.r),
                                        std::to_string(ex.alpha), std::to_string(ex.n),
                                        aplcm::dec_string(ex.l_n), aplcm::dec_string(ex.bound)});
        *out = handle.release();
    });
}

void aplcm_search_free(aplcm_search* s) { delete s; }

size_t aplcm_search_tight_pair_count(const aplcm_search* s) { return s ? s->pairs.size() : 0; }

aplcm_status aplcm_search_tight_pair(const aplcm_search* s, size_t i, uint64_t* alpha,
                                     uint64_t* r) {
    return wrap([&] {
        need(s, "search");
        need(alpha, "output");
        need(r, "output");
        if (i >= s->pairs.size()) throw aplcm::InvalidArgument("tight pair index out of range");
        *alpha = s->pairs[i].alpha;
        *r = s->pairs[i].r;
    });
}

size_t aplcm_search_counterexample_count(const aplcm_search* s) {
    return s ? s->examples.size() : 0;
}

const char* aplcm_search_counterexample_field(const aplcm_search* s, size_t i,
                                              const char* field) {
    if (!s || i >= s->examples.size() || !field) return nullptr;
    constexpr const char* names[6] = {"u0", "r", "alpha", "n", "l_n", "bound"};
    for (size_t k = 0; k < 6; ++k)
        if (std::strcmp(field, names[k]) == 0) return s->examples[i][k].c_str();
    return nullptr;
}

aplcm_status aplcm_probe(const char* u0, const char* r, uint64_t alpha, uint64_t n,
                         char** out_lcm, char** out_bound, int* out_violates, int* out_coprime) {
    return wrap([&] {
        need(u0, "u0");
        need(r, "r");
        need(out_lcm, "output");
        need(out_bound, "output");
        need(out_violates, "output");
        need(out_coprime, "output");
        aplcm::ProbeReport rep =
            aplcm::probe(aplcm::parse_natural(u0), aplcm::parse_natural(r), alpha, n);
        std::unique_ptr<char, decltype(&std::free)> l(dup_string(aplcm::dec_string(rep.l_n)),
                                                      &std::free);
        *out_bound = dup_string(aplcm::dec_string(rep.bound));
        *out_lcm = l.release();
        *out_violates = rep.violates ? 1 : 0;
        *out_coprime = rep.coprime ? 1 : 0;
    });
}

aplcm_status aplcm_scan_run(const aplcm_progression* p, uint64_t alpha, uint64_t a,
                            uint64_t n_max, aplcm_scan** out) {
    return wrap([&] {
        need(p, "progression");
        need(out, "output");
        const aplcm::BoundKind hy = aplcm::BoundKind::hong_yang(alpha);
        const aplcm::BoundKind mn = aplcm::BoundKind::main(alpha, a);
        if (p->p.r() < aplcm::to_natural(a)) throw aplcm::InvalidArgument("scan needs r >= a");

        auto handle = std::make_unique<aplcm_scan>();
        const aplcm::Natural rp1 = p->p.r() + 1;
        aplcm::Natural l = p->p.u0();  // lcm over terms 0..n, grown incrementally
        aplcm::Natural u = p->p.u0();
        aplcm::Natural hy_bound = p->p.u0() * aplcm::natural_pow(p->p.r(), hy.exponent());
        aplcm::Natural mn_bound = p->p.u0() * aplcm::natural_pow(p->p.r(), mn.exponent());
        for (uint64_t n = 1; n <= n_max; ++n) {
            u += p->p.r();
            l = aplcm::lcm(l, u);
            hy_bound *= rp1;
            mn_bound *= rp1;
            handle->rows.push_back({std::to_string(n), std::to_string(aplcm::bit_length(l)),
                                    std::to_string(aplcm::bit_length(hy_bound)),
                                    std::to_string(aplcm::bit_length(mn_bound)),
                                    aplcm::hypothesis_holds(p->p, n, hy) ? "true" : "false",
                                    aplcm::hypothesis_holds(p->p, n, mn) ? "true" : "false",
                                    l >= mn_bound ? "true" : "false"});
        }
        *out = handle.release();
    });
}

void aplcm_scan_free(aplcm_scan* s) { delete s; }

size_t aplcm_scan_column_count(void) { return kScanColumnCount; }

const char* aplcm_scan_column_name(size_t col) {
    if (col >= kScanColumnCount) return nullptr;
    return kScanColumns[col];
}

size_t aplcm_scan_row_count(const aplcm_scan* s) { return s ? s->rows.size() : 0; }

const char* aplcm_scan_cell(const aplcm_scan* s, size_t row, size_t col) {
    if (!s || row >= s->rows.size() || col >= kScanColumnCount) return nullptr;
    return s->rows[row][col].c_str();
}

}  // extern "C"
