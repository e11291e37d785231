// Command-line front end over the shared library's C interface.
//
//   aplcm compute --u0 1 --r 2 --n 4 [--k 0] [--format human]
//   aplcm verify <claim> --u0 1..20 --r 2..5 ... [--n lo..hi | --n-extra E]
//   aplcm search [--alpha-max 10] [--r-max 10] | aplcm search --probe u0,r,alpha,n
//   aplcm scan --u0 1 --r 3 --alpha 2 --a 2 --n-max 200
//
// Output goes to stdout in csv, jsonl, or human form; verify's one-line
// summary goes to stderr so piped output stays machine-readable.
// Exit codes: 0 success, 1 usage/invalid input, 2 a checked claim failed,
// 3 internal contradiction or unexpected failure.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aplcm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitInternal = 3;

// ---------------------------------------------------------------- utilities

int exit_code_for(aplcm_status st) {
    switch (st) {
        case APLCM_OK: return kExitOk;
        case APLCM_ERR_INVALID:
        case APLCM_ERR_NOT_COPRIME:
        case APLCM_ERR_HYPOTHESIS: return kExitUsage;
        default: return kExitInternal;
    }
}

int report_error(aplcm_status st) {
    std::fprintf(stderr, "error: %s: %s\n", aplcm_status_name(st), aplcm_last_error());
    return exit_code_for(st);
}

struct FreeString {
    void operator()(char* s) const { aplcm_string_free(s); }
};
using CString = std::unique_ptr<char, FreeString>;

bool parse_u64(const std::string& s, uint64_t& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

struct RangeArg {
    uint64_t lo = 0;
    uint64_t hi = 0;
    bool set = false;
};

// Accepts "7" or "2..8". An inverted range like "4..2" is well-formed but
// empty: it sweeps nothing and is not a usage error.
bool parse_range(const std::string& s, RangeArg& out) {
    auto dots = s.find("..");
    uint64_t lo = 0, hi = 0;
    if (dots == std::string::npos) {
        if (!parse_u64(s, lo)) return false;
        hi = lo;
    } else {
        if (!parse_u64(s.substr(0, dots), lo)) return false;
        if (!parse_u64(s.substr(dots + 2), hi)) return false;
    }
    out = {lo, hi, true};
    return true;
}

bool natural_literal(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

unsigned resolve_workers(std::optional<unsigned> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("WORKERS")) {
        uint64_t w = 0;
        if (parse_u64(env, w) && w > 0 && w <= 4096) return static_cast<unsigned>(w);
        std::fprintf(stderr, "warning: ignoring unusable WORKERS value '%s'\n", env);
    }
    return 0;  // library picks hardware concurrency
}

// ------------------------------------------------------------- field quoting

std::string csv_field(const std::string& s) {
    bool quote = false;
    for (char c : s)
        if (c == ',' || c == '"' || c == '\n' || c == '\r') quote = true;
    if (!quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_str(const std::string& s) {
    std::string out = "\"";
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
    return out;
}

void write_stdout(const std::string& buf) { std::fwrite(buf.data(), 1, buf.size(), stdout); }

enum class Format { Csv, Jsonl, Human };

bool parse_format(const std::string& s, Format& out) {
    if (s == "csv") out = Format::Csv;
    else if (s == "jsonl") out = Format::Jsonl;
    else if (s == "human") out = Format::Human;
    else return false;
    return true;
}

// ------------------------------------------------------------------ compute

struct ComputeArgs {
    std::string u0, r;
    uint64_t n = 0;
    uint64_t k = 0;
    std::string format = "human";
};

int run_compute(const ComputeArgs& args) {
    Format fmt;
    if (!parse_format(args.format, fmt)) {
        std::fprintf(stderr, "error: unknown format '%s'\n", args.format.c_str());
        return kExitUsage;
    }
    aplcm_progression* p = nullptr;
    if (aplcm_status st = aplcm_progression_new(args.u0.c_str(), args.r.c_str(), &p);
        st != APLCM_OK)
        return report_error(st);
    std::unique_ptr<aplcm_progression, decltype(&aplcm_progression_free)> guard(
        p, &aplcm_progression_free);

    char* l_raw = nullptr;
    char* c_raw = nullptr;
    char* a_raw = nullptr;
    if (aplcm_status st = aplcm_decompose(p, args.n, args.k, &l_raw, &c_raw, &a_raw);
        st != APLCM_OK)
        return report_error(st);
    CString l(l_raw), c(c_raw), a(a_raw);

    std::string kn;
    if (args.n >= 1) {
        uint64_t kn_val = 0;
        if (aplcm_status st = aplcm_threshold_index(p, args.n, &kn_val); st != APLCM_OK)
            return report_error(st);
        kn = std::to_string(kn_val);
    }

    std::string out;
    switch (fmt) {
        case Format::Csv:
            out = "l,c,a,k_n\n";
            out += csv_field(l.get()) + "," + csv_field(c.get()) + "," + csv_field(a.get()) +
                   "," + kn + "\n";
            break;
        case Format::Jsonl:
            out = "{\"l\":" + json_str(l.get()) + ",\"c\":" + json_str(c.get()) +
                  ",\"a\":" + json_str(a.get());
            if (!kn.empty()) out += ",\"k_n\":" + json_str(kn);
            out += "}\n";
            break;
        case Format::Human:
            out = "L = " + std::string(l.get()) + "\n";
            out += "C = " + std::string(c.get()) + "\n";
            out += "A = " + std::string(a.get()) + "\n";
            if (!kn.empty()) out += "k_n = " + kn + "\n";
            break;
    }
    write_stdout(out);
    return kExitOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string claim;
    std::string u0, r, n, alpha, a, beta;
    uint64_t n_extra = 0;
    bool n_extra_set = false;
    bool help_claims = false;
    std::string format = "csv";
    std::optional<unsigned> workers;
};

bool claim_known(const std::string& token) {
    for (size_t i = 0; i < aplcm_claim_count(); ++i)
        if (token == aplcm_claim_token(i)) return true;
    return false;
}

const char* claim_statement(const std::string& token) {
    if (token == "lemma21") return "A_{n,0} = L_n / C_{n,0} is a positive integer";
    if (token == "lemma22") return "L_n >= L_{n,k_n} >= C_{n,k_n} >= u0*(r+1)^n";
    if (token == "lemma31") return "n - k_n > (alpha+a-2)*r";
    if (token == "ineq3") return "n - k_n >= (n-1)*r/(r+1), given n > u0";
    if (token == "ineq5") return "(2*alpha*r-1)/(r+1) > alpha+a-2";
    if (token == "divstep") return "r^(alpha+a-2) divides A_{n,k_n}";
    if (token == "theorem11") return "L_n >= u0*r^alpha*(r+1)^n for n > r^alpha";
    if (token == "theorem12") return "L_n >= u0*r^(alpha+a-2)*(r+1)^n for n >= 2*alpha*r";
    if (token == "corollary31") return "L_n >= u0*r^(alpha+beta+a-2)*(r+1)^n";
    return "";
}

int run_help_claims() {
    static const char* kParams[6] = {"u0", "r", "n", "alpha", "a", "beta"};
    std::string out;
    for (size_t i = 0; i < aplcm_claim_count(); ++i) {
        const char* token = aplcm_claim_token(i);
        std::string line = token;
        line.resize(13, ' ');
        std::string flags;
        for (const char* p : kParams) {
            if (!aplcm_claim_uses(token, p)) continue;
            if (!flags.empty()) flags += " ";
            flags += "--";
            flags += p;
        }
        flags += "  ";
        if (flags.size() < 33) flags.resize(33, ' ');
        out += line + flags + claim_statement(token) + "\n";
    }
    write_stdout(out);
    return kExitOk;
}

int run_verify(const VerifyArgs& args) {
    if (args.help_claims) return run_help_claims();
    if (args.claim.empty()) {
        std::fprintf(stderr, "error: claim is required (see --help-claims)\n");
        return kExitUsage;
    }
    Format fmt;
    if (!parse_format(args.format, fmt)) {
        std::fprintf(stderr, "error: unknown format '%s'\n", args.format.c_str());
        return kExitUsage;
    }
    if (!claim_known(args.claim)) {
        std::fprintf(stderr, "error: unknown claim '%s'; known claims:", args.claim.c_str());
        for (size_t i = 0; i < aplcm_claim_count(); ++i)
            std::fprintf(stderr, " %s", aplcm_claim_token(i));
        std::fprintf(stderr, "\n");
        return kExitUsage;
    }

    struct Dim {
        const char* name;
        const std::string* text;
        RangeArg range;
    };
    Dim dims[5] = {{"u0", &args.u0, {}},
                   {"r", &args.r, {}},
                   {"alpha", &args.alpha, {}},
                   {"a", &args.a, {}},
                   {"beta", &args.beta, {}}};
    for (auto& d : dims) {
        const bool used = aplcm_claim_uses(args.claim.c_str(), d.name) != 0;
        if (!d.text->empty()) {
            if (!used) {
                std::fprintf(stderr, "error: claim '%s' takes no --%s\n", args.claim.c_str(),
                             d.name);
                return kExitUsage;
            }
            if (!parse_range(*d.text, d.range)) {
                std::fprintf(stderr, "error: bad --%s range '%s' (want N or LO..HI)\n", d.name,
                             d.text->c_str());
                return kExitUsage;
            }
        } else if (used) {
            std::fprintf(stderr, "error: claim '%s' needs --%s\n", args.claim.c_str(), d.name);
            return kExitUsage;
        }
    }

    RangeArg n_range;
    const bool uses_n = aplcm_claim_uses(args.claim.c_str(), "n") != 0;
    if (!args.n.empty()) {
        if (!uses_n) {
            std::fprintf(stderr, "error: claim '%s' takes no --n\n", args.claim.c_str());
            return kExitUsage;
        }
        if (args.n_extra_set) {
            std::fprintf(stderr, "error: give --n or --n-extra, not both\n");
            return kExitUsage;
        }
        if (!parse_range(args.n, n_range)) {
            std::fprintf(stderr, "error: bad --n range '%s' (want N or LO..HI)\n",
                         args.n.c_str());
            return kExitUsage;
        }
    }

    aplcm_sweep_spec spec = {};
    spec.claim = args.claim.c_str();
    spec.u0_lo = dims[0].range.lo;
    spec.u0_hi = dims[0].range.hi;
    spec.r_lo = dims[1].range.lo;
    spec.r_hi = dims[1].range.hi;
    spec.alpha_lo = dims[2].range.lo;
    spec.alpha_hi = dims[2].range.hi;
    spec.a_lo = dims[3].range.lo;
    spec.a_hi = dims[3].range.hi;
    spec.beta_lo = dims[4].range.lo;
    spec.beta_hi = dims[4].range.hi;
    spec.has_n_range = n_range.set ? 1 : 0;
    spec.n_lo = n_range.lo;
    spec.n_hi = n_range.hi;
    spec.n_extra = args.n_extra;
    spec.workers = resolve_workers(args.workers);

    aplcm_records* records = nullptr;
    if (aplcm_status st = aplcm_sweep(&spec, &records); st != APLCM_OK) return report_error(st);
    std::unique_ptr<aplcm_records, decltype(&aplcm_records_free)> guard(records,
                                                                        &aplcm_records_free);

    static const char* kParams[6] = {"u0", "r", "n", "alpha", "a", "beta"};
    const size_t count = aplcm_records_count(records);
    size_t held = 0;
    std::string out;
    if (fmt == Format::Csv) out = "claim,u0,r,n,alpha,a,beta,holds,witnesses\n";
    for (size_t i = 0; i < count; ++i) {
        const bool holds = aplcm_records_holds(records, i) != 0;
        if (holds) ++held;
        const size_t wn = aplcm_records_witness_count(records, i);
        switch (fmt) {
            case Format::Csv: {
                out += aplcm_records_claim(records, i);
                for (const char* name : kParams) {
                    const char* v = aplcm_records_param(records, i, name);
                    out += ",";
                    if (v) out += csv_field(v);
                }
                out += holds ? ",true," : ",false,";
                std::string ws;
                for (size_t j = 0; j < wn; ++j) {
                    if (j) ws += ";";
                    ws += aplcm_records_witness_name(records, i, j);
                    ws += "=";
                    ws += aplcm_records_witness_value(records, i, j);
                }
                out += csv_field(ws);
                out += "\n";
                break;
            }
            case Format::Jsonl: {
                out += "{\"claim\":";
                out += json_str(aplcm_records_claim(records, i));
                out += ",\"params\":{";
                bool first = true;
                for (const char* name : kParams) {
                    const char* v = aplcm_records_param(records, i, name);
                    if (!v) continue;
                    if (!first) out += ",";
                    first = false;
                    out += json_str(name);
                    out += ":";
                    out += json_str(v);
                }
                out += "},\"holds\":";
                out += holds ? "true" : "false";
                out += ",\"witnesses\":{";
                for (size_t j = 0; j < wn; ++j) {
                    if (j) out += ",";
                    out += json_str(aplcm_records_witness_name(records, i, j));
                    out += ":";
                    out += json_str(aplcm_records_witness_value(records, i, j));
                }
                out += "}}\n";
                break;
            }
            case Format::Human: {
                out += aplcm_records_claim(records, i);
                for (const char* name : kParams) {
                    const char* v = aplcm_records_param(records, i, name);
                    if (!v) continue;
                    out += " ";
                    out += name;
                    out += "=";
                    out += v;
                }
                out += holds ? ": holds" : ": FAILS";
                for (size_t j = 0; j < wn; ++j) {
                    out += j ? " " : " | ";
                    out += aplcm_records_witness_name(records, i, j);
                    out += "=";
                    out += aplcm_records_witness_value(records, i, j);
                }
                out += "\n";
                break;
            }
        }
    }
    write_stdout(out);
    std::fprintf(stderr, "checked=%zu holds=%zu failed=%zu\n", count, held, count - held);
    return count == held ? kExitOk : kExitRefuted;
}

// ------------------------------------------------------------------- search

struct SearchArgs {
    uint64_t alpha_max = 10;
    uint64_t r_max = 10;
    std::string probe;
    std::string format = "human";
    std::optional<unsigned> workers;
};

int run_probe(const std::string& text, Format fmt) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    uint64_t alpha = 0, n = 0;
    if (parts.size() != 4 || !natural_literal(parts[0]) || !natural_literal(parts[1]) ||
        !parse_u64(parts[2], alpha) || !parse_u64(parts[3], n)) {
        std::fprintf(stderr, "error: bad --probe '%s' (want u0,r,alpha,n)\n", text.c_str());
        return kExitUsage;
    }
    char* l_raw = nullptr;
    char* b_raw = nullptr;
    int violates = 0, coprime = 0;
    if (aplcm_status st = aplcm_probe(parts[0].c_str(), parts[1].c_str(), alpha, n, &l_raw,
                                      &b_raw, &violates, &coprime);
        st != APLCM_OK)
        return report_error(st);
    CString l(l_raw), b(b_raw);

    std::string out;
    switch (fmt) {
        case Format::Csv:
            out = "u0,r,alpha,n,l_n,bound,violates,coprime\n";
            out += parts[0] + "," + parts[1] + "," + parts[2] + "," + parts[3] + "," +
                   csv_field(l.get()) + "," + csv_field(b.get()) + "," +
                   (violates ? "true" : "false") + "," + (coprime ? "true" : "false") + "\n";
            break;
        case Format::Jsonl:
            out = "{\"u0\":" + json_str(parts[0]) + ",\"r\":" + json_str(parts[1]) +
                  ",\"alpha\":" + json_str(parts[2]) + ",\"n\":" + json_str(parts[3]) +
                  ",\"l_n\":" + json_str(l.get()) + ",\"bound\":" + json_str(b.get()) +
                  ",\"violates\":" + (violates ? "true" : "false") +
                  ",\"coprime\":" + (coprime ? "true" : "false") + "}\n";
            break;
        case Format::Human:
            out = "probe u0=" + parts[0] + " r=" + parts[1] + " alpha=" + parts[2] +
                  " n=" + parts[3] + "\n";
            out += "L_n   = " + std::string(l.get()) + "\n";
            out += "bound = " + std::string(b.get()) + "\n";
            out += violates ? "L_n < bound: bound violated\n" : "L_n >= bound: bound holds\n";
            if (!coprime)
                out += "note: gcd(u0, r) != 1, outside the coprimality hypothesis\n";
            break;
    }
    write_stdout(out);
    return kExitOk;
}

int run_search(const SearchArgs& args) {
    Format fmt;
    if (!parse_format(args.format, fmt)) {
        std::fprintf(stderr, "error: unknown format '%s'\n", args.format.c_str());
        return kExitUsage;
    }
    if (!args.probe.empty()) return run_probe(args.probe, fmt);

    aplcm_search* s = nullptr;
    if (aplcm_status st =
            aplcm_search_run(args.alpha_max, args.r_max, resolve_workers(args.workers), &s);
        st != APLCM_OK)
        return report_error(st);
    std::unique_ptr<aplcm_search, decltype(&aplcm_search_free)> guard(s, &aplcm_search_free);

    const size_t pairs = aplcm_search_tight_pair_count(s);
    const size_t examples = aplcm_search_counterexample_count(s);
    static const char* kFields[6] = {"u0", "r", "alpha", "n", "l_n", "bound"};

    std::string out;
    switch (fmt) {
        case Format::Csv: {
            out = "type,alpha,r,u0,n,l_n,bound\n";
            for (size_t i = 0; i < pairs; ++i) {
                uint64_t alpha = 0, r = 0;
                if (aplcm_status st = aplcm_search_tight_pair(s, i, &alpha, &r); st != APLCM_OK)
                    return report_error(st);
                out += "tight_pair," + std::to_string(alpha) + "," + std::to_string(r) +
                       ",,,,\n";
            }
            for (size_t i = 0; i < examples; ++i) {
                out += "counterexample,";
                out += aplcm_search_counterexample_field(s, i, "alpha");
                out += ",";
                out += aplcm_search_counterexample_field(s, i, "r");
                out += ",";
                out += aplcm_search_counterexample_field(s, i, "u0");
                out += ",";
                out += aplcm_search_counterexample_field(s, i, "n");
                out += ",";
                out += csv_field(aplcm_search_counterexample_field(s, i, "l_n"));
                out += ",";
                out += csv_field(aplcm_search_counterexample_field(s, i, "bound"));
                out += "\n";
            }
            break;
        }
        case Format::Jsonl: {
            for (size_t i = 0; i < pairs; ++i) {
                uint64_t alpha = 0, r = 0;
                if (aplcm_status st = aplcm_search_tight_pair(s, i, &alpha, &r); st != APLCM_OK)
                    return report_error(st);
                out += "{\"type\":\"tight_pair\",\"alpha\":" +
                       json_str(std::to_string(alpha)) + ",\"r\":" +
                       json_str(std::to_string(r)) + "}\n";
            }
            for (size_t i = 0; i < examples; ++i) {
                out += "{\"type\":\"counterexample\"";
                for (const char* f : kFields) {
                    out += ",";
                    out += json_str(f);
                    out += ":";
                    out += json_str(aplcm_search_counterexample_field(s, i, f));
                }
                out += "}\n";
            }
            break;
        }
        case Format::Human: {
            out = "tight pairs (2*alpha*r >= r^alpha + 1, alpha <= " +
                  std::to_string(args.alpha_max) + ", r <= " + std::to_string(args.r_max) +
                  "): " + std::to_string(pairs) + "\n";
            for (size_t i = 0; i < pairs; ++i) {
                uint64_t alpha = 0, r = 0;
                if (aplcm_status st = aplcm_search_tight_pair(s, i, &alpha, &r); st != APLCM_OK)
                    return report_error(st);
                out += "  alpha=" + std::to_string(alpha) + " r=" + std::to_string(r) + "\n";
            }
            out += "counterexamples (L_n < u0*r^alpha*(r+1)^n at n = r^alpha): " +
                   std::to_string(examples) + "\n";
            for (size_t i = 0; i < examples; ++i) {
                out += "  ";
                for (const char* f : kFields) {
                    out += f;
                    out += "=";
                    out += aplcm_search_counterexample_field(s, i, f);
                    out += " ";
                }
                out.back() = '\n';
            }
            break;
        }
    }
    write_stdout(out);
    return kExitOk;
}

// --------------------------------------------------------------------- scan

struct ScanArgs {
    std::string u0, r;
    uint64_t alpha = 0;
    uint64_t a = 2;
    uint64_t n_max = 0;
    std::string format = "csv";
};

int run_scan(const ScanArgs& args) {
    Format fmt;
    if (!parse_format(args.format, fmt)) {
        std::fprintf(stderr, "error: unknown format '%s'\n", args.format.c_str());
        return kExitUsage;
    }
    aplcm_progression* p = nullptr;
    if (aplcm_status st = aplcm_progression_new(args.u0.c_str(), args.r.c_str(), &p);
        st != APLCM_OK)
        return report_error(st);
    std::unique_ptr<aplcm_progression, decltype(&aplcm_progression_free)> pguard(
        p, &aplcm_progression_free);

    aplcm_scan* s = nullptr;
    if (aplcm_status st = aplcm_scan_run(p, args.alpha, args.a, args.n_max, &s); st != APLCM_OK)
        return report_error(st);
    std::unique_ptr<aplcm_scan, decltype(&aplcm_scan_free)> guard(s, &aplcm_scan_free);

    const size_t cols = aplcm_scan_column_count();
    const size_t rows = aplcm_scan_row_count(s);
    std::string out;
    switch (fmt) {
        case Format::Csv: {
            for (size_t c = 0; c < cols; ++c) {
                if (c) out += ",";
                out += aplcm_scan_column_name(c);
            }
            out += "\n";
            for (size_t i = 0; i < rows; ++i) {
                for (size_t c = 0; c < cols; ++c) {
                    if (c) out += ",";
                    out += csv_field(aplcm_scan_cell(s, i, c));
                }
                out += "\n";
            }
            break;
        }
        case Format::Jsonl: {
            for (size_t i = 0; i < rows; ++i) {
                out += "{";
                for (size_t c = 0; c < cols; ++c) {
                    if (c) out += ",";
                    out += json_str(aplcm_scan_column_name(c));
                    out += ":";
                    const std::string cell = aplcm_scan_cell(s, i, c);
                    if (cell == "true" || cell == "false") out += cell;
                    else out += json_str(cell);
                }
                out += "}\n";
            }
            break;
        }
        case Format::Human: {
            for (size_t i = 0; i < rows; ++i) {
                for (size_t c = 0; c < cols; ++c) {
                    if (c) out += " ";
                    out += aplcm_scan_column_name(c);
                    out += "=";
                    out += aplcm_scan_cell(s, i, c);
                }
                out += "\n";
            }
            break;
        }
    }
    write_stdout(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lcm computations and bound checks for arithmetic progressions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(aplcm_version()));

    ComputeArgs compute;
    auto* cmd_compute = app.add_subcommand("compute", "decompose lcm(u_k..u_n) into L, C, A");
    cmd_compute->add_option("--u0", compute.u0, "first term (decimal)")->required();
    cmd_compute->add_option("--r", compute.r, "common difference (decimal)")->required();
    cmd_compute->add_option("--n", compute.n, "last index")->required();
    cmd_compute->add_option("--k", compute.k, "first index (default 0)");
    cmd_compute->add_option("--format", compute.format, "csv, jsonl, or human");

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "check a claim over parameter ranges");
    cmd_verify->add_option("claim", verify.claim, "claim token (see --help-claims)");
    cmd_verify->add_flag("--help-claims", verify.help_claims, "list claim tokens and exit");
    cmd_verify->add_option("--u0", verify.u0, "u0 range, N or LO..HI");
    cmd_verify->add_option("--r", verify.r, "r range");
    cmd_verify->add_option("--n", verify.n, "n range (omit to anchor at the hypothesis edge)");
    cmd_verify->add_option("--alpha", verify.alpha, "alpha range");
    cmd_verify->add_option("--a", verify.a, "a range");
    cmd_verify->add_option("--beta", verify.beta, "beta range");
    cmd_verify->add_option("--n-extra", verify.n_extra, "widen the anchored n window by this much")
        ->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--workers", verify.workers, "worker threads (default: WORKERS env)");
    cmd_verify->add_option("--format", verify.format, "csv, jsonl, or human");

    SearchArgs search;
    auto* cmd_search = app.add_subcommand("search", "hunt for bound violations at tight parameters");
    cmd_search->add_option("--alpha-max", search.alpha_max, "alpha cap (default 10)");
    cmd_search->add_option("--r-max", search.r_max, "r cap (default 10)");
    cmd_search->add_option("--probe", search.probe, "single case u0,r,alpha,n");
    cmd_search->add_option("--workers", search.workers, "worker threads (default: WORKERS env)");
    cmd_search->add_option("--format", search.format, "csv, jsonl, or human");

    ScanArgs scan;
    auto* cmd_scan = app.add_subcommand("scan", "tabulate lcm growth against the bounds");
    cmd_scan->add_option("--u0", scan.u0, "first term (decimal)")->required();
    cmd_scan->add_option("--r", scan.r, "common difference (decimal)")->required();
    cmd_scan->add_option("--alpha", scan.alpha, "alpha for both bounds")->required();
    cmd_scan->add_option("--a", scan.a, "a for the sharpened bound (default 2)");
    cmd_scan->add_option("--n-max", scan.n_max, "scan n = 1..n_max")->required();
    cmd_scan->add_option("--format", scan.format, "csv, jsonl, or human");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    verify.n_extra_set = cmd_verify->count("--n-extra") > 0;

    if (cmd_compute->parsed()) {
        if (!natural_literal(compute.u0) || !natural_literal(compute.r)) {
            std::fprintf(stderr, "error: --u0 and --r must be decimal naturals\n");
            return kExitUsage;
        }
        return run_compute(compute);
    }
    if (cmd_verify->parsed()) return run_verify(verify);
    if (cmd_search->parsed()) return run_search(search);
    if (cmd_scan->parsed()) {
        if (!natural_literal(scan.u0) || !natural_literal(scan.r)) {
            std::fprintf(stderr, "error: --u0 and --r must be decimal naturals\n");
            return kExitUsage;
        }
        return run_scan(scan);
    }
    return kExitUsage;
}
