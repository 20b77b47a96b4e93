#include "polyrank/bounds.hpp"
#include "polyrank/boolfact.hpp"
#include "polyrank/cyclesearch.hpp"
#include "polyrank/psdmin.hpp"
#include "polyrank/slack.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace polyrank;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAborted = 3;

struct Manifest {
    std::string subcommand;
    json parameters = json::object();
    std::vector<std::string> verdicts;
    std::vector<std::string> certificate_files;
    double wall_time_s = 0;

    json dump() const {
        return json{{"subcommand", subcommand}, {"parameters", parameters},
                    {"tool_version", kVersion},  {"wall_time_s", wall_time_s},
                    {"verdicts", verdicts},      {"certificate_files", certificate_files}};
    }
};

Manifest g_manifest;
std::string g_manifest_path;

uint64_t default_budget() {
    if (const char* env = std::getenv("POLYRANK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed POLYRANK_BUDGET\n";
    }
    return SearchLimits{}.node_budget;
}

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Found: return "found";
        case Verdict::ExhaustedNone: return "exhausted_none";
        default: return "aborted";
    }
}

// Writes a factorization certificate, re-verifying it first so emitted files
// always round-trip through the verifier.
void emit_certificate(const BoolFact& f, const std::string& path) {
    if (!verify_boolean(f, true).empty())
        throw std::runtime_error("refusing to emit a certificate that fails verification");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << to_json(f) << "\n";
    g_manifest.certificate_files.push_back(path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json bound_report_json(const BoundReport& r) {
    return json{{"n", r.n.get_str()},          {"s", r.s_bound}, {"s_plus", r.s_plus_bound},
                {"t", r.t_bound},              {"witness_k", r.witness_k},
                {"witness_d", r.witness_dim}};
}

int cmd_bounds(const std::string& n_str, bool all, bool asymptotic,
               const std::string& powers, const std::string& format) {
    if (asymptotic) {
        unsigned lo = 10, hi = 20;
        if (!powers.empty()) {
            auto dots = powers.find("..");
            if (dots == std::string::npos) throw CLI::ValidationError("--powers expects A..B");
            lo = (unsigned)std::stoul(powers.substr(0, dots));
            hi = (unsigned)std::stoul(powers.substr(dots + 2));
        }
        std::vector<Int> ns;
        for (unsigned p = lo; p <= hi; p += 2) {
            Int n = 1;
            n <<= p;
            ns.push_back(n);
        }
        auto rows = asymptotic_report(ns);
        if (format == "json") {
            json out = json::array();
            for (auto& r : rows)
                out.push_back({{"n", r.n.get_str()}, {"t", r.t}, {"ratio", r.ratio}});
            std::cout << out.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "n,t,ratio\n";
            for (auto& r : rows)
                std::cout << r.n.get_str() << "," << r.t << "," << r.ratio << "\n";
        } else {
            std::cout << "| n | T(n) | T(n)/log2(n) |\n|---|---|---|\n";
            for (auto& r : rows)
                std::cout << "| 2^" << mpz_sizeinbase(r.n.get_mpz_t(), 2) - 1 << " | " << r.t
                          << " | " << r.ratio << " |\n";
        }
        g_manifest.verdicts.push_back("asymptotic table computed");
        return kExitOk;
    }

    Int n(n_str);
    BoundReport r = bound_report(n);
    if (format == "json") {
        json out = bound_report_json(r);
        if (all) {
            out["s_max_facets_at_witness_k"] = s_max_facets(r.t_bound).count.get_str();
            out["m1_at_witness_k"] = m1(r.t_bound);
            out["m2_at_witness_k"] = m2(r.t_bound);
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,s,s_plus,t,witness_k,witness_d\n"
                  << n.get_str() << "," << r.s_bound << "," << r.s_plus_bound << ","
                  << r.t_bound << "," << r.witness_k << "," << r.witness_dim << "\n";
    } else {
        std::cout << "n        " << n.get_str() << "\n"
                  << "S(n)     " << r.s_bound << "\n"
                  << "S+(n)    " << r.s_plus_bound << "\n"
                  << "T(n)     " << r.t_bound << "  (facet max at k=" << r.witness_k
                  << ", d=" << r.witness_dim << ")\n";
    }
    g_manifest.verdicts.push_back("bounds computed");
    return kExitOk;
}

int cmd_slack(unsigned n, bool exact, bool symbolic, bool normalized,
              const std::string& format) {
    if (symbolic) {
        SymbolicSlack s = symbolic_slack(n, normalized);
        if (format == "csv") {
            for (unsigned i = 0; i < n; ++i) {
                for (unsigned j = 0; j < n; ++j)
                    std::cout << (j ? "," : "") << sym_entry_str(s.entries(i, j));
                std::cout << "\n";
            }
        } else {
            json rows = json::array();
            for (unsigned i = 0; i < n; ++i) {
                json row = json::array();
                for (unsigned j = 0; j < n; ++j) row.push_back(sym_entry_str(s.entries(i, j)));
                rows.push_back(row);
            }
            std::cout << json{{"n", n}, {"normalized", normalized},
                              {"var_count", s.var_count}, {"entries", rows}}
                             .dump(2)
                      << "\n";
        }
        return kExitOk;
    }
    if (exact) {
        ExactSlack s = regular_gon_slack_exact(n);
        if (format == "csv") {
            for (unsigned i = 0; i < n; ++i) {
                for (unsigned j = 0; j < n; ++j)
                    std::cout << (j ? "," : "") << s.entries(i, j).str();
                std::cout << "\n";
            }
        } else {
            json rows = json::array();
            for (unsigned i = 0; i < n; ++i) {
                json row = json::array();
                for (unsigned j = 0; j < n; ++j) row.push_back(s.entries(i, j).str());
                rows.push_back(row);
            }
            std::cout << json{{"n", n}, {"mode", "exact"}, {"entries", rows}}.dump(2) << "\n";
        }
        return kExitOk;
    }
    FloatSlack s = regular_gon_slack_float(n);
    if (format == "csv") {
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) std::cout << (j ? "," : "") << s.entries(i, j);
            std::cout << "\n";
        }
    } else {
        json rows = json::array();
        for (unsigned i = 0; i < n; ++i) {
            json row = json::array();
            for (unsigned j = 0; j < n; ++j) row.push_back(s.entries(i, j));
            rows.push_back(row);
        }
        std::cout << json{{"n", n}, {"mode", "float"}, {"entries", rows}}.dump(2) << "\n";
    }
    return kExitOk;
}

json outcome_json(const SearchOutcome& o) {
    json j{{"k", o.k}, {"n", o.n}, {"verdict", verdict_str(o.verdict)},
           {"nodes", o.nodes}, {"seconds", o.seconds}};
    if (o.cycle) {
        json verts = json::array();
        for (Subset v : o.cycle->vertices) verts.push_back(subset_str(v, o.cycle->k));
        j["cycle"] = verts;
    }
    return j;
}

int cmd_cycles(unsigned k, unsigned n, const std::string& emit, int jobs, uint64_t budget) {
    SearchLimits lim;
    lim.node_budget = budget;
    lim.jobs = jobs;
    SearchOutcome o = find_cycle(k, n, lim);
    std::cout << outcome_json(o).dump(2) << "\n";
    g_manifest.verdicts.push_back(std::string("cycles k=") + std::to_string(k) + " n=" +
                                  std::to_string(n) + ": " + verdict_str(o.verdict));
    if (o.verdict == Verdict::Found && !emit.empty())
        emit_certificate(cycle_to_factorization(*o.cycle), emit);
    return o.verdict == Verdict::Aborted ? kExitAborted : kExitOk;
}

json rank_json(const RankResult& r) {
    json j{{"n", r.n}, {"lower", r.lower}, {"exact", r.exact}};
    if (r.upper) j["rank_upper"] = r.upper;
    if (r.exact) j["rank"] = r.upper;
    json trace = json::array();
    for (const auto& o : r.trace) trace.push_back(outcome_json(o));
    j["trace"] = trace;
    return j;
}

int cmd_boolrank(unsigned n, unsigned kmax, const std::string& emit, int jobs,
                 uint64_t budget) {
    SearchLimits lim;
    lim.node_budget = budget;
    lim.jobs = jobs;
    RankResult r = hom_boolean_rank(n, kmax, lim);
    std::cout << rank_json(r).dump(2) << "\n";
    std::string verdict = "boolrank n=" + std::to_string(n) + ": " +
                          (r.exact ? "rank " + std::to_string(r.upper)
                                   : "bounds [" + std::to_string(r.lower) + ", " +
                                         (r.upper ? std::to_string(r.upper) : "?") + "]");
    g_manifest.verdicts.push_back(verdict);
    if (r.certificate && !emit.empty())
        emit_certificate(cycle_to_factorization(*r.certificate), emit);
    bool aborted = false;
    for (const auto& o : r.trace) aborted |= o.verdict == Verdict::Aborted;
    return aborted && !r.exact ? kExitAborted : kExitOk;
}

int cmd_table1(unsigned kmax, int jobs, uint64_t budget, const std::string& outdir) {
    SearchLimits lim;
    lim.node_budget = budget;
    lim.jobs = jobs;
    if (!outdir.empty()) std::filesystem::create_directories(outdir);

    struct Row {
        unsigned n;
        RankResult r;
    };
    std::vector<Row> rows;
    bool any_abort = false;
    for (unsigned n = 3;; ++n) {
        RankResult r = hom_boolean_rank(n, kmax, lim);
        for (const auto& o : r.trace) any_abort |= o.verdict == Verdict::Aborted;
        if (!r.upper) break; // rank exceeds kmax: the table ends here
        if (r.certificate && !outdir.empty())
            emit_certificate(cycle_to_factorization(*r.certificate),
                             outdir + "/cert_n" + std::to_string(n) + "_k" +
                                 std::to_string(r.upper) + ".json");
        rows.push_back({n, std::move(r)});
    }

    auto label = [](const RankResult& r) {
        return std::to_string(r.upper) + (r.exact ? "" : "*");
    };
    std::cout << "| n | hom. boolean rank |\n|---|---|\n";
    for (size_t i = 0; i < rows.size();) {
        size_t j = i;
        while (j + 1 < rows.size() && label(rows[j + 1].r) == label(rows[i].r)) ++j;
        std::string range = std::to_string(rows[i].n);
        if (j > i) range += "-" + std::to_string(rows[j].n);
        std::cout << "| " << range << " | " << label(rows[i].r) << " |\n";
        g_manifest.verdicts.push_back("n=" + range + " -> " + label(rows[i].r));
        i = j + 1;
    }
    if (!rows.empty())
        std::cout << "\n(next length " << rows.back().n + 1 << " needs k > " << kmax
                  << (any_abort ? "; some searches aborted, starred entries are upper bounds"
                                : ", all nonexistence results exhaustive")
                  << ")\n";
    return any_abort ? kExitAborted : kExitOk;
}

int cmd_verify_bool(const std::string& cert, bool homogeneous) {
    BoolFact f = boolfact_from_json(read_file(cert));
    auto violations = verify_boolean(f, homogeneous);
    if (violations.empty()) {
        std::cout << "valid" << (homogeneous ? " homogeneous" : "") << " factorization: n="
                  << f.n << " k=" << f.k << "\n";
        g_manifest.verdicts.push_back("valid");
        return kExitOk;
    }
    std::cout << violations.size() << " violation(s):\n";
    for (const auto& v : violations) {
        std::cout << "  [" << v.kind << "]";
        if (v.i >= 0) std::cout << " i=" << v.i;
        if (v.j >= 0) std::cout << " j=" << v.j;
        std::cout << " " << v.detail << "\n";
    }
    g_manifest.verdicts.push_back("invalid");
    return kExitInvalid;
}

int cmd_verify_psd(unsigned n, const std::string& cert_spec) {
    GaussCert cert;
    if (cert_spec == "builtin") {
        if (n != 6) throw CLI::ValidationError("builtin certificate exists only for --n 6");
        cert = builtin_hexagon_certificate();
    } else {
        cert = gausscert_from_json(read_file(cert_spec));
    }
    ExactSlack slack = regular_gon_slack_exact(n);
    auto violations = verify_hadamard_certificate(cert, slack);
    if (violations.empty()) {
        std::cout << "valid: |M|^2 matches the slack entrywise and rank(M) = "
                  << cert.claimed_rank << " exactly\n";
        g_manifest.verdicts.push_back("valid");
        return kExitOk;
    }
    std::cout << violations.size() << " violation(s):\n";
    for (const auto& v : violations) {
        std::cout << "  " << v.what;
        if (v.i >= 0) std::cout << " at (" << v.i << "," << v.j << ")";
        std::cout << "\n";
    }
    g_manifest.verdicts.push_back("invalid");
    return kExitInvalid;
}

int cmd_psd_obstruct(unsigned n) {
    MinimalityReport rep = psd_minimality_report(n);
    for (const auto& line : rep.derivation) std::cout << line << "\n";
    const char* verdict = rep.verdict == MinimalityReport::Minimal     ? "minimal"
                          : rep.verdict == MinimalityReport::NotMinimal ? "not_minimal"
                                                                        : "inconclusive";
    std::cout << "verdict: " << verdict << "\n";
    for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
    g_manifest.verdicts.push_back(verdict);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lower bounds, boolean factorizations and psd-minimality "
                 "certificates for polygon slack matrices"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.add_option("--manifest", g_manifest_path, "write a run manifest JSON to this path");

    uint64_t budget = default_budget();
    int jobs = 1;

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "lower bounds S, S+, T for an n-gon");
    std::string bounds_n, powers, bounds_format = "json";
    bool bounds_all = false, asymptotic = false;
    bounds_cmd->add_option("--n", bounds_n, "number of polygon vertices");
    bounds_cmd->add_flag("--all", bounds_all, "include facet-count details");
    bounds_cmd->add_flag("--asymptotic", asymptotic, "T(n)/log2(n) along powers of two");
    bounds_cmd->add_option("--powers", powers, "exponent range A..B for --asymptotic");
    bounds_cmd->add_option("--format", bounds_format, "json|csv|md|text");

    // slack
    auto* slack_cmd = app.add_subcommand("slack", "slack matrices of regular n-gons");
    unsigned slack_n = 0;
    bool slack_exact = false, slack_symbolic = false, slack_normalized = false;
    std::string slack_format = "json";
    slack_cmd->add_option("--n", slack_n, "number of vertices")->required();
    slack_cmd->add_flag("--exact", slack_exact, "exact entries (n in {3,4,5,6})");
    slack_cmd->add_flag("--symbolic", slack_symbolic, "symbolic slack matrix");
    slack_cmd->add_flag("--normalized", slack_normalized, "scale a spanning set of entries to 1");
    slack_cmd->add_option("--format", slack_format, "json|csv");

    // cycles
    auto* cycles_cmd = app.add_subcommand("cycles", "search a factorizing cycle in J(k, floor(k/2))");
    unsigned cy_k = 0, cy_n = 0;
    std::string cy_emit;
    cycles_cmd->add_option("--k", cy_k, "ground set size")->required();
    cycles_cmd->add_option("--n", cy_n, "cycle length")->required();
    cycles_cmd->add_option("--emit", cy_emit, "write the certificate JSON here");
    cycles_cmd->add_option("--jobs", jobs, "parallel subtree workers");
    cycles_cmd->add_option("--budget", budget, "node budget");

    // boolrank
    auto* rank_cmd = app.add_subcommand("boolrank", "homogeneous boolean rank of the n-gon");
    unsigned br_n = 0, br_kmax = 10;
    std::string br_emit;
    rank_cmd->add_option("--n", br_n, "number of vertices")->required();
    rank_cmd->add_option("--kmax", br_kmax, "largest k to try");
    rank_cmd->add_option("--emit", br_emit, "write the certificate JSON here");
    rank_cmd->add_option("--jobs", jobs, "parallel subtree workers");
    rank_cmd->add_option("--budget", budget, "node budget");

    // table1
    auto* table_cmd = app.add_subcommand("table1", "homogeneous boolean ranks while they stay <= kmax");
    unsigned t_kmax = 8;
    std::string t_out;
    table_cmd->add_option("--kmax", t_kmax, "largest k to certify");
    table_cmd->add_option("--out", t_out, "directory for certificates");
    table_cmd->add_option("--jobs", jobs, "parallel subtree workers");
    table_cmd->add_option("--budget", budget, "node budget per search");

    // verify bool|psd
    auto* verify_cmd = app.add_subcommand("verify", "re-check emitted certificates");
    verify_cmd->require_subcommand(1);
    auto* vb = verify_cmd->add_subcommand("bool", "boolean factorization certificate");
    std::string vb_cert;
    bool vb_hom = false;
    vb->add_option("--cert", vb_cert, "certificate JSON file")->required();
    vb->add_flag("--homogeneous", vb_hom, "also check homogeneous row weights");
    auto* vp = verify_cmd->add_subcommand("psd", "Hadamard square root certificate");
    unsigned vp_n = 6;
    std::string vp_cert = "builtin";
    vp->add_option("--n", vp_n, "polygon size");
    vp->add_option("--cert", vp_cert, "certificate JSON file or 'builtin'");

    // psd obstruct|verify-cert
    auto* psd_cmd = app.add_subcommand("psd", "complex psd minimality lab");
    psd_cmd->require_subcommand(1);
    auto* po = psd_cmd->add_subcommand("obstruct", "trinomial obstruction scan");
    unsigned po_n = 5;
    po->add_option("--n", po_n, "polygon size (scan practical for n <= 8)");
    auto* pv = psd_cmd->add_subcommand("verify-cert", "same as 'verify psd'");
    unsigned pv_n = 6;
    std::string pv_cert = "builtin";
    pv->add_option("--n", pv_n, "polygon size");
    pv->add_option("--cert", pv_cert, "certificate JSON file or 'builtin'");

    auto t0 = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    int rc = kExitUsage;
    try {
        if (bounds_cmd->parsed()) {
            if (!asymptotic && bounds_n.empty())
                throw CLI::ValidationError("bounds: need --n or --asymptotic");
            g_manifest.subcommand = "bounds";
            g_manifest.parameters = {{"n", bounds_n}, {"asymptotic", asymptotic}};
            rc = cmd_bounds(bounds_n, bounds_all, asymptotic, powers, bounds_format);
        } else if (slack_cmd->parsed()) {
            g_manifest.subcommand = "slack";
            g_manifest.parameters = {{"n", slack_n}, {"exact", slack_exact},
                                     {"symbolic", slack_symbolic}, {"normalized", slack_normalized}};
            rc = cmd_slack(slack_n, slack_exact, slack_symbolic, slack_normalized, slack_format);
        } else if (cycles_cmd->parsed()) {
            g_manifest.subcommand = "cycles";
            g_manifest.parameters = {{"k", cy_k}, {"n", cy_n}, {"jobs", jobs}, {"budget", budget}};
            rc = cmd_cycles(cy_k, cy_n, cy_emit, jobs, budget);
        } else if (rank_cmd->parsed()) {
            g_manifest.subcommand = "boolrank";
            g_manifest.parameters = {{"n", br_n}, {"kmax", br_kmax}, {"jobs", jobs}, {"budget", budget}};
            rc = cmd_boolrank(br_n, br_kmax, br_emit, jobs, budget);
        } else if (table_cmd->parsed()) {
            g_manifest.subcommand = "table1";
            g_manifest.parameters = {{"kmax", t_kmax}, {"jobs", jobs}, {"budget", budget}};
            rc = cmd_table1(t_kmax, jobs, budget, t_out);
        } else if (verify_cmd->parsed()) {
            if (vb->parsed()) {
                g_manifest.subcommand = "verify bool";
                g_manifest.parameters = {{"cert", vb_cert}, {"homogeneous", vb_hom}};
                rc = cmd_verify_bool(vb_cert, vb_hom);
            } else {
                g_manifest.subcommand = "verify psd";
                g_manifest.parameters = {{"n", vp_n}, {"cert", vp_cert}};
                rc = cmd_verify_psd(vp_n, vp_cert);
            }
        } else if (psd_cmd->parsed()) {
            if (po->parsed()) {
                g_manifest.subcommand = "psd obstruct";
                g_manifest.parameters = {{"n", po_n}};
                rc = cmd_psd_obstruct(po_n);
            } else {
                g_manifest.subcommand = "psd verify-cert";
                g_manifest.parameters = {{"n", pv_n}, {"cert", pv_cert}};
                rc = cmd_verify_psd(pv_n, pv_cert);
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    g_manifest.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!g_manifest_path.empty()) {
        std::ofstream out(g_manifest_path);
        out << g_manifest.dump().dump(2) << "\n";
    }
    return rc;
}
