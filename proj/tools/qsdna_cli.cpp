// Command-line surface: census, qsd build, wenum, drc, tables, verify.
// Exit codes: 0 pass, 1 mismatch/failure, 2 usage, 3 budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qsdna/golden.hpp"
#include "qsdna/json_io.hpp"
#include "qsdna/verify.hpp"

using namespace qsdna;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
    auto parse_int = [](const std::string& s) {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw UsageError("bad range '" + s + "'");
        return v;
    };
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = parse_int(text);
            return {v, v};
        }
        return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("bad range '" + text + "'");
    }
}

BinaryCode load_residue(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_ascii(text);
}

RingId ring_from_flag(const std::string& name) {
    if (name == "E") return RingId::E;
    if (name == "F") return RingId::F;
    throw UsageError("--ring must be E or F");
}

std::string drc_text(const std::map<int, RcProfile>& profile, int skip_m = -1) {
    std::string out;
    for (const auto& [m, p] : profile) {
        if (m == skip_m) continue;
        if (!out.empty()) out += ';';
        out += std::to_string(m) + "=" + std::to_string(p.d_rc);
    }
    return out;
}

std::string gen_matrix_text(const QsdCode& c) {
    const Ring4& r = ring(c.ring);
    std::string out;
    for (const RingWord& row : generator_matrix(c)) {
        if (!out.empty()) out += '|';
        out += symbol_row_to_string(r, row);
    }
    return out;
}

// ---- census ----

struct CensusArgs {
    std::string n_range = "1..10";
    int k = -1;
    bool list = false;
    bool check = false;
    std::string format = "csv";
    double budget_s = 0;
    int max_n = 0;
    int jobs = default_jobs();
};

int cmd_census(const CensusArgs& args) {
    auto [n_lo, n_hi] = parse_range(args.n_range);
    if (n_lo < 1 || n_hi < n_lo) throw UsageError("bad --n range");
    CensusOptions opts;
    opts.jobs = args.jobs;
    opts.max_n = args.max_n > 0 ? args.max_n : (args.budget_s > 0 ? 15 : 12);
    if (args.budget_s > 0)
        opts.budget = std::chrono::milliseconds(static_cast<long>(args.budget_s * 1000));
    SoCensus census(opts);

    nlohmann::json jout = nlohmann::json::array();
    if (args.format == "csv") std::cout << "n,k,count\n";
    for (int n = n_lo; n <= n_hi; ++n) {
        int k_lo = args.k >= 0 ? args.k : 0;
        int k_hi = args.k >= 0 ? args.k : n / 2;
        for (int k = k_lo; k <= k_hi; ++k) {
            const CensusEntry& e = census.entry(n, k);
            if (args.format == "json") {
                nlohmann::json cell{{"n", n}, {"k", k}, {"count", e.count()}};
                if (args.list) {
                    nlohmann::json reps = nlohmann::json::array();
                    for (const BinaryCode& rep : e.representatives)
                        reps.push_back(detail::residue_text(rep));
                    cell["representatives"] = reps;
                }
                jout.push_back(cell);
            } else if (args.format == "csv") {
                std::cout << n << ',' << k << ',' << e.count() << '\n';
                if (args.list)
                    for (const BinaryCode& rep : e.representatives)
                        std::cout << "# " << detail::residue_text(rep) << '\n';
            } else {
                std::cout << "[" << n << "," << k << "] " << e.count() << "\n";
                if (args.list)
                    for (const BinaryCode& rep : e.representatives)
                        std::cout << to_ascii(rep) << '\n';
            }
        }
    }
    if (args.format == "json") std::cout << jout.dump(2) << '\n';

    if (args.check) {
        auto golden = load_psi_golden(default_data_dir() + "/psi.csv");
        std::map<std::pair<int, int>, uint64_t> in_range;
        for (const auto& [cell, count] : golden)
            if (cell.first >= n_lo && cell.first <= n_hi &&
                (args.k < 0 || cell.second == args.k))
                in_range[cell] = count;
        auto mismatches = check_psi_golden(in_range, n_hi, census);
        for (const std::string& m : mismatches) std::cerr << "MISMATCH " << m << '\n';
        if (!mismatches.empty()) return kExitMismatch;
        std::cerr << "census check: " << in_range.size() << " cells match\n";
    }
    return kExitOk;
}

// ---- qsd build ----

int cmd_qsd_build(const std::string& ring_name, const std::string& res_path, bool as_json) {
    RingId rid = ring_from_flag(ring_name);
    BinaryCode res = load_residue(res_path);
    QsdCode c = build_qsd(rid, res);
    bool verified = false;
    if (c.n <= 10) verified = is_qsd(ring(rid), c);
    if (as_json) {
        nlohmann::json j;
        j["ring"] = ring_name;
        j["n"] = c.n;
        j["k1"] = c.k1();
        j["residue"] = detail::residue_text(c.res);
        j["torsion"] = detail::residue_text(c.tor);
        j["generator_matrix"] = gen_matrix_text(c);
        j["size_log2"] = c.n;
        if (c.n <= 10) j["qsd_verified"] = verified;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "ring " << ring_name << ", n = " << c.n << ", k1 = " << c.k1() << "\n";
        std::cout << "residue:\n" << to_ascii(c.res);
        std::cout << "torsion:\n" << to_ascii(c.tor);
        std::cout << "generator matrix:\n" << generator_matrix_to_string(c);
        std::cout << "|C| = " << (uint64_t{1} << c.n);
        if (c.n <= 10) std::cout << (verified ? " (QSD verified)" : " (QSD CHECK FAILED)");
        std::cout << '\n';
    }
    if (c.n <= 10 && !verified) return kExitMismatch;
    return kExitOk;
}

// ---- wenum ----

int cmd_wenum(const std::string& ring_name, const std::string& res_path, bool gc, bool joint,
              bool as_json) {
    RingId rid = ring_from_flag(ring_name);
    BinaryCode res = load_residue(res_path);
    QsdCode c = build_qsd(rid, res);
    WeightEnumerator we;
    if (gc) {
        we = gcw_direct(c);
        if (we != gcw_closed_form(c.res, c.n)) {
            std::cerr << "internal error: closed-form GCW differs from enumeration\n";
            return kExitMismatch;
        }
    } else if (joint) {
        we = joint_weight_enumerator(c.res, c.tor);
    } else {
        we = cwe(c);
    }
    if (as_json)
        std::cout << enumerator_to_json(we).dump(2) << '\n';
    else
        std::cout << to_string(we) << '\n';
    return kExitOk;
}

// ---- drc ----

struct DrcArgs {
    std::string res_path;
    int n = 0;
    int k = -1;
    int m = -1;
    bool exact = false;
    bool formula = false;
    bool both = false;
    bool as_json = false;
    int jobs = default_jobs();
};

int cmd_drc(const DrcArgs& args) {
    bool do_exact = args.exact || args.both || !args.formula;
    bool do_formula = args.formula || args.both;

    std::vector<BinaryCode> residues;
    if (!args.res_path.empty()) {
        residues.push_back(load_residue(args.res_path));
    } else if (args.n > 0) {
        SoCensus census;
        int k_lo = args.k >= 0 ? args.k : 0;
        int k_hi = args.k >= 0 ? args.k : args.n / 2;
        for (int k = k_lo; k <= k_hi; ++k)
            for (const BinaryCode& rep : census.entry(args.n, k).representatives)
                residues.push_back(rep);
    } else {
        throw UsageError("drc needs --res FILE or --n N");
    }

    nlohmann::json jout = nlohmann::json::array();
    if (!args.as_json) std::cout << "n,k,residue,m,d_exact,d_formula\n";
    for (const BinaryCode& res : residues) {
        QsdCode c = build_qsd(RingId::E, res);
        std::optional<std::map<int, int>> formula =
            do_formula ? d_rc_formula_for(res) : std::nullopt;
        std::vector<uint64_t> dist = res.weight_distribution();
        for (int m = 0; m <= c.n; ++m) {
            if (args.m >= 0 && m != args.m) continue;
            if (args.m < 0 && !dist[m]) continue;
            std::optional<RcProfile> exact;
            if (do_exact) exact = d_rc_exact(c, m, args.jobs);
            std::optional<int> fval;
            if (formula && formula->count(m)) fval = formula->at(m);
            if (args.as_json) {
                nlohmann::json j;
                j["n"] = c.n;
                j["k1"] = c.k1();
                j["residue"] = detail::residue_text(res);
                j["m"] = m;
                if (exact) {
                    nlohmann::json je = rc_profile_to_json(*exact);
                    for (auto& [key, val] : je.items()) j[key] = val;
                } else if (do_exact) {
                    j["d_rc"] = nullptr;  // empty subcode: undefined, not 0
                }
                if (fval) j["d_formula"] = *fval;
                jout.push_back(j);
            } else {
                std::cout << c.n << ',' << c.k1() << ',' << detail::residue_text(res) << ',' << m
                          << ',';
                if (do_exact)
                    std::cout << (exact ? std::to_string(exact->d_rc) : "undefined");
                std::cout << ',';
                if (fval) std::cout << *fval;
                std::cout << '\n';
            }
        }
    }
    if (args.as_json) std::cout << jout.dump(2) << '\n';
    return kExitOk;
}

// ---- tables ----

int cmd_tables(int n_max, bool check, const std::string& out_path, int jobs) {
    std::ostringstream out;
    out << "n,k1,residue,generator_matrix,d_rc\n";
    SoCensus census;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            for (const BinaryCode& rep : census.entry(n, k).representatives) {
                QsdCode c = build_qsd(RingId::E, rep);
                // the published layout lists d^0 only on the zero-residue row
                out << n << ',' << k << ',' << detail::residue_text(rep) << ','
                    << gen_matrix_text(c) << ','
                    << drc_text(d_rc_profile(c, jobs), k >= 1 ? 0 : -1) << '\n';
            }
    if (out_path.empty())
        std::cout << out.str();
    else {
        std::ofstream f(out_path);
        f << out.str();
        std::cerr << "wrote " << out_path << '\n';
    }

    if (check) {
        auto golden = load_drc_golden(default_data_dir() + "/drc.csv");
        TableCheckReport rep = check_drc_golden(golden, n_max, jobs);
        std::cerr << "table check: " << rep.values_matched << "/" << rep.values_checked
                  << " printed values match the exact search\n";
        if (!rep.discrepancies.empty()) {
            std::cerr << "discrepancy report (search is authoritative):\n";
            std::cerr << "source,n,k,residue,m,printed,exact,witness\n";
            for (const Discrepancy& d : rep.discrepancies) std::cerr << d.to_csv() << '\n';
        }
        for (const std::string& missing : rep.missing_from_table)
            std::cerr << "not in printed table: " << missing << '\n';
    }
    return kExitOk;
}

// ---- verify ----

int cmd_verify(int n_max, int jobs) {
    VerifyReport all;
    for (VerifyReport rep : {run_identity_suites(n_max, jobs), run_formula_matrix(n_max, jobs),
                             run_reduction_soundness(std::min(n_max, 6)),
                             run_weight2_bijection(std::min(n_max + 2, 10))}) {
        for (auto& c : rep.checks) all.checks.push_back(std::move(c));
        for (auto& d : rep.discrepancies) all.discrepancies.push_back(std::move(d));
    }
    std::cout << "check,status,detail\n";
    for (const CheckResult& c : all.checks)
        std::cout << c.name << ',' << (c.pass ? "pass" : "FAIL") << ',' << c.detail << '\n';
    if (!all.discrepancies.empty()) {
        std::cout << "# formula-vs-search discrepancies (search is authoritative)\n";
        std::cout << "# source,n,k,residue,m,formula,exact,witness\n";
        for (const Discrepancy& d : all.discrepancies) std::cout << "# " << d.to_csv() << '\n';
    }
    return all.all_pass() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-self-dual DNA codes over the order-4 rings E and F"};
    app.require_subcommand(1);

    CensusArgs census_args;
    CLI::App* census = app.add_subcommand("census", "count self-orthogonal code classes");
    census->add_option("--n", census_args.n_range, "length or range, e.g. 8 or 1..10");
    census->add_option("--k", census_args.k, "residue dimension (default: all)");
    census->add_flag("--list", census_args.list, "print representative matrices");
    census->add_flag("--check", census_args.check, "compare against the golden table");
    census->add_option("--format", census_args.format, "csv|json|text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    census->add_option("--budget", census_args.budget_s, "time budget in seconds (enables n up to 15)");
    census->add_option("--max-n", census_args.max_n, "override the length cap");
    census->add_option("--jobs", census_args.jobs, "worker threads");

    CLI::App* qsd = app.add_subcommand("qsd", "QSD code construction");
    qsd->require_subcommand(1);
    std::string build_ring = "E", build_res;
    bool build_json = false;
    CLI::App* build = qsd->add_subcommand("build", "build a QSD code from a residue matrix");
    build->add_option("--ring", build_ring, "E or F");
    build->add_option("--res", build_res, "file of 0/1 generator rows")->required();
    build->add_flag("--json", build_json, "JSON output");

    std::string wenum_ring = "E", wenum_res;
    bool wenum_gc = false, wenum_joint = false, wenum_json = false;
    CLI::App* wenum = app.add_subcommand("wenum", "weight enumerators");
    wenum->add_option("--ring", wenum_ring, "E or F");
    wenum->add_option("--res", wenum_res, "file of 0/1 generator rows")->required();
    wenum->add_flag("--gc", wenum_gc, "GC weight enumerator");
    wenum->add_flag("--joint", wenum_joint, "joint enumerator of (residue, torsion)");
    wenum->add_flag("--json", wenum_json, "JSON output");

    DrcArgs drc_args;
    CLI::App* drc = app.add_subcommand("drc", "reverse-complement distances");
    drc->add_option("--res", drc_args.res_path, "residue matrix file");
    drc->add_option("--n", drc_args.n, "length (census mode)");
    drc->add_option("--k", drc_args.k, "residue dimension (census mode)");
    drc->add_option("--m", drc_args.m, "single GC-content value");
    drc->add_flag("--exact", drc_args.exact, "exhaustive search (default)");
    drc->add_flag("--formula", drc_args.formula, "closed forms only");
    drc->add_flag("--both", drc_args.both, "search and closed forms");
    drc->add_flag("--json", drc_args.as_json, "JSON output with witness pairings");
    drc->add_option("--jobs", drc_args.jobs, "worker threads");

    int tables_n_max = 8, tables_jobs = default_jobs();
    bool tables_check = false;
    std::string tables_out;
    CLI::App* tables = app.add_subcommand("tables", "regenerate the published tables");
    tables->add_option("--n-max", tables_n_max, "largest length (default 8)");
    tables->add_flag("--check", tables_check, "diff against the golden tables");
    tables->add_option("--out", tables_out, "write CSV here instead of stdout");
    tables->add_option("--jobs", tables_jobs, "worker threads");

    int verify_n_max = 8, verify_jobs = default_jobs();
    CLI::App* verify = app.add_subcommand("verify", "run the identity and closed-form property suites");
    verify->add_option("--n-max", verify_n_max, "largest length (default 8)");
    verify->add_option("--jobs", verify_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (census->parsed()) return cmd_census(census_args);
        if (build->parsed()) return cmd_qsd_build(build_ring, build_res, build_json);
        if (wenum->parsed()) return cmd_wenum(wenum_ring, wenum_res, wenum_gc, wenum_joint, wenum_json);
        if (drc->parsed()) return cmd_drc(drc_args);
        if (tables->parsed()) return cmd_tables(tables_n_max, tables_check, tables_out, tables_jobs);
        if (verify->parsed()) return cmd_verify(verify_n_max, verify_jobs);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
