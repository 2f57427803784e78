#include "frobstab/cli.hpp"

#include <fstream>
#include <functional>
#include <future>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobstab/caps.hpp"
#include "frobstab/errors.hpp"
#include "frobstab/filtration.hpp"
#include "frobstab/local_algebra.hpp"
#include "frobstab/slope.hpp"
#include "frobstab/tensor_rep.hpp"

namespace frobstab {

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_refused = 3;

struct OutRow {
    std::string clause;
    std::string paper_ref;
    std::string status; // pass | fail | not_applicable | refused
    std::string witness;
    bool has_witness = false;
};

struct RunOutcome {
    std::string command;
    nlohmann::json config;
    std::vector<OutRow> rows;
    // command-specific CSV table; empty header means the generic clause table
    std::vector<std::string> table_header;
    std::vector<std::vector<std::string>> table;
    int exit_code = exit_pass;
};

std::vector<OutRow> rows_of(const VerificationReport& rep) {
    std::vector<OutRow> rows;
    for (const auto& c : rep.clauses) {
        OutRow r;
        r.clause = rep.subject + ": " + c.label;
        r.paper_ref = c.statement;
        r.status = to_string(c.status);
        r.witness = c.witness;
        r.has_witness = !c.witness.empty();
        rows.push_back(std::move(r));
    }
    return rows;
}

OutRow refusal_row(const std::string& subject, const std::string& message) {
    OutRow r;
    r.clause = subject + ": resource-cap";
    r.paper_ref = "construction exceeds the configured caps";
    r.status = "refused";
    r.witness = message;
    r.has_witness = true;
    return r;
}

int exit_from_rows(const std::vector<OutRow>& rows) {
    bool refused = false, failed = false;
    for (const auto& r : rows) {
        if (r.status == "refused") refused = true;
        if (r.status == "fail") failed = true;
    }
    if (refused) return exit_refused;
    if (failed) return exit_fail;
    return exit_pass;
}

// "2,3,5..7" -> {2,3,5,6,7}; order preserved, duplicates kept
std::vector<long long> parse_list(const std::string& text, const std::string& flag) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string token;
    auto parse_int = [&](const std::string& s) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw usage_error(flag + ": cannot parse '" + s + "'");
        }
        if (pos != s.size()) throw usage_error(flag + ": cannot parse '" + s + "'");
        return v;
    };
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw usage_error(flag + ": empty element in list");
        auto dots = token.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(token));
        } else {
            long long lo = parse_int(token.substr(0, dots));
            long long hi = parse_int(token.substr(dots + 2));
            if (hi < lo) throw usage_error(flag + ": descending range '" + token + "'");
            for (long long v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    if (out.empty()) throw usage_error(flag + ": empty list");
    return out;
}

std::vector<PrimeChar> parse_primes(const std::string& text) {
    std::vector<PrimeChar> out;
    for (long long v : parse_list(text, "--p")) {
        if (v < 2 || v > 0x7fffffff) throw usage_error(std::to_string(v) + " is not prime");
        out.emplace_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

// --- formatting -------------------------------------------------------------

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void write_json(std::ostream& os, const RunOutcome& o) {
    nlohmann::json j;
    j["command"] = o.command;
    j["config"] = o.config;
    nlohmann::json reports = nlohmann::json::array();
    long long passed = 0, failed = 0, na = 0, refused = 0;
    for (const auto& r : o.rows) {
        nlohmann::json e;
        e["clause"] = r.clause;
        e["paper_ref"] = r.paper_ref;
        e["status"] = r.status;
        if (r.has_witness) e["witness"] = r.witness;
        reports.push_back(std::move(e));
        if (r.status == "pass") ++passed;
        else if (r.status == "fail") ++failed;
        else if (r.status == "refused") ++refused;
        else ++na;
    }
    j["reports"] = std::move(reports);
    j["summary"] = {{"clauses", static_cast<long long>(o.rows.size())},
                    {"passed", passed},
                    {"failed", failed},
                    {"not_applicable", na},
                    {"refused", refused},
                    {"exit", o.exit_code}};
    os << j.dump(2) << '\n';
}

void write_csv(std::ostream& os, const RunOutcome& o) {
    if (!o.table_header.empty()) {
        for (std::size_t i = 0; i < o.table_header.size(); ++i)
            os << (i ? "," : "") << csv_quote(o.table_header[i]);
        os << "\r\n";
        for (const auto& row : o.table) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_quote(row[i]);
            os << "\r\n";
        }
        return;
    }
    os << "clause,paper_ref,status,witness\r\n";
    for (const auto& r : o.rows)
        os << csv_quote(r.clause) << ',' << csv_quote(r.paper_ref) << ',' << csv_quote(r.status)
           << ',' << csv_quote(r.witness) << "\r\n";
}

void write_text(std::ostream& os, const RunOutcome& o) {
    long long passed = 0, failed = 0, na = 0, refused = 0;
    for (const auto& r : o.rows) {
        std::string tag;
        if (r.status == "pass") {
            tag = "PASS";
            ++passed;
        } else if (r.status == "fail") {
            tag = "FAIL";
            ++failed;
        } else if (r.status == "refused") {
            tag = "REFUSED";
            ++refused;
        } else {
            tag = "N/A";
            ++na;
        }
        os << '[' << tag << "] " << r.clause << " -- " << r.paper_ref;
        if (r.has_witness) os << " [" << r.witness << ']';
        os << '\n';
    }
    os << o.rows.size() << " clauses: " << passed << " passed, " << failed << " failed, " << na
       << " not applicable, " << refused << " refused (exit " << o.exit_code << ")\n";
}

void emit(const RunOutcome& o, const std::string& format, const std::string& out_file,
          std::ostream& out) {
    std::ofstream file;
    std::ostream* target = &out;
    if (!out_file.empty()) {
        file.open(out_file, std::ios::binary);
        if (!file) throw usage_error("cannot open output file " + out_file);
        target = &file;
    }
    if (format == "json") write_json(*target, o);
    else if (format == "csv") write_csv(*target, o);
    else write_text(*target, o);
}

// fragments computed per grid point, joined in deterministic grid order
std::vector<std::vector<OutRow>> run_ordered(
    std::vector<std::function<std::vector<OutRow>()>> tasks) {
    std::vector<std::future<std::vector<OutRow>>> futs;
    futs.reserve(tasks.size());
    for (auto& t : tasks) futs.push_back(std::async(std::launch::async, std::move(t)));
    std::vector<std::vector<OutRow>> out;
    out.reserve(futs.size());
    for (auto& f : futs) out.push_back(f.get());
    return out;
}

nlohmann::json json_list(const std::vector<long long>& v) { return nlohmann::json(v); }

nlohmann::json json_primes(const std::vector<PrimeChar>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : v) j.push_back(p.value());
    return j;
}

// --- verify-filtration -------------------------------------------------------

struct VerifyConfig {
    std::string p_text, n_text, r_text = "1";
    long long fiber_cap = Caps{}.fiber_dim;
    long long tensor_cap = Caps{}.tensor_dim;
    long long naive_cap = Caps{}.naive_factorial;
    long long trunc_order = 0; // 0 = default 2pn per point
    long long samples = 25;
    std::uint64_t seed = 0;
    std::string format = "text", out_file;
};

RunOutcome cmd_verify_filtration(const VerifyConfig& cfg) {
    const auto primes = parse_primes(cfg.p_text);
    const auto ns = parse_list(cfg.n_text, "--n");
    const auto rs = parse_list(cfg.r_text, "--r");
    for (long long n : ns)
        if (n < 1) throw usage_error("--n: values must be positive");
    for (long long r : rs)
        if (r < 1) throw usage_error("--r: values must be positive");
    if (cfg.fiber_cap < 1 || cfg.tensor_cap < 1 || cfg.naive_cap < 1)
        throw usage_error("caps must be positive");
    if (cfg.trunc_order < 0) throw usage_error("--trunc-order: must be nonnegative");
    if (cfg.samples < 1) throw usage_error("--samples: must be positive");

    Caps caps;
    caps.fiber_dim = cfg.fiber_cap;
    caps.tensor_dim = cfg.tensor_cap;
    caps.naive_factorial = static_cast<int>(cfg.naive_cap);

    std::vector<std::function<std::vector<OutRow>()>> tasks;
    for (const auto p : primes) {
        for (long long n : ns) {
            const int ni = static_cast<int>(n);
            for (long long r : rs) {
                const int ri = static_cast<int>(r);
                tasks.emplace_back([p, ni, ri, caps] {
                    std::ostringstream subj;
                    subj << "filtration p=" << p.value() << " n=" << ni << " r=" << ri;
                    try {
                        return rows_of(verify_canonical_filtration(p, ni, ri, caps));
                    } catch (const resource_error& e) {
                        return std::vector<OutRow>{refusal_row(subj.str(), e.what())};
                    }
                });
            }
            const int trunc = cfg.trunc_order > 0
                                  ? static_cast<int>(cfg.trunc_order)
                                  : 2 * static_cast<int>(p.value()) * ni;
            tasks.emplace_back([p, ni, trunc, caps] {
                std::ostringstream subj;
                subj << "generation p=" << p.value() << " n=" << ni << " trunc=" << trunc;
                try {
                    return rows_of(verify_generation(p, ni, trunc, caps));
                } catch (const resource_error& e) {
                    return std::vector<OutRow>{refusal_row(subj.str(), e.what())};
                }
            });
            const long long samples = cfg.samples;
            const std::uint64_t seed = cfg.seed;
            tasks.emplace_back([p, ni, samples, seed, caps] {
                std::ostringstream subj;
                subj << "equivariance p=" << p.value() << " n=" << ni << " samples=" << samples
                     << " seed=" << seed;
                std::vector<OutRow> rows;
                const int top = ni * (static_cast<int>(p.value()) - 1);
                for (int l = 0; l <= top; ++l) {
                    std::string clause = subj.str() + ": l=" + std::to_string(l);
                    try {
                        VerificationReport rep = gl_equivariance_check(
                            p, ni, l, static_cast<int>(samples), seed, caps);
                        for (const auto& c : rep.clauses) {
                            OutRow r;
                            r.clause = clause;
                            r.paper_ref = c.statement;
                            r.status = to_string(c.status);
                            r.witness = c.witness;
                            r.has_witness = !c.witness.empty();
                            rows.push_back(std::move(r));
                        }
                    } catch (const resource_error& e) {
                        rows.push_back(refusal_row(subj.str() + ": l=" + std::to_string(l),
                                                   e.what()));
                    }
                }
                return rows;
            });
        }
    }

    RunOutcome outcome;
    outcome.command = "verify-filtration";
    outcome.config = {{"p", json_primes(primes)},
                      {"n", json_list(ns)},
                      {"r", json_list(rs)},
                      {"caps",
                       {{"fiber", cfg.fiber_cap},
                        {"tensor", cfg.tensor_cap},
                        {"naive", cfg.naive_cap},
                        {"trunc_order", cfg.trunc_order}}},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed},
                      {"format", cfg.format}};
    for (auto& fragment : run_ordered(std::move(tasks)))
        for (auto& row : fragment) outcome.rows.push_back(std::move(row));
    outcome.exit_code = exit_from_rows(outcome.rows);
    return outcome;
}

// --- rep-dims -----------------------------------------------------------------

struct RepDimsConfig {
    std::string p_text, n_text;
    std::string format = "text", out_file;
};

RunOutcome cmd_rep_dims(const RepDimsConfig& cfg) {
    const auto primes = parse_primes(cfg.p_text);
    const auto ns = parse_list(cfg.n_text, "--n");
    for (long long n : ns)
        if (n < 1) throw usage_error("--n: values must be positive");

    RunOutcome outcome;
    outcome.command = "rep-dims";
    outcome.config = {{"p", json_primes(primes)}, {"n", json_list(ns)}, {"format", cfg.format}};
    outcome.table_header = {"p", "n", "l", "dim", "sym_dim", "equal_flag"};

    for (const auto p : primes) {
        for (long long n : ns) {
            const int ni = static_cast<int>(n);
            const int top = ni * (static_cast<int>(p.value()) - 1);
            for (int l = 0; l <= top; ++l) {
                const long long dim =
                    dim_bounded_compositions(ni, static_cast<int>(p.value()) - 1, l);
                const long long sdim = sym_dim(ni, l);
                const bool equal = dim == sdim;
                const bool expect_equal = static_cast<std::uint32_t>(l) < p.value();
                OutRow r;
                {
                    std::ostringstream os;
                    os << "dims p=" << p.value() << " n=" << ni << " l=" << l;
                    r.clause = os.str();
                }
                r.paper_ref =
                    "dim span{v(K) : |K| = l} equals dim Sym^l exactly when l < p";
                r.status = (equal == expect_equal) ? "pass" : "fail";
                {
                    std::ostringstream os;
                    os << "dim=" << dim << " sym_dim=" << sdim << " equal=" << (equal ? 1 : 0);
                    r.witness = os.str();
                    r.has_witness = true;
                }
                outcome.rows.push_back(std::move(r));
                outcome.table.push_back({std::to_string(p.value()), std::to_string(ni),
                                         std::to_string(l), std::to_string(dim),
                                         std::to_string(sdim), equal ? "1" : "0"});
            }
        }
    }
    outcome.exit_code = exit_from_rows(outcome.rows);
    return outcome;
}

// --- slope-certify --------------------------------------------------------------

struct SlopeConfig {
    std::string g_text, p_text, rank_w_text, rank_e_text; // rank_e empty = 1..p*rank_w
    std::string format = "text", out_file;
};

RunOutcome cmd_slope_certify(const SlopeConfig& cfg) {
    const auto gs = parse_list(cfg.g_text, "--g");
    const auto primes = parse_primes(cfg.p_text);
    const auto rws = parse_list(cfg.rank_w_text, "--rank-w");
    for (long long g : gs)
        if (g < 0) throw usage_error("--g: genus must be nonnegative");
    for (long long w : rws)
        if (w < 1) throw usage_error("--rank-w: values must be positive");

    struct Point {
        long long g, rank_w, rank_e;
        PrimeChar p;
    };
    std::vector<Point> grid;
    for (long long g : gs)
        for (const auto p : primes)
            for (long long w : rws) {
                std::vector<long long> res;
                if (cfg.rank_e_text.empty()) {
                    for (long long e = 1; e <= static_cast<long long>(p.value()) * w; ++e)
                        res.push_back(e);
                } else {
                    res = parse_list(cfg.rank_e_text, "--rank-e");
                }
                for (long long e : res) {
                    if (e < 1 || e > static_cast<long long>(p.value()) * w)
                        throw usage_error("--rank-e: " + std::to_string(e) +
                                          " outside [1, p*rank_w] for p=" +
                                          std::to_string(p.value()) +
                                          " rank_w=" + std::to_string(w));
                    grid.push_back({g, w, e, p});
                }
            }

    struct PointOutput {
        std::vector<OutRow> rows;
        std::vector<std::vector<std::string>> table;
    };
    std::vector<std::future<PointOutput>> futs;
    futs.reserve(grid.size());
    for (const auto& pt : grid)
        futs.push_back(std::async(std::launch::async, [pt] {
            PointOutput po;
            CurveContext ctx(static_cast<int>(pt.g), pt.p);
            MinGapResult res = min_gap_report(pt.rank_w, pt.rank_e, ctx);
            po.rows = rows_of(res.report);

            OutRow min_row;
            min_row.clause = res.report.subject + ": minimum";
            min_row.paper_ref = "least gap lower bound over profiles attainable for a stable bundle";
            min_row.witness = res.minimum.str();
            min_row.has_witness = true;
            const long long full = static_cast<long long>(pt.p.value()) * pt.rank_w;
            if (pt.g < 2) min_row.status = "not_applicable";
            else if (pt.rank_e < full)
                min_row.status = Rational(0) < res.minimum ? "pass" : "fail";
            else
                min_row.status = res.minimum == Rational(0) ? "pass" : "fail";
            po.rows.push_back(std::move(min_row));

            for (const auto& cert : res.certificates)
                po.table.push_back({std::to_string(pt.g), std::to_string(pt.p.value()),
                                    std::to_string(pt.rank_w), std::to_string(pt.rank_e),
                                    cert.profile.str(), cert.weighted.str(), cert.bound.str(),
                                    cert.equality_possible ? "1" : "0"});
            return po;
        }));

    RunOutcome outcome;
    outcome.command = "slope-certify";
    outcome.config = {{"g", json_list(gs)},
                      {"p", json_primes(primes)},
                      {"rank_w", json_list(rws)},
                      {"rank_e", cfg.rank_e_text.empty() ? "1..p*rank_w" : cfg.rank_e_text},
                      {"format", cfg.format}};
    outcome.table_header = {"g",        "p",            "rank_w",    "rank_e",
                            "profile",  "weighted_sum", "gap_bound", "equality_possible"};
    for (auto& f : futs) {
        PointOutput po = f.get();
        for (auto& r : po.rows) outcome.rows.push_back(std::move(r));
        for (auto& t : po.table) outcome.table.push_back(std::move(t));
    }
    outcome.exit_code = exit_from_rows(outcome.rows);
    return outcome;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Verification toolkit for the canonical connection on Frobenius pullbacks:\n"
        "filtration structure, tensor subrepresentations, and slope-stability\n"
        "certificates, over exact prime-field and rational arithmetic.\n"
        "The FROBSTAB_FIBER_CAP environment variable overrides the default fiber\n"
        "dimension cap when --fiber-cap is not given."};
    app.require_subcommand(1);

    VerifyConfig vc;
    auto* verify = app.add_subcommand(
        "verify-filtration",
        "Check the canonical filtration clause by clause over a (p, n, r) grid, "
        "plus generation and GL-equivariance evidence per (p, n)");
    verify->add_option("--p", vc.p_text, "primes, e.g. 2,3,5 or 2..7")->required();
    verify->add_option("--n", vc.n_text, "variable counts, e.g. 1,2")->required();
    verify->add_option("--r", vc.r_text, "ranks of the underlying bundle (default 1)");
    verify->add_option("--fiber-cap", vc.fiber_cap, "maximum r*p^n (default 4096)")
        ->envname("FROBSTAB_FIBER_CAP");
    verify->add_option("--tensor-cap", vc.tensor_cap, "maximum n^l (default 65536)");
    verify->add_option("--naive-cap", vc.naive_cap,
                       "maximum l for the l!-term symmetrization (default 7)");
    verify->add_option("--trunc-order", vc.trunc_order,
                       "truncation degree for the generation check (default 2pn)");
    verify->add_option("--samples", vc.samples, "random matrices per equivariance check");
    verify->add_option("--seed", vc.seed, "seed for the equivariance samples");
    verify->add_option("--format", vc.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", vc.out_file, "write output to a file instead of stdout");

    RepDimsConfig rc;
    auto* repdims = app.add_subcommand(
        "rep-dims", "Tabulate dim of the degree-l tensor subrepresentation against dim Sym^l");
    repdims->add_option("--p", rc.p_text, "primes, e.g. 2,3,5")->required();
    repdims->add_option("--n", rc.n_text, "dimensions of the standard space, e.g. 1,2")
        ->required();
    repdims->add_option("--format", rc.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    repdims->add_option("--out", rc.out_file, "write output to a file instead of stdout");

    SlopeConfig sc;
    auto* slope = app.add_subcommand(
        "slope-certify",
        "Certify the slope gap of the pushforward over every admissible rank profile");
    slope->add_option("--g", sc.g_text, "genera, e.g. 2,3")->required();
    slope->add_option("--p", sc.p_text, "primes, e.g. 2,3,5")->required();
    slope->add_option("--rank-w", sc.rank_w_text, "ranks of the pushed-forward bundle")
        ->required();
    slope->add_option("--rank-e", sc.rank_e_text,
                      "subbundle ranks, e.g. 1..6 (default 1..p*rank_w)");
    slope->add_option("--format", sc.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    slope->add_option("--out", sc.out_file, "write output to a file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("frobstab");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        RunOutcome outcome;
        std::string format, out_file;
        if (verify->parsed()) {
            outcome = cmd_verify_filtration(vc);
            format = vc.format;
            out_file = vc.out_file;
        } else if (repdims->parsed()) {
            outcome = cmd_rep_dims(rc);
            format = rc.format;
            out_file = rc.out_file;
        } else {
            outcome = cmd_slope_certify(sc);
            format = sc.format;
            out_file = sc.out_file;
        }
        emit(outcome, format, out_file, out);
        return outcome.exit_code;
    } catch (const usage_error& e) {
        err << e.what() << '\n';
        return exit_usage;
    } catch (const resource_error& e) {
        err << e.what() << '\n';
        return exit_refused;
    }
}

} // namespace frobstab
