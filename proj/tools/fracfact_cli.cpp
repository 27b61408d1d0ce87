// Command-line front end: construct, analyze, enumerate and verify
// two-level fractional factorial designs.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracfact/construct.hpp"
#include "fracfact/design.hpp"
#include "fracfact/enumerate.hpp"
#include "fracfact/errors.hpp"
#include "fracfact/matrix.hpp"
#include "fracfact/verify.hpp"
#include "fracfact/wlp.hpp"
#include "fracfact/wlpp.hpp"

namespace {

using nlohmann::json;
using namespace fracfact;

constexpr int kExitDomainError = 1;
constexpr int kExitCapabilityError = 2;
constexpr int kExitVerificationFailure = 3;

/// Pattern computation by composition stays affordable up to 2^12 runs.
constexpr int kMaxConstructRuns = 4096;

int m_from_runs(long runs) {
    if (runs < 4 || (runs & (runs - 1)) != 0)
        throw std::invalid_argument("--runs must be a power of two, at least 4");
    return std::countr_zero(static_cast<unsigned long>(runs));
}

Design design_from_flags(const std::string& spec, long runs) {
    const int m = runs ? m_from_runs(runs) : 0;
    return parse_design(spec, m);
}

json wlp_to_json(const WordLengthPattern& w) {
    json out = json::array();
    for (const auto& a : w.counts()) {
        if (a <= std::numeric_limits<std::int64_t>::max())
            out.push_back(static_cast<std::int64_t>(a));
        else
            out.push_back(a.str());
    }
    return out;
}

json columns_to_json(const Design& d) {
    json out = json::array();
    for (Column c : d.columns()) out.push_back(column_to_string(c));
    return out;
}

std::string wlpp_string(const WordLengthPattern& w) {
    return WlpPolynomial::from_wlp(w).to_string();
}

// ---- construct ----

struct ConstructOpts {
    long runs = 0;
    int factors = 0;
    std::string format = "generators";
};

int run_construct(const ConstructOpts& opt) {
    if (opt.runs > kMaxConstructRuns)
        throw CapabilityError("construction beyond " + std::to_string(kMaxConstructRuns) +
                              " runs exceeds the pattern computation budget");
    const MaResult res = ma_design(opt.factors, opt.runs);

    if (opt.format == "generators") {
        std::cout << res.generators.to_string() << "\n";
    } else if (opt.format == "columns") {
        std::cout << to_string(res.design) << "\n";
    } else if (opt.format == "matrix-csv") {
        std::cout << design_matrix_lettered(res.design).to_csv();
    } else if (opt.format == "json") {
        json chain = json::array();
        for (MaCertificate c : res.certificate_chain) chain.push_back(to_string(c));
        const json out = {
            {"runs", opt.runs},
            {"factors", opt.factors},
            {"columns", columns_to_json(res.design)},
            {"generators", res.generators.to_string()},
            {"wlp", wlp_to_json(res.pattern)},
            {"resolution", res.pattern.resolution()},
            {"certificate", to_string(res.certificate)},
            {"certificate_chain", chain},
            {"tie_count", res.tie_count},
            {"ma_guaranteed", res.ma_guaranteed()},
        };
        std::cout << out.dump(2) << "\n";
    } else {
        throw std::invalid_argument("unknown format \"" + opt.format + "\"");
    }
    return 0;
}

// ---- wlp ----

struct WlpOpts {
    std::string design;
    long runs = 0;
    std::string method = "count";
    std::string format = "text";
};

WordLengthPattern wlp_by_poly(const Design& d) {
    // The polynomial route applies to designs of the form O_m u e: all odd
    // columns present, extras even.
    const auto odd = odd_set(d.m());
    for (Column c : odd.columns())
        if (!d.contains(c))
            throw std::invalid_argument(
                "the polynomial method needs a design containing every odd column "
                "(O_m plus even columns); " +
                column_to_string(c) + " is missing");
    std::vector<Column> e_cols;
    for (Column c : d.columns())
        if (column_is_even(c)) e_cols.push_back(c);
    const int r = static_cast<int>(e_cols.size());
    auto e_hist = word_length_histogram(e_cols);
    std::vector<BigInt> pe(r + 1, 0);
    pe[0] = 1;
    for (int i = 1; i <= r && i < static_cast<int>(e_hist.size()); ++i) pe[i] = e_hist[i];
    return compose_wlpp(d.m(), WlpPolynomial{std::move(pe)}, r).to_wlp(d.k());
}

int run_wlp(const WlpOpts& opt) {
    const Design d = design_from_flags(opt.design, opt.runs);
    WordLengthPattern pattern;
    if (opt.method == "count") {
        pattern = wlp(d);
    } else if (opt.method == "poly") {
        pattern = wlp_by_poly(d);
    } else if (opt.method == "both") {
        pattern = wlp(d);
        if (wlp_by_poly(d) != pattern) {
            std::cerr << "counting and polynomial routes disagree\n";
            return kExitVerificationFailure;
        }
    } else {
        throw std::invalid_argument("unknown method \"" + opt.method + "\"");
    }
    if (opt.format == "json") {
        const json out = {
            {"wlp", wlp_to_json(pattern)},
            {"wlpp", wlpp_string(pattern)},
            {"resolution", pattern.resolution()},
            {"method", opt.method},
        };
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << pattern.to_string() << "\n" << wlpp_string(pattern) << "\n";
    }
    return 0;
}

// ---- compare ----

int run_compare(const std::string& spec1, const std::string& spec2, long runs) {
    int m = runs ? m_from_runs(runs) : 0;
    if (m == 0) {
        // both designs must live in the same Hamming set; infer it jointly
        int m1 = 0, m2 = 0;
        parse_columns(spec1, m1);
        parse_columns(spec2, m2);
        m = std::max(m1, m2);
    }
    const Design d1 = parse_design(spec1, m);
    const Design d2 = parse_design(spec2, m);
    int r = 0;
    const auto order = compare_aberration(d1, d2, &r);
    if (order == std::strong_ordering::equal) {
        std::cout << "designs have equal word-length patterns\n";
    } else {
        const auto w1 = wlp(d1), w2 = wlp(d2);
        const bool first = order == std::strong_ordering::less;
        std::cout << "design " << (first ? 1 : 2) << " has smaller aberration (a_" << r << ": "
                  << (first ? w1.a(r) : w2.a(r)) << " < " << (first ? w2.a(r) : w1.a(r))
                  << ")\n";
    }
    return 0;
}

// ---- rank ----

int run_rank(const std::string& spec, long runs, const std::string& format) {
    const int m = runs ? m_from_runs(runs) : 0;
    int m_inferred = m;
    auto cols = parse_columns(spec, m_inferred);
    const ColumnSet s(m_inferred, cols);
    if (format == "json")
        std::cout << json{{"rank", s.rank()}}.dump(2) << "\n";
    else
        std::cout << s.rank() << "\n";
    return 0;
}

// ---- enumerate ----

struct EnumerateOpts {
    long runs = 0;
    int factors = -1;
    bool lattice = false;
    std::string format = "text";
};

int run_enumerate(const EnumerateOpts& opt) {
    const int m = m_from_runs(opt.runs);

    if (opt.lattice) {
        const auto lat = build_lattice(m);
        if (opt.format == "json") {
            json nodes = json::array();
            for (const auto& node : lat.nodes)
                nodes.push_back({{"k", node.k},
                                 {"canonical", to_string(node.canonical)},
                                 {"wlp", wlp_to_json(node.pattern)},
                                 {"resolution", node.resolution},
                                 {"ma", node.ma}});
            json edges = json::array();
            for (const auto& [a, b] : lat.edges) edges.push_back({a, b});
            std::cout << json{{"runs", opt.runs}, {"nodes", nodes}, {"edges", edges}}.dump(2)
                      << "\n";
        } else {
            std::cout << lat.edge_list();
        }
        return 0;
    }

    std::optional<int> k;
    if (opt.factors >= 0) k = opt.factors;
    const auto classes = enumerate_classes(m, k);

    // aberration minimum per size, markable when the whole size is listed
    std::map<int, WordLengthPattern> best;
    std::map<int, std::vector<std::pair<const ColumnSet*, WordLengthPattern>>> by_k;
    for (const auto& cls : classes) {
        Design rep(m, cls.columns());
        auto w = wlp(rep);
        const int kk = cls.size();
        if (!best.count(kk) || compare_wlp(w, best[kk]) == std::strong_ordering::less)
            best[kk] = w;
        by_k[kk].emplace_back(&cls, std::move(w));
    }

    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& [kk, items] : by_k)
            for (const auto& [cls, w] : items) {
                json cols = json::array();
                auto sorted = cls->columns();
                std::sort(sorted.begin(), sorted.end(), column_display_less);
                for (Column c : sorted) cols.push_back(column_to_string(c));
                arr.push_back({{"k", kk},
                               {"columns", cols},
                               {"wlp", wlp_to_json(w)},
                               {"resolution", w.resolution()},
                               {"ma", compare_wlp(w, best[kk]) == std::strong_ordering::equal}});
            }
        std::cout << json{{"runs", opt.runs}, {"classes", arr}}.dump(2) << "\n";
    } else {
        std::cout << classes.size() << " classes\n";
        for (const auto& [kk, items] : by_k) {
            std::cout << "k=" << kk << ": " << items.size()
                      << (items.size() == 1 ? " class\n" : " classes\n");
            for (const auto& [cls, w] : items) {
                std::cout << "  " << to_string(*cls) << "  wlp=" << w.to_string();
                if (compare_wlp(w, best[kk]) == std::strong_ordering::equal) std::cout << "  MA";
                std::cout << "\n";
            }
        }
    }
    return 0;
}

// ---- verify ----

int run_verify(std::uint64_t seed, const std::string& format) {
    const auto report = verify_all(seed);
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        std::cout << json{{"seed", report.seed},
                          {"all_pass", report.all_pass()},
                          {"checks", checks}}
                         .dump(2)
                  << "\n";
    } else {
        int failed = 0;
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << " - " << c.detail << "\n";
            if (!c.pass) ++failed;
        }
        if (failed)
            std::cout << failed << " of " << report.checks.size() << " checks failed\n";
        else
            std::cout << "all " << report.checks.size() << " checks passed\n";
    }
    return report.all_pass() ? 0 : kExitVerificationFailure;
}

// ---- matrix ----

int run_matrix(const std::string& spec, long runs) {
    const Design d = design_from_flags(spec, runs);
    std::cout << design_matrix(d).to_csv();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-level fractional factorial designs: construction, word-length "
                 "patterns, aberration, enumeration and verification"};
    app.require_subcommand(1);

    ConstructOpts c_opt;
    auto* c_cmd = app.add_subcommand("construct",
                                     "Build the minimum-aberration design for given runs/factors");
    c_cmd->add_option("--runs", c_opt.runs, "Number of runs (a power of two)")->required();
    c_cmd->add_option("--factors", c_opt.factors, "Number of factors, in [runs/2, runs-1]")
        ->required();
    c_cmd->add_option("--format", c_opt.format, "generators|columns|matrix-csv|json")
        ->default_val("generators");

    WlpOpts w_opt;
    auto* w_cmd = app.add_subcommand("wlp", "Word-length pattern of a design");
    w_cmd->add_option("--design", w_opt.design, "Comma-separated columns, e.g. A,B,C,ABC")
        ->required();
    w_cmd->add_option("--runs", w_opt.runs, "Ambient run count (else inferred from letters)");
    w_cmd->add_option("--method", w_opt.method, "count|poly|both")->default_val("count");
    w_cmd->add_option("--format", w_opt.format, "text|json")->default_val("text");

    std::string cmp1, cmp2;
    long cmp_runs = 0;
    auto* cmp_cmd = app.add_subcommand("compare", "Compare two designs by aberration");
    cmp_cmd->add_option("design1", cmp1, "First design")->required();
    cmp_cmd->add_option("design2", cmp2, "Second design")->required();
    cmp_cmd->add_option("--runs", cmp_runs, "Ambient run count");

    std::string rank_spec, rank_format = "text";
    long rank_runs = 0;
    auto* rank_cmd = app.add_subcommand("rank", "GF(2) rank of a column set");
    rank_cmd->add_option("--design", rank_spec, "Comma-separated columns")->required();
    rank_cmd->add_option("--runs", rank_runs, "Ambient run count");
    rank_cmd->add_option("--format", rank_format, "text|json")->default_val("text");

    EnumerateOpts e_opt;
    auto* e_cmd = app.add_subcommand("enumerate", "Isomorphism classes of designs");
    e_cmd->add_option("--runs", e_opt.runs, "Number of runs (a power of two)")->required();
    e_cmd->add_option("--factors", e_opt.factors, "Restrict to designs with this many columns");
    e_cmd->add_flag("--lattice", e_opt.lattice, "Emit the class lattice edge list");
    e_cmd->add_option("--format", e_opt.format, "text|json")->default_val("text");

    std::uint64_t seed = kDefaultVerifySeed;
    std::string verify_format = "text";
    auto* v_cmd = app.add_subcommand("verify", "Run the full self-verification suite");
    v_cmd->add_option("--seed", seed, "Seed for the randomized samples");
    v_cmd->add_option("--format", verify_format, "text|json")->default_val("text");

    std::string mx_spec;
    long mx_runs = 0;
    auto* mx_cmd = app.add_subcommand("matrix", "Emit the +1/-1 design matrix as CSV");
    mx_cmd->add_option("--design", mx_spec, "Comma-separated columns")->required();
    mx_cmd->add_option("--runs", mx_runs, "Ambient run count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }

    try {
        if (c_cmd->parsed()) return run_construct(c_opt);
        if (w_cmd->parsed()) return run_wlp(w_opt);
        if (cmp_cmd->parsed()) return run_compare(cmp1, cmp2, cmp_runs);
        if (rank_cmd->parsed()) return run_rank(rank_spec, rank_runs, rank_format);
        if (e_cmd->parsed()) return run_enumerate(e_opt);
        if (v_cmd->parsed()) return run_verify(seed, verify_format);
        if (mx_cmd->parsed()) return run_matrix(mx_spec, mx_runs);
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return kExitCapabilityError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return 0;
}
