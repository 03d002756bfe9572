#pragma once

// Command-line front end. run_cli is separate from main so tests can drive it
// with captured streams.

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "excgamma/closed.hpp"
#include "excgamma/gamma.hpp"
#include "excgamma/harness.hpp"
#include "excgamma/oracle.hpp"

namespace excgamma::cli {

enum ExitCode { ok = 0, check_failed = 1, usage = 2 };

/// Options shared by every subcommand that names a family.
struct FamilyArgs {
    std::string family;
    unsigned n = 0;
    std::string cls = "all";
    std::string lambda;
    unsigned fixed = 0;
    std::string stat = "inv";
    std::string engine = "auto";
    double budget = 1e9;
    unsigned jobs = 1;

    void add_to(CLI::App* app, bool with_n) {
        app->add_option("--family", family, "family name, e.g. aexc, dexc, aderexc_fixed")->required();
        if (with_n) app->add_option("--n", n, "size")->required();
        app->add_option("--class", cls, "all, plus or minus")->check(CLI::IsMember({"all", "plus", "minus"}));
        app->add_option("--lambda", lambda, "cycle type for conj_exc, e.g. 3,2,2");
        app->add_option("--fixed", fixed, "fixed-point count for aderexc_fixed");
        app->add_option("--stat", stat, "q statistic for q_refined")->check(CLI::IsMember({"inv", "cyc"}));
        app->add_option("--engine", engine, "auto, closed or oracle")
            ->check(CLI::IsMember({"auto", "closed", "oracle"}));
        app->add_option("--budget", budget, "maximum windows an enumeration may visit");
        app->add_option("--jobs", jobs, "threads for enumeration")->check(CLI::PositiveNumber);
    }

    FamilySpec spec(unsigned size) const {
        FamilySpec s;
        s.family = parse_family(family);
        s.n = size;
        s.cls = cls == "plus" ? ClassFilter::plus : cls == "minus" ? ClassFilter::minus : ClassFilter::all;
        s.fixed = fixed;
        if (!lambda.empty()) s.lambda = CycleType::parse(lambda);
        if (s.family == FamilyName::conj_exc && !s.lambda) throw InvalidSpec("conj_exc needs --lambda");
        s.q_stat = stat == "cyc" ? Stat::cyc : Stat::inv;
        return s;
    }

    Poly compute(const FamilySpec& s) const {
        const bool closed = engine == "closed" || (engine == "auto" && has_closed_form(s));
        if (closed) return closed_family_poly(s);
        OracleOptions o;
        o.enumeration.budget = budget;
        o.jobs = jobs;
        return family_poly(s, o);
    }
};

namespace detail {

inline GammaMode auto_mode(const Poly& f) {
    if (f.has_var("q")) return GammaMode::q_coefficients;
    if (f.has_var("s") && f.has_var("t")) return GammaMode::bivariate;
    return GammaMode::univariate;
}

inline GammaMode parse_mode(const std::string& m, const Poly& f) {
    if (m == "uni") return GammaMode::univariate;
    if (m == "biv") return GammaMode::bivariate;
    if (m == "q") return GammaMode::q_coefficients;
    return auto_mode(f);
}

/// Univariate view of f used by the uni mode: every variable except t and q set to 1.
inline Poly to_univariate(Poly f) {
    for (const char* v : {"s", "u"})
        if (f.has_var(v)) f = substitute_one(f, v);
    return f;
}

inline std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const unsigned v = static_cast<unsigned>(std::stoul(text));
            return {v, v};
        }
        const unsigned a = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
        const unsigned b = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
        if (a > b) throw ParseError("empty range '" + text + "'");
        return {a, b};
    } catch (const std::logic_error&) {
        throw ParseError("expected a range like 2..9, got '" + text + "'");
    }
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct TableRow {
    FamilySpec spec;
    Poly poly;
    std::optional<GammaExpansion> gamma;
};

inline void write_csv(std::ostream& out, const std::vector<TableRow>& rows) {
    out << "family,class,n,k,coeff,gamma_index,gamma_value,cos,gamma_positive\n";
    for (const TableRow& row : rows) {
        const Poly flat = to_univariate(row.poly);
        std::vector<Poly> coeffs;
        if (flat.has_var("t")) coeffs = coefficients_in(flat, "t");
        else coeffs.push_back(flat);
        const std::size_t gammas = row.gamma ? row.gamma->gammas.size() : 0;
        const std::string cos = row.gamma ? to_string(row.gamma->center()) : "";
        const std::string positive = row.gamma && row.gamma->all_gammas_nonnegative() ? "true" : "false";
        for (std::size_t j = 0; j < std::max(coeffs.size(), gammas); ++j) {
            out << info(row.spec.family).name << ',' << name(row.spec.cls) << ',' << row.spec.n << ',';
            if (j < coeffs.size()) out << j << ',' << csv_field(to_string(coeffs[j])) << ',';
            else out << ",,";
            if (j < gammas) {
                const auto& g = row.gamma->gammas[j];
                const std::string v = row.gamma->mode == GammaMode::q_coefficients
                                          ? excgamma::detail::dense_to_string(g, "q")
                                          : row.gamma->gamma(j).str();
                out << j << ',' << csv_field(v) << ',';
            } else {
                out << ",,";
            }
            out << cos << ',' << positive << '\n';
        }
    }
}

inline void write_json(std::ostream& out, const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& row : rows) {
        nlohmann::json j{{"family", info(row.spec.family).name},
                         {"class", name(row.spec.cls)},
                         {"n", row.spec.n},
                         {"poly", to_json(row.poly)}};
        if (row.gamma) {
            j["gamma"] = to_json(*row.gamma);
            j["cos"] = to_string(row.gamma->center());
            j["gamma_positive"] = row.gamma->all_gammas_nonnegative();
        } else {
            j["gamma"] = nullptr;
            j["cos"] = nullptr;
            j["gamma_positive"] = false;
        }
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact excedance polynomials over type A, B and D groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "excgamma 1.0");

    FamilyArgs compute_args;
    std::string compute_format = "text";
    auto* compute = app.add_subcommand("compute", "print a family polynomial");
    compute_args.add_to(compute, true);
    compute->add_option("--format", compute_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    FamilyArgs gamma_args;
    std::string gamma_mode = "auto", gamma_format = "text";
    auto* gamma = app.add_subcommand("gamma", "print the gamma expansion of a family polynomial");
    gamma_args.add_to(gamma, true);
    gamma->add_option("--mode", gamma_mode, "uni, biv, q or auto")
        ->check(CLI::IsMember({"auto", "uni", "biv", "q"}));
    gamma->add_option("--format", gamma_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string suite = "all";
    std::optional<unsigned> max_n;
    unsigned verify_jobs = 1;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites{"all"};
    for (const auto& s : suite_names()) suites.push_back(s);
    verify->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(suites));
    verify->add_option("--max-n", max_n, "largest n (signed groups stop at min(n, 6))");
    verify->add_option("--jobs", verify_jobs, "checks run in parallel")->check(CLI::PositiveNumber);
    verify->add_flag("--timings", timings, "print per-check durations");

    FamilyArgs table_args;
    std::string range, table_out = "csv", table_mode = "auto";
    auto* table = app.add_subcommand("table", "emit one family over a range of n");
    table_args.add_to(table, false);
    table->add_option("--n-range", range, "a..b")->required();
    table->add_option("--out", table_out, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--mode", table_mode, "uni, biv, q or auto")
        ->check(CLI::IsMember({"auto", "uni", "biv", "q"}));

    std::string conj_lambda, conj_engine = "closed", conj_format = "text";
    auto* conj = app.add_subcommand("conjugacy", "class polynomial of a cycle type");
    conj->add_option("--lambda", conj_lambda, "cycle type, e.g. 2,2")->required();
    conj->add_option("--engine", conj_engine, "closed or oracle")->check(CLI::IsMember({"closed", "oracle"}));
    conj->add_option("--format", conj_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (*compute) {
            const Poly f = compute_args.compute(compute_args.spec(compute_args.n));
            if (compute_format == "json") out << to_json(f).dump() << '\n';
            else out << to_string(f) << '\n';
            return ok;
        }
        if (*gamma) {
            const Poly f = gamma_args.compute(gamma_args.spec(gamma_args.n));
            const GammaMode mode = detail::parse_mode(gamma_mode, f);
            try {
                const GammaExpansion g =
                    gamma_decompose(mode == GammaMode::univariate ? detail::to_univariate(f) : f, mode);
                if (gamma_format == "json") out << to_json(g).dump() << '\n';
                else out << to_string(g) << '\n';
                return ok;
            } catch (const NotPalindromic& e) {
                out << e.what() << '\n';
                return check_failed;
            }
        }
        if (*verify) {
            const SuiteLimits limits = max_n ? SuiteLimits::up_to(*max_n) : SuiteLimits{};
            const auto results = run_suite(suite, limits, verify_jobs);
            return print_report(out, results, timings) ? ok : check_failed;
        }
        if (*table) {
            const auto [lo, hi] = detail::parse_range(range);
            std::vector<detail::TableRow> rows;
            for (unsigned n = lo; n <= hi; ++n) {
                detail::TableRow row{table_args.spec(n), {}, std::nullopt};
                row.poly = table_args.compute(row.spec);
                const GammaMode mode = detail::parse_mode(table_mode, row.poly);
                try {
                    if (!row.poly.is_zero())
                        row.gamma = gamma_decompose(
                            mode == GammaMode::univariate ? detail::to_univariate(row.poly) : row.poly, mode);
                } catch (const NotPalindromic&) {
                } catch (const NotHomogeneous&) {
                }
                rows.push_back(std::move(row));
            }
            if (table_out == "json") detail::write_json(out, rows);
            else detail::write_csv(out, rows);
            return ok;
        }
        if (*conj) {
            const CycleType lambda = CycleType::parse(conj_lambda);
            FamilySpec spec{FamilyName::conj_exc, lambda.n()};
            spec.lambda = lambda;
            const Poly f = conj_engine == "oracle" ? family_poly(spec) : conj_exc_closed(lambda);
            if (conj_format == "json") out << to_json(f).dump() << '\n';
            else out << to_string(f) << '\n';
            return ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace excgamma::cli
