#include "mindenom/cli.hpp"

#include "mindenom/census.hpp"
#include "mindenom/errors.hpp"
#include "mindenom/factor.hpp"
#include "mindenom/formulas.hpp"
#include "mindenom/parse.hpp"
#include "mindenom/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace mindenom {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

struct CommonOpts {
    std::uint32_t q = 2;
    std::string modulus;
    std::string format = "pretty";
    std::string out_path;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

Field make_field(const CommonOpts& c) {
    std::uint32_t q = c.q, p = 0, m = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) throw ParseError("--q must be a prime power >= 2");
    std::uint32_t rest = q;
    m = 0;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw ParseError("--q must be a prime power");
    if (m == 1) {
        if (!c.modulus.empty()) throw ParseError("--modulus needs an extension field");
        return Field::prime(p);
    }
    if (c.modulus.empty()) return Field::extension(p, m);
    Field base = Field::prime(p);
    Poly mod = parse_poly(base, c.modulus);
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(mod.degree()); ++i)
        coeffs.push_back(mod.coeff(i).index());
    return Field::extension(p, m, coeffs);
}

void emit(const CommonOpts& c, std::ostream& out, const std::string& body) {
    if (c.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + c.out_path);
    f << body;
}

std::string render_report(const CommonOpts& c, const ComparisonReport& rep) {
    if (c.format == "json") return rep.json().dump(2) + "\n";
    if (c.format == "csv") return rep.csv();
    std::ostringstream os;
    os << rep.title << "\n";
    for (const auto& r : rep.rows)
        os << "  " << r.point << ": oracle=" << r.oracle << " formula=" << r.formula << " ["
           << r.source << "] " << (r.match ? "match" : "MISMATCH") << " ("
           << regime_name(r.regime) << ")\n";
    os << "interior mismatches: " << rep.mismatches(Regime::interior) << "\n";
    return os.str();
}

nlohmann::ordered_json result_json(const Field& f, std::size_t k,
                                   const std::vector<LaurentWord>& words,
                                   const MinDenomResult& res) {
    nlohmann::ordered_json j;
    j["q"] = f.size();
    j["k"] = k;
    j["n"] = words.size();
    nlohmann::ordered_json alphas = nlohmann::ordered_json::array();
    for (const auto& w : words) alphas.push_back(digits_to_string(w.digits()));
    j["alpha"] = std::move(alphas);
    j["d"] = res.d;
    j["Q_min"] = to_string(res.q_min);
    nlohmann::ordered_json nums = nlohmann::ordered_json::array();
    for (const auto& p : res.numerators) nums.push_back(to_string(p));
    j["numerators"] = std::move(nums);
    j["unique"] = res.unique;
    j["method"] = std::string(method_name(res.method));
    return j;
}

std::string render_result(const CommonOpts& c, const nlohmann::ordered_json& j) {
    if (c.format == "json") return j.dump(2) + "\n";
    if (c.format == "csv") {
        std::ostringstream os;
        os << "q,k,n,alpha,d,Q_min,numerators,unique,method\n";
        std::string alphas, nums;
        for (const auto& a : j["alpha"]) alphas += (alphas.empty() ? "" : "|") + a.get<std::string>();
        for (const auto& p : j["numerators"]) nums += (nums.empty() ? "" : "|") + p.get<std::string>();
        os << j["q"] << "," << j["k"] << "," << j["n"] << "," << alphas << "," << j["d"] << ","
           << j["Q_min"].get<std::string>() << "," << nums << ","
           << (j["unique"].get<bool>() ? "true" : "false") << ","
           << j["method"].get<std::string>() << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << "d        = " << j["d"] << "\n";
    os << "Q_min    = " << j["Q_min"].get<std::string>() << "\n";
    std::string nums;
    for (const auto& p : j["numerators"]) nums += (nums.empty() ? "" : ", ") + p.get<std::string>();
    os << "P        = " << nums << "\n";
    os << "unique   = " << (j["unique"].get<bool>() ? "true" : "false") << "\n";
    os << "method   = " << j["method"].get<std::string>() << "\n";
    return os.str();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimal denominators of Laurent series over finite fields"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    CommonOpts common;
    if (const char* env = std::getenv("MINDENOM_BUDGET")) {
        try {
            common.budget = std::stoull(env);
        } catch (const std::exception&) {
            err << "bad MINDENOM_BUDGET value\n";
            return kExitParse;
        }
    }

    auto add_common = [&](CLI::App* sub, bool with_field = true) {
        if (with_field) {
            sub->add_option("--q", common.q, "field size q = p^m (prime power)");
            sub->add_option("--modulus", common.modulus,
                            "extension-field modulus over F_p (default: first irreducible)");
        }
        sub->add_option("--format", common.format, "output format: json|csv|pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--out", common.out_path, "write output to a file instead of stdout");
        sub->add_option("--budget", common.budget, "enumeration budget (words / candidates)");
        sub->add_option("--threads", common.threads, "parallelism width for censuses");
    };

    // solve
    std::vector<std::string> alpha_digits;
    std::string num_str, den_str;
    std::size_t k = 0, precision = 0;
    std::string method = "hankel";
    CLI::App* solve = app.add_subcommand("solve", "minimal denominator of one or more words");
    add_common(solve);
    solve->add_option("--alpha-digits,--alpha", alpha_digits,
                      "word digits, ascending (repeat for joint solves)");
    solve->add_option("--num", num_str, "numerator polynomial (with --den)");
    solve->add_option("--den", den_str, "denominator polynomial (with --num)");
    solve->add_option("--precision", precision, "digits to expand for --num/--den");
    solve->add_option("--k", k, "radius exponent: approximate within q^{-k}")->required();
    solve->add_option("--method", method, "hankel|oracle|both")
        ->check(CLI::IsMember({"hankel", "oracle", "both"}));

    // dist / qmin
    std::size_t n_dims = 1;
    CLI::App* dist = app.add_subcommand("dist", "degree-distribution census vs closed form");
    add_common(dist);
    dist->add_option("--k", k, "largest radius exponent in the grid")->required();
    dist->add_option("--n", n_dims, "number of coordinates (joint words)");

    CLI::App* qmin = app.add_subcommand("qmin", "minimal-denominator distribution census");
    add_common(qmin);
    qmin->add_option("--k", k, "largest radius exponent in the grid")->required();

    // padic census + scan
    std::string p_str;
    std::size_t max_shift = 0;
    CLI::App* padic = app.add_subcommand("padic", "residue-field block census vs closed form");
    add_common(padic);
    padic->add_option("--P", p_str, "monic irreducible shift base")->required();
    padic->add_option("--k", k, "largest radius exponent in the grid")->required();

    CLI::App* pscan = app.add_subcommand("padic-solve", "shift scan of the minimal degree");
    add_common(pscan);
    pscan->add_option("--P", p_str, "monic irreducible shift base")->required();
    pscan->add_option("--alpha-digits,--alpha", alpha_digits, "word digits, ascending");
    pscan->add_option("--num", num_str, "numerator polynomial (with --den)");
    pscan->add_option("--den", den_str, "denominator polynomial (with --num)");
    pscan->add_option("--precision", precision, "digits to expand for --num/--den");
    pscan->add_option("--k", k, "radius exponent")->required();
    pscan->add_option("--max-shift", max_shift, "largest shift to scan")->required();

    // hankel censuses
    std::size_t h = 0, hk = 0, hl = 0, hr = 0;
    CLI::App* hankel = app.add_subcommand("hankel", "Hankel rank censuses vs closed forms");
    hankel->set_help_flag("--help", "print help");
    add_common(hankel);
    hankel->add_option("--h", h, "square census up to h x h");
    hankel->add_option("--kl", hk, "low-rank census: k and l up to this bound");
    (void)hl;
    (void)hr;

    // dim
    std::size_t dim_d = 1;
    std::string blocks_str;
    CLI::App* dim = app.add_subcommand("dim", "block count and dimension of the exceptional set");
    add_common(dim);
    dim->add_option("--P", p_str, "monic irreducible shift base")->required();
    dim->add_option("--k", k, "radius exponent")->required();
    dim->add_option("--d", dim_d, "degree threshold (1 <= d <= ceil(k/2))");
    dim->add_option("--blocks", blocks_str, "override: retained block count |D|");

    // suite
    std::string out_dir = "reports";
    std::size_t suite_kmax = 6;
    CLI::App* suite = app.add_subcommand("suite", "run the full verification suite");
    add_common(suite, false);
    suite->add_option("--out-dir", out_dir, "directory for report files");
    suite->add_option("--kmax", suite_kmax, "largest radius exponent in the grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParse;
    }

    try {
        auto gather_words = [&](const Field& f) {
            std::vector<LaurentWord> words;
            for (const auto& s : alpha_digits) words.emplace_back(f, parse_digits(f, s));
            if (!num_str.empty() || !den_str.empty()) {
                if (num_str.empty() || den_str.empty())
                    throw ParseError("--num and --den must be given together");
                std::size_t prec = precision ? precision : k;
                words.push_back(
                    from_rational(parse_poly(f, num_str), parse_poly(f, den_str), prec));
            }
            if (words.empty()) throw ParseError("no input word: use --alpha-digits or --num/--den");
            return words;
        };

        if (solve->parsed()) {
            Field f = make_field(common);
            auto words = gather_words(f);
            if (method == "hankel" || method == "oracle") {
                MinDenomResult res = method == "hankel" ? solve_min_denom(words, k)
                                                        : oracle_min_denom(words, k, common.budget);
                emit(common, out, render_result(common, result_json(f, k, words, res)));
                return kExitOk;
            }
            MinDenomResult hres = solve_min_denom(words, k);
            MinDenomResult ores = oracle_min_denom(words, k, common.budget);
            nlohmann::ordered_json j = result_json(f, k, words, hres);
            j["method"] = "both";
            j["oracle"] = result_json(f, k, words, ores);
            bool agree = hres.same_solution(ores);
            j["agree"] = agree;
            emit(common, out, common.format == "pretty"
                                  ? render_result(common, j) +
                                        (agree ? "agree    = true\n" : "agree    = FALSE\n")
                                  : render_result(common, j));
            return agree ? kExitOk : kExitVerification;
        }

        if (dist->parsed()) {
            Field f = make_field(common);
            ComparisonReport rep =
                n_dims == 1
                    ? deg_distribution_report(f, k, common.budget, common.threads)
                    : joint_distribution_report(f, k, n_dims, common.budget, common.threads);
            emit(common, out, render_report(common, rep));
            return rep.interior_ok() ? kExitOk : kExitVerification;
        }

        if (qmin->parsed()) {
            Field f = make_field(common);
            ComparisonReport rep = qmin_distribution_report(f, k, common.budget, common.threads);
            emit(common, out, render_report(common, rep));
            return rep.interior_ok() ? kExitOk : kExitVerification;
        }

        if (padic->parsed()) {
            Field f = make_field(common);
            Poly P = parse_poly(f, p_str);
            ComparisonReport rep = padic_block_report(P, k, common.budget, common.threads);
            emit(common, out, render_report(common, rep));
            return rep.interior_ok() ? kExitOk : kExitVerification;
        }

        if (pscan->parsed()) {
            Field f = make_field(common);
            Poly P = parse_poly(f, p_str);
            if (precision == 0 && !num_str.empty())
                precision = k + max_shift * static_cast<std::size_t>(P.degree());
            auto words = gather_words(f);
            PadicScanResult res = padic_min_denom_scan(words.front(), P, k, max_shift);
            nlohmann::ordered_json j;
            j["q"] = f.size();
            j["P"] = to_string(P);
            j["k"] = k;
            j["max_shift"] = max_shift;
            j["d"] = res.d;
            j["witness_shift"] = res.witness_shift;
            j["certified"] = res.certified;
            if (common.format == "json") {
                emit(common, out, j.dump(2) + "\n");
            } else {
                std::ostringstream os;
                os << "d* = " << res.d << " at shift " << res.witness_shift
                   << (res.certified ? " (certified)" : " (upper bound)") << "\n";
                emit(common, out, os.str());
            }
            return kExitOk;
        }

        if (hankel->parsed()) {
            Field f = make_field(common);
            if (h == 0 && hk == 0) throw ParseError("hankel needs --h or --kl");
            ComparisonReport combined;
            combined.title = "Hankel censuses";
            combined.spec = {{"q", f.size()}};
            std::vector<HankelCensusRow> census_rows;
            if (h > 0) {
                HankelReports r = square_rank_report(f, h, common.budget);
                for (auto& row : r.cmp.rows) combined.rows.push_back(std::move(row));
                for (auto& row : r.census_rows) census_rows.push_back(std::move(row));
            }
            if (hk > 0) {
                HankelReports r = low_rank_report(f, hk, common.budget);
                for (auto& row : r.cmp.rows) combined.rows.push_back(std::move(row));
                for (auto& row : r.census_rows) census_rows.push_back(std::move(row));
            }
            if (common.format == "csv")
                emit(common, out, hankel_census_csv(census_rows));
            else
                emit(common, out, render_report(common, combined));
            return combined.interior_ok() ? kExitOk : kExitVerification;
        }

        if (dim->parsed()) {
            Field f = make_field(common);
            Poly P = parse_poly(f, p_str);
            BlockDimension bd;
            if (!blocks_str.empty())
                bd = missing_digit_dimension(f.size(), Int(blocks_str), k,
                                             static_cast<std::size_t>(P.degree()));
            else
                bd = block_count_closed_form(P, k, dim_d);
            nlohmann::ordered_json j;
            j["q"] = f.size();
            j["P"] = to_string(P);
            j["k"] = k;
            j["d"] = dim_d;
            j["count"] = bd.count.str();
            j["dim"] = bd.log_ratio();
            j["dim_value"] = bd.value();
            if (common.format == "json") {
                emit(common, out, j.dump(2) + "\n");
            } else {
                std::ostringstream os;
                os << "count = " << bd.count.str() << "\n"
                   << "dim   = " << bd.log_ratio() << " = " << bd.value() << "\n";
                emit(common, out, os.str());
            }
            return kExitOk;
        }

        if (suite->parsed()) {
            SuiteConfig cfg;
            cfg.k_max = suite_kmax;
            cfg.budget = common.budget;
            cfg.threads = common.threads;
            SuiteResult res = run_suite(cfg);
            write_suite(res, out_dir);
            out << "reports written to " << out_dir << "\n";
            out << "discrepancy rows: " << res.discrepancies.rows.size() << "\n";
            out << (res.ok() ? "interior-regime checks: all match\n"
                             : "interior-regime checks: MISMATCH\n");
            return res.ok() ? kExitOk : kExitVerification;
        }

        err << "no command\n";
        return kExitParse;
    } catch (const BudgetError& e) {
        err << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace mindenom
