#include "mindenom/census.hpp"

#include "mindenom/errors.hpp"
#include "mindenom/factor.hpp"
#include "mindenom/formulas.hpp"
#include "mindenom/parse.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace mindenom {

namespace {

std::uint64_t checked_space(const Field& f, std::size_t k, std::size_t n,
                            std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * k; ++i) {
        total *= f.size();
        if (total > budget)
            throw BudgetError("word space q^{nk} exceeds the census budget");
    }
    return total;
}

std::vector<LaurentWord> joint_word_at(const Field& f, std::size_t k, std::size_t n,
                                       std::uint64_t index) {
    std::uint64_t per = word_count(f, k);
    std::vector<LaurentWord> words;
    words.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        words.push_back(word_at(f, k, index % per));
        index /= per;
    }
    return words;
}

// Contiguous chunks, merged in chunk order: identical output for any width.
template <typename State, typename Work, typename Merge>
State parallel_census(std::uint64_t total, unsigned threads, State empty, Work work,
                      Merge merge) {
    unsigned width = std::max(1u, threads);
    if (width > 1 && total < width) width = 1;
    std::vector<State> partial(width, empty);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < width; ++w) {
        std::uint64_t lo = total / width * w + std::min<std::uint64_t>(w, total % width);
        std::uint64_t hi = lo + total / width + (w < total % width ? 1 : 0);
        pool.emplace_back([&, w, lo, hi] { work(partial[w], lo, hi); });
    }
    for (auto& t : pool) t.join();
    State out = std::move(partial[0]);
    for (unsigned w = 1; w < width; ++w) merge(out, std::move(partial[w]));
    return out;
}

std::string point_prefix(const Field& f, std::size_t k, std::size_t n) {
    std::ostringstream os;
    os << "q=" << f.size() << ";k=" << k << ";n=" << n;
    return os.str();
}

} // namespace

std::vector<std::uint64_t> deg_census_counts(const CensusSpec& spec) {
    std::uint64_t total = checked_space(spec.field, spec.k, spec.n, spec.budget);
    using State = std::vector<std::uint64_t>;
    return parallel_census(
        total, spec.threads, State(spec.k + 1, 0),
        [&](State& counts, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                auto words = joint_word_at(spec.field, spec.k, spec.n, idx);
                counts[static_cast<std::size_t>(solve_min_denom(words, spec.k).d)] += 1;
            }
        },
        [](State& a, State&& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        });
}

std::map<Poly, std::uint64_t, PolyLess> qmin_census_counts(const CensusSpec& spec) {
    if (spec.n != 1)
        throw std::invalid_argument("the Q_min census is one-dimensional");
    std::uint64_t total = checked_space(spec.field, spec.k, 1, spec.budget);
    using State = std::map<Poly, std::uint64_t, PolyLess>;
    return parallel_census(
        total, spec.threads, State{},
        [&](State& counts, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                LaurentWord w = word_at(spec.field, spec.k, idx);
                counts[solve_min_denom(w, spec.k).q_min] += 1;
            }
        },
        [](State& a, State&& b) {
            for (auto& [q, c] : b) a[q] += c;
        });
}

std::uint64_t block_census_atleast(const Field& residue, std::size_t k, std::size_t d,
                                   std::uint64_t budget, unsigned threads) {
    std::uint64_t total = checked_space(residue, k, 1, budget);
    return parallel_census(
        total, threads, std::uint64_t{0},
        [&](std::uint64_t& count, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                LaurentWord w = word_at(residue, k, idx);
                if (solve_min_denom(w, k).d >= static_cast<int>(d)) ++count;
            }
        },
        [](std::uint64_t& a, std::uint64_t&& b) { a += b; });
}

ComparisonReport deg_distribution_report(const Field& f, std::size_t k_max,
                                         std::uint64_t budget, unsigned threads) {
    ComparisonReport rep;
    rep.title = "degree distribution vs closed form";
    rep.spec = {{"q", f.size()}, {"k_max", k_max}, {"n", 1}};
    for (std::size_t k = 1; k <= k_max; ++k) {
        CensusSpec spec{f, k, 1, CensusMode::deg_distribution, budget, threads};
        auto counts = deg_census_counts(spec);
        Rational space = qpow(f.size(), static_cast<std::int64_t>(k));
        for (std::size_t d = 0; d <= k; ++d) {
            Rational oracle = Rational(Int(counts[d])) / space;
            Rational formula = pmf_deg_closed_form(f.size(), k, d);
            ReportRow row;
            row.point = point_prefix(f, k, 1) + ";d=" + std::to_string(d);
            row.oracle = to_string(oracle);
            row.formula = to_string(formula);
            row.source = "pmf-closed-form";
            row.match = oracle == formula;
            row.regime = pmf_deg_interior(k, d) ? Regime::interior : Regime::boundary;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

ComparisonReport joint_distribution_report(const Field& f, std::size_t k_max, std::size_t n,
                                           std::uint64_t budget, unsigned threads) {
    ComparisonReport rep;
    rep.title = "joint degree distribution vs bounds";
    rep.spec = {{"q", f.size()}, {"k_max", k_max}, {"n", n}};
    for (std::size_t k = 1; k <= k_max; ++k) {
        CensusSpec spec{f, k, n, CensusMode::deg_distribution, budget, threads};
        auto counts = deg_census_counts(spec);
        std::uint64_t total = checked_space(f, k, n, budget);
        Rational space = Rational(Int(total));
        std::string prefix = point_prefix(f, k, n);
        std::size_t ceiling = (n * k + n) / (n + 1); // ceil(nk/(n+1))

        {
            ReportRow row;
            row.point = prefix + ";d=0";
            row.oracle = to_string(Rational(Int(counts[0])) / space);
            row.formula = to_string(joint_zero_mass(f.size(), k, n));
            row.source = "zero-mass-exact";
            row.match = row.oracle == row.formula;
            row.regime = Regime::interior;
            rep.rows.push_back(std::move(row));
        }
        {
            std::size_t max_seen = 0;
            for (std::size_t d = 0; d <= k; ++d)
                if (counts[d] > 0) max_seen = d;
            // The printed degree ceiling fails on delta-like words (their
            // kernel vectors have vanishing top coefficient), so this row
            // is informational, like the one-dimensional ceil(k/2) bound.
            ReportRow row;
            row.point = prefix + ";max-degree";
            row.oracle = std::to_string(max_seen);
            row.formula = std::to_string(ceiling);
            row.source = "joint-degree-ceiling";
            row.match = max_seen <= ceiling;
            row.regime = Regime::boundary;
            rep.rows.push_back(std::move(row));
        }
        std::uint64_t cum = 0;
        for (std::size_t d = 0; d <= k; ++d) {
            cum += counts[d];
            Rational oracle = Rational(Int(cum)) / space;
            Rational bound = joint_low_degree_bound(f.size(), k, n, d);
            ReportRow row;
            row.point = prefix + ";deg<=" + std::to_string(d);
            row.oracle = to_string(oracle);
            row.formula = to_string(bound);
            row.source = "joint-low-degree-bound";
            row.match = oracle <= bound;
            row.regime = d <= ceiling ? Regime::interior : Regime::boundary;
            rep.rows.push_back(std::move(row));
        }

        // Per-coordinate lower bound, exhaustively.
        std::uint64_t lb_violations = 0;
        for (std::uint64_t idx = 0; idx < total; ++idx)
            if (!joint_lower_bound_holds(joint_word_at(f, k, n, idx), k)) ++lb_violations;
        {
            ReportRow row;
            row.point = prefix + ";scalar-lower-bound";
            row.oracle = std::to_string(lb_violations);
            row.formula = "0";
            row.source = "lower-bound-property";
            row.match = lb_violations == 0;
            row.regime = Regime::interior;
            rep.rows.push_back(std::move(row));
        }

        // Divisor-condition predicate vs the solver, per monic Q with
        // 2 deg Q <= k; strict interior is asserted, the boundary is logged.
        for (std::size_t d = 0; 2 * d <= k; ++d) {
            std::uint64_t nq = monic_count(f, static_cast<int>(d));
            for (std::uint64_t qi = 0; qi < nq; ++qi) {
                Poly q = monic_at(f, static_cast<int>(d), qi);
                std::uint64_t mismatches = 0;
                for (std::uint64_t idx = 0; idx < total; ++idx) {
                    auto words = joint_word_at(f, k, n, idx);
                    bool predicate = scalar_consistency_predicate(words, q, k).conditions_hold;
                    bool solver_eq = solve_min_denom(words, k).q_min == q;
                    if (predicate != solver_eq) ++mismatches;
                }
                ReportRow row;
                row.point = prefix + ";Q=" + to_string(q) + ";predicate";
                row.oracle = std::to_string(mismatches);
                row.formula = "0";
                row.source = "scalar-divisor-predicate";
                row.match = mismatches == 0;
                row.regime = 2 * d < k ? Regime::interior : Regime::boundary;
                rep.rows.push_back(std::move(row));
            }
        }
    }
    return rep;
}

ComparisonReport qmin_distribution_report(const Field& f, std::size_t k_max,
                                          std::uint64_t budget, unsigned threads) {
    ComparisonReport rep;
    rep.title = "minimal denominator distribution vs closed forms";
    rep.spec = {{"q", f.size()}, {"k_max", k_max}, {"n", 1}};
    for (std::size_t k = 1; k <= k_max; ++k) {
        CensusSpec spec{f, k, 1, CensusMode::qmin_distribution, budget, threads};
        auto counts = qmin_census_counts(spec);
        Rational space = qpow(f.size(), static_cast<std::int64_t>(k));
        std::string prefix = point_prefix(f, k, 1);

        for (const auto& [q, count] : counts) {
            Rational oracle = Rational(Int(count)) / space;
            {
                ReportRow row;
                row.point = prefix + ";Q=" + to_string(q);
                row.oracle = to_string(oracle);
                row.formula = to_string(qmin_mass_totient(q, k));
                row.source = "totient-mass";
                row.match = row.oracle == row.formula;
                row.regime = qmin_mass_interior(q, k) ? Regime::interior : Regime::boundary;
                rep.rows.push_back(std::move(row));
            }
            // The verbatim expression is only stated for deg Q <= ceil(k/2)
            // (and its tuple enumeration is only tractable there).
            if (static_cast<std::size_t>(q.degree()) <= (k + 1) / 2) {
                ReportRow row;
                row.point = prefix + ";Q=" + to_string(q);
                row.oracle = to_string(oracle);
                row.formula = to_string(qmin_mass_closed_form_verbatim(q, k));
                row.source = "qmin-closed-form-verbatim";
                row.match = row.oracle == row.formula;
                row.regime = Regime::boundary;
                rep.rows.push_back(std::move(row));
            }
        }

        // Per-degree sums must reproduce the degree census exactly.
        CensusSpec dspec{f, k, 1, CensusMode::deg_distribution, budget, threads};
        auto deg_counts = deg_census_counts(dspec);
        std::vector<std::uint64_t> by_degree(k + 1, 0);
        for (const auto& [q, count] : counts)
            by_degree[static_cast<std::size_t>(q.degree())] += count;
        for (std::size_t d = 0; d <= k; ++d) {
            ReportRow row;
            row.point = prefix + ";d=" + std::to_string(d) + ";degree-sum";
            row.oracle = std::to_string(by_degree[d]);
            row.formula = std::to_string(deg_counts[d]);
            row.source = "qmin-deg-cross-consistency";
            row.match = by_degree[d] == deg_counts[d];
            row.regime = Regime::interior;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

ComparisonReport expectation_report(const Field& f, std::size_t k_max, std::uint64_t budget,
                                    unsigned threads) {
    ComparisonReport rep;
    rep.title = "expected degree vs closed form";
    rep.spec = {{"q", f.size()}, {"k_max", k_max}, {"n", 1}};
    for (std::size_t k = 1; k <= k_max; ++k) {
        CensusSpec spec{f, k, 1, CensusMode::deg_distribution, budget, threads};
        auto counts = deg_census_counts(spec);
        Rational space = qpow(f.size(), static_cast<std::int64_t>(k));
        std::vector<Rational> empirical, printed;
        for (std::size_t d = 0; d <= k; ++d) {
            empirical.push_back(Rational(Int(counts[d])) / space);
            printed.push_back(pmf_deg_closed_form(f.size(), k, d));
        }
        Rational closed = expectation_closed_form(f.size(), k);
        std::string prefix = point_prefix(f, k, 1);
        {
            ReportRow row;
            row.point = prefix + ";expectation";
            row.oracle = to_string(expectation_from_pmf(empirical));
            row.formula = to_string(closed);
            row.source = "expectation-closed-form";
            row.match = row.oracle == row.formula;
            row.regime = k == 1 ? Regime::interior : Regime::boundary;
            rep.rows.push_back(std::move(row));
        }
        {
            ReportRow row;
            row.point = prefix + ";expectation-pmf-sum";
            row.oracle = to_string(expectation_from_pmf(printed));
            row.formula = to_string(closed);
            row.source = "expectation-closed-form-vs-pmf-sum";
            row.match = row.oracle == row.formula;
            row.regime = k == 1 ? Regime::interior : Regime::boundary;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

Field residue_field(const Poly& P) {
    if (P.field().extension_degree() != 1)
        throw std::invalid_argument("residue fields are built over prime base fields only");
    if (!P.is_monic() || !is_irreducible(P))
        throw std::invalid_argument("residue field needs a monic irreducible P");
    std::uint32_t p = P.field().characteristic();
    if (P.degree() == 1) return Field::prime(p);
    std::vector<std::uint32_t> modulus;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(P.degree()); ++i)
        modulus.push_back(P.coeff(i).index());
    return Field::extension(p, static_cast<std::uint32_t>(P.degree()), modulus);
}

ComparisonReport padic_block_report(const Poly& P, std::size_t k_max, std::uint64_t budget,
                                    unsigned threads) {
    ComparisonReport rep;
    rep.title = "residue-field block census vs closed form";
    Field residue = residue_field(P);
    rep.spec = {{"P", to_string(P)},
                {"base_q", P.field().size()},
                {"residue_q", residue.size()},
                {"k_max", k_max}};
    for (std::size_t k = 1; k <= k_max; ++k) {
        for (std::size_t d = 1; d <= (k + 1) / 2; ++d) {
            std::uint64_t census = block_census_atleast(residue, k, d, budget, threads);
            BlockDimension bd = block_count_closed_form(P, k, d);
            ReportRow row;
            std::ostringstream point;
            point << "P=" << to_string(P) << ";q=" << P.field().size() << ";k=" << k
                  << ";d=" << d;
            row.point = point.str();
            row.oracle = std::to_string(census);
            row.formula = bd.count.str();
            row.source = "block-count-closed-form";
            row.match = Int(census) == bd.count;
            row.regime = d == 1 ? Regime::interior : Regime::boundary;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

ComparisonReport primitive_tuple_report(const Field& f, int deg_max, std::size_t len_max) {
    ComparisonReport rep;
    rep.title = "primitive divisor tuples: enumeration vs closed form";
    rep.spec = {{"q", f.size()}, {"deg_max", deg_max}, {"len_max", len_max}};
    for (int deg = 1; deg <= deg_max; ++deg) {
        std::uint64_t n = monic_count(f, deg);
        for (std::uint64_t i = 0; i < n; ++i) {
            Poly q = monic_at(f, deg, i);
            for (std::size_t len = 1; len <= len_max; ++len) {
                std::uint64_t truth = primitive_tuple_count_enum(q, len);
                std::int64_t printed = primitive_tuple_count_closed_form(q, len);
                ReportRow row;
                row.point = "q=" + std::to_string(f.size()) + ";Q=" + to_string(q) +
                            ";l=" + std::to_string(len);
                row.oracle = std::to_string(truth);
                row.formula = std::to_string(printed);
                row.source = "primitive-tuple-closed-form";
                row.match = printed >= 0 && truth == static_cast<std::uint64_t>(printed);
                row.regime = Regime::boundary;
                rep.rows.push_back(std::move(row));
            }
        }
    }
    return rep;
}

HankelReports square_rank_report(const Field& f, std::size_t h_max, std::uint64_t budget) {
    HankelReports out;
    out.cmp.title = "square Hankel rank census vs closed form";
    out.cmp.spec = {{"q", f.size()}, {"h_max", h_max}};
    for (std::size_t h = 1; h <= h_max; ++h) {
        auto census = square_rank_census(f, h, budget);
        for (std::size_t r = 0; r <= h; ++r) {
            std::uint64_t count = census.count(r) ? census.at(r) : 0;
            Int formula = square_rank_count_closed_form(r, h, f.size());
            ReportRow row;
            row.point = "q=" + std::to_string(f.size()) + ";h=" + std::to_string(h) +
                        ";rank=" + std::to_string(r);
            row.oracle = std::to_string(count);
            row.formula = formula.str();
            row.source = "square-rank-count";
            row.match = Int(count) == formula;
            row.regime = Regime::interior;
            out.cmp.rows.push_back(std::move(row));
            out.census_rows.push_back({f.size(), h, h, std::to_string(r), count, formula.str(),
                                       Int(count) == formula});
        }
    }
    return out;
}

HankelReports low_rank_report(const Field& f, std::size_t kl_max, std::uint64_t budget) {
    HankelReports out;
    out.cmp.title = "low-rank Hankel census vs closed form";
    out.cmp.spec = {{"q", f.size()}, {"kl_max", kl_max}};
    for (std::size_t k = 1; k <= kl_max; ++k) {
        for (std::size_t l = 1; l <= kl_max; ++l) {
            std::size_t rmax = std::min(k, l) - 1;
            for (std::size_t r = 0; r <= rmax; ++r) {
                std::uint64_t count = rank_atmost_census(f, k, l, r, budget);
                Int formula = low_rank_count_closed_form(r, f.size());
                ReportRow row;
                row.point = "q=" + std::to_string(f.size()) + ";k=" + std::to_string(k) +
                            ";l=" + std::to_string(l) + ";r=" + std::to_string(r);
                row.oracle = std::to_string(count);
                row.formula = formula.str();
                row.source = "low-rank-count";
                row.match = Int(count) == formula;
                row.regime = Regime::interior;
                out.cmp.rows.push_back(std::move(row));
                out.census_rows.push_back({f.size(), k, l, std::to_string(r), count,
                                           formula.str(), Int(count) == formula});
            }
        }
    }
    return out;
}

bool SuiteResult::ok() const {
    for (const auto& [stem, rep] : reports)
        if (!rep.interior_ok()) return false;
    return true;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
    SuiteResult suite;
    auto add = [&](const std::string& stem, ComparisonReport rep) {
        suite.reports.emplace_back(stem, std::move(rep));
    };

    for (std::uint32_t q : cfg.qs) {
        Field f = Field::prime(q);
        std::string qs = std::to_string(q);
        add("deg_q" + qs, deg_distribution_report(f, cfg.k_max, cfg.budget, cfg.threads));
        add("qmin_q" + qs, qmin_distribution_report(f, cfg.k_max, cfg.budget, cfg.threads));
        add("expectation_q" + qs, expectation_report(f, cfg.k_max, cfg.budget, cfg.threads));
    }

    bool has2 = false;
    for (std::uint32_t q : cfg.qs) has2 = has2 || q == 2;
    if (has2) add("primitive_tuples_q2", primitive_tuple_report(Field::prime(2), 3, 4));
    if (has2 && cfg.joint_k_max >= 1) {
        Field f2 = Field::prime(2);
        add("joint_q2_n2",
            joint_distribution_report(f2, cfg.joint_k_max, 2, cfg.budget, cfg.threads));
    }

    if (cfg.hankel) {
        for (std::uint32_t q : cfg.qs) {
            Field f = Field::prime(q);
            std::size_t h_max = q == 2 ? 3 : 2;
            HankelReports sq = square_rank_report(f, h_max, cfg.budget);
            add("hankel_square_q" + std::to_string(q), std::move(sq.cmp));
            suite.census_csvs.emplace_back("hankel_square_q" + std::to_string(q),
                                           std::move(sq.census_rows));
            HankelReports lr = low_rank_report(f, 4, cfg.budget);
            add("hankel_lowrank_q" + std::to_string(q), std::move(lr.cmp));
            suite.census_csvs.emplace_back("hankel_lowrank_q" + std::to_string(q),
                                           std::move(lr.census_rows));
        }
        if (has2) {
            Field f4 = Field::extension(2, 2);
            HankelReports lr = low_rank_report(f4, 3, cfg.budget);
            add("hankel_lowrank_q4", std::move(lr.cmp));
            suite.census_csvs.emplace_back("hankel_lowrank_q4", std::move(lr.census_rows));
        }
    }

    if (cfg.padic) {
        std::size_t pk = std::min<std::size_t>(cfg.k_max, 4);
        for (std::uint32_t q : cfg.qs) {
            Field f = Field::prime(q);
            add("padic_x_q" + std::to_string(q),
                padic_block_report(Poly::x(f), pk, cfg.budget, cfg.threads));
        }
        if (has2) {
            Field f2 = Field::prime(2);
            add("padic_quadratic_q2",
                padic_block_report(parse_poly(f2, "x^2+x+1"), pk, cfg.budget, cfg.threads));
        }
    }

    suite.discrepancies.title = "discrepancy report: every formula mismatch";
    suite.discrepancies.spec = {{"k_max", cfg.k_max}};
    for (const auto& [stem, rep] : suite.reports)
        for (const auto& row : rep.rows)
            if (!row.match) {
                ReportRow copy = row;
                copy.point = "report=" + stem + ";" + copy.point;
                suite.discrepancies.rows.push_back(std::move(copy));
            }
    return suite;
}

void write_suite(const SuiteResult& suite, const std::string& outdir) {
    namespace fs = std::filesystem;
    fs::create_directories(outdir);
    auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream out(fs::path(outdir) / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + name + " in " + outdir);
        out << body;
    };
    nlohmann::ordered_json summary;
    summary["generator"] = "mindenom";
    summary["ok"] = suite.ok();
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& [stem, rep] : suite.reports) {
        write(stem + ".json", rep.json().dump(2) + "\n");
        write(stem + ".csv", rep.csv());
        nlohmann::ordered_json item;
        item["report"] = stem;
        item["hash"] = rep.hash();
        item["interior_mismatches"] = rep.mismatches(Regime::interior);
        items.push_back(std::move(item));
    }
    for (const auto& [stem, rows] : suite.census_csvs)
        write(stem + "_census.csv", hankel_census_csv(rows));
    write("discrepancies.json", suite.discrepancies.json().dump(2) + "\n");
    write("discrepancies.csv", suite.discrepancies.csv());
    summary["reports"] = std::move(items);
    write("summary.json", summary.dump(2) + "\n");
}

} // namespace mindenom
