#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mindenom/census.hpp"
#include "mindenom/errors.hpp"
#include "mindenom/parse.hpp"

#include <filesystem>
#include <fstream>

using namespace mindenom;

TEST_CASE("degree census anchors") {
    Field f2 = Field::prime(2);
    CensusSpec spec{f2, 2, 1, CensusMode::deg_distribution, kDefaultBudget, 1};
    CHECK(deg_census_counts(spec) == std::vector<std::uint64_t>{1, 2, 1});
    spec.k = 3;
    CHECK(deg_census_counts(spec) == std::vector<std::uint64_t>{1, 2, 4, 1});
}

TEST_CASE("census counts partition the word space") {
    // The empirical pmf rows sum to exactly 1: counts add up to q^{nk}.
    for (std::uint32_t q : {2u, 3u}) {
        Field f = Field::prime(q);
        for (std::size_t k = 1; k <= 4; ++k)
            for (std::size_t n = 1; n <= 2; ++n) {
                CensusSpec spec{f, k, n, CensusMode::deg_distribution, kDefaultBudget, 1};
                auto counts = deg_census_counts(spec);
                std::uint64_t total = 0;
                for (std::uint64_t c : counts) total += c;
                std::uint64_t space = 1;
                for (std::size_t i = 0; i < n * k; ++i) space *= q;
                CHECK(total == space);

                if (n == 1) {
                    CensusSpec qs{f, k, 1, CensusMode::qmin_distribution, kDefaultBudget, 1};
                    std::uint64_t qtotal = 0;
                    for (const auto& [poly, c] : qmin_census_counts(qs)) qtotal += c;
                    CHECK(qtotal == space);
                }
            }
    }
}

TEST_CASE("degree report: interior rows all match") {
    for (std::uint32_t q : {2u, 3u}) {
        ComparisonReport rep = deg_distribution_report(Field::prime(q), 5);
        CHECK(rep.interior_ok());
        bool saw_boundary_mismatch = false;
        for (const auto& row : rep.rows)
            if (!row.match) {
                CHECK(row.regime != Regime::interior);
                saw_boundary_mismatch = true;
            }
        CHECK(saw_boundary_mismatch); // the printed pmf is wrong beyond floor(k/2)
    }
}

TEST_CASE("qmin census and report") {
    Field f2 = Field::prime(2);
    CensusSpec spec{f2, 2, 1, CensusMode::qmin_distribution, kDefaultBudget, 1};
    auto counts = qmin_census_counts(spec);
    CHECK(counts.at(parse_poly(f2, "x")) == 1);
    CHECK(counts.at(parse_poly(f2, "1")) == 1);
    CHECK(counts.at(parse_poly(f2, "x^2")) == 1); // canonical choice for (0,1)

    ComparisonReport rep = qmin_distribution_report(f2, 4);
    CHECK(rep.interior_ok());
    bool saw_verbatim_mismatch = false;
    for (const auto& row : rep.rows)
        if (row.source == "qmin-closed-form-verbatim" && !row.match) saw_verbatim_mismatch = true;
    CHECK(saw_verbatim_mismatch);
}

TEST_CASE("joint report bounds hold") {
    ComparisonReport rep = joint_distribution_report(Field::prime(2), 3, 2);
    CHECK(rep.interior_ok());
}

TEST_CASE("residue fields") {
    Field f2 = Field::prime(2);
    CHECK(residue_field(Poly::x(f2)).size() == 2);
    Field f4 = residue_field(parse_poly(f2, "x^2+x+1"));
    CHECK(f4.size() == 4);
    CHECK(f4.characteristic() == 2);
    CHECK_THROWS_AS(residue_field(parse_poly(f2, "x^2+1")), std::invalid_argument);
    CHECK_THROWS_AS(residue_field(Poly::x(f4)), std::invalid_argument);
}

TEST_CASE("block census anchors") {
    Field f2 = Field::prime(2);
    Field f3 = Field::prime(3);
    CHECK(block_census_atleast(f2, 2, 1) == 3);
    CHECK(block_census_atleast(f2, 3, 2) == 5); // the closed form says 4
    Field f4 = residue_field(parse_poly(f2, "x^2+x+1"));
    CHECK(block_census_atleast(f4, 2, 1) == 15);
    CHECK(block_census_atleast(f3, 2, 1) == 8);

    ComparisonReport rep = padic_block_report(Poly::x(f2), 3);
    CHECK(rep.interior_ok());
    bool mismatch_row = false;
    for (const auto& row : rep.rows)
        if (row.point == "P=x;q=2;k=3;d=2") {
            CHECK(row.oracle == "5");
            CHECK(row.formula == "4");
            CHECK(!row.match);
            CHECK(row.regime == Regime::boundary);
            mismatch_row = true;
        }
    CHECK(mismatch_row);
}

TEST_CASE("reports are identical across parallelism widths") {
    Field f3 = Field::prime(3);
    ComparisonReport base = deg_distribution_report(f3, 4, kDefaultBudget, 1);
    for (unsigned width : {4u, 8u}) {
        ComparisonReport other = deg_distribution_report(f3, 4, kDefaultBudget, width);
        CHECK(base.csv() == other.csv());
        CHECK(base.json().dump(2) == other.json().dump(2));
        CHECK(base.hash() == other.hash());
    }
    ComparisonReport q1 = qmin_distribution_report(f3, 4, kDefaultBudget, 1);
    ComparisonReport q8 = qmin_distribution_report(f3, 4, kDefaultBudget, 8);
    CHECK(q1.csv() == q8.csv());
}

TEST_CASE("budget guard") {
    Field f3 = Field::prime(3);
    CensusSpec spec{f3, 6, 2, CensusMode::deg_distribution, 1000, 1};
    CHECK_THROWS_AS(deg_census_counts(spec), BudgetError);
    CHECK_THROWS_AS(block_census_atleast(f3, 6, 1, 10), BudgetError);
}

TEST_CASE("report serialization") {
    ComparisonReport rep;
    rep.title = "t";
    rep.spec = {{"q", 2}};
    rep.rows.push_back({"q=2;k=1;d=0", "1/2", "1/2", "pmf-closed-form", true, Regime::interior});
    rep.rows.push_back({"q=2;k=1;d=9", "1/2", "0", "pmf-closed-form", false, Regime::boundary});

    std::string csv = rep.csv();
    CHECK(csv.find("point,oracle,formula,source,match,regime") == 0);
    CHECK(csv.find("q=2;k=1;d=0,1/2,1/2,pmf-closed-form,true,interior") != std::string::npos);

    auto j = rep.json();
    CHECK(j["summary"]["rows"] == 2);
    CHECK(j["summary"]["mismatches_interior"] == 0);
    CHECK(j["summary"]["mismatches_boundary"] == 1);
    CHECK(j["hash"] == rep.hash());
    CHECK(rep.interior_ok());

    // Re-parses under the schema.
    auto parsed = nlohmann::ordered_json::parse(j.dump(2));
    CHECK(parsed["rows"].size() == 2);
    CHECK(parsed["rows"][0]["match"].get<bool>());

    std::vector<HankelCensusRow> hrows = {{2, 2, 2, "1", 3, "3", true}};
    CHECK(hankel_census_csv(hrows) ==
          "q,k,l,r_or_rank,count,formula_value,match\n2,2,2,1,3,3,true\n");
}

TEST_CASE("suite composition") {
    SuiteConfig empty;
    empty.qs = {};
    empty.joint_k_max = 0;
    empty.hankel = false;
    empty.padic = false;
    SuiteResult none = run_suite(empty);
    CHECK(none.reports.empty());
    CHECK(none.discrepancies.rows.empty());
    CHECK(none.ok());

    SuiteConfig small;
    small.qs = {2};
    small.k_max = 3;
    small.joint_k_max = 2;
    SuiteResult res = run_suite(small);
    CHECK(res.ok());
    CHECK(!res.discrepancies.rows.empty());
    bool has_deg = false;
    for (const auto& [stem, rep] : res.reports) has_deg = has_deg || stem == "deg_q2";
    CHECK(has_deg);

    SuiteConfig oversized;
    oversized.qs = {3};
    oversized.k_max = 20;
    oversized.budget = 1000;
    CHECK_THROWS_AS(run_suite(oversized), BudgetError);

    auto dir = std::filesystem::temp_directory_path() / "mindenom_suite_test";
    std::filesystem::remove_all(dir);
    write_suite(res, dir.string());
    CHECK(std::filesystem::exists(dir / "deg_q2.json"));
    CHECK(std::filesystem::exists(dir / "deg_q2.csv"));
    CHECK(std::filesystem::exists(dir / "discrepancies.csv"));
    CHECK(std::filesystem::exists(dir / "summary.json"));
    std::ifstream in(dir / "summary.json");
    nlohmann::json summary = nlohmann::json::parse(in);
    CHECK(summary["ok"].get<bool>());
    std::filesystem::remove_all(dir);
}
