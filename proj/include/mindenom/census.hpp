#pragma once

#include "mindenom/report.hpp"
#include "mindenom/solver.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mindenom {

enum class CensusMode { deg_distribution, qmin_distribution, padic_blocks, hankel_census };

/**
 * One exhaustive enumeration over the word space F_q^{nk}. The word space
 * is chunked contiguously across `threads` workers and merged in chunk
 * order, so results are independent of the parallelism width.
 */
struct CensusSpec {
    Field field;
    std::size_t k = 1;
    std::size_t n = 1;
    CensusMode mode = CensusMode::deg_distribution;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

// Raw exhaustive counts of deg_min over all q^{nk} joint words, by degree.
std::vector<std::uint64_t> deg_census_counts(const CensusSpec& spec);

// Raw exhaustive counts of the canonical Q_min over all q^k words (n = 1).
std::map<Poly, std::uint64_t, PolyLess> qmin_census_counts(const CensusSpec& spec);

// Number of residue-field blocks of length k with deg_min >= d.
std::uint64_t block_census_atleast(const Field& residue_field, std::size_t k, std::size_t d,
                                   std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

// Report builders (rows compared against the closed-form evaluators).
ComparisonReport deg_distribution_report(const Field& f, std::size_t k_max,
                                         std::uint64_t budget = kDefaultBudget,
                                         unsigned threads = 1);
ComparisonReport joint_distribution_report(const Field& f, std::size_t k_max, std::size_t n,
                                           std::uint64_t budget = kDefaultBudget,
                                           unsigned threads = 1);
ComparisonReport qmin_distribution_report(const Field& f, std::size_t k_max,
                                          std::uint64_t budget = kDefaultBudget,
                                          unsigned threads = 1);
ComparisonReport expectation_report(const Field& f, std::size_t k_max,
                                    std::uint64_t budget = kDefaultBudget, unsigned threads = 1);
ComparisonReport padic_block_report(const Poly& P, std::size_t k_max,
                                    std::uint64_t budget = kDefaultBudget, unsigned threads = 1);
ComparisonReport primitive_tuple_report(const Field& f, int deg_max, std::size_t len_max);

struct HankelReports {
    ComparisonReport cmp;
    std::vector<HankelCensusRow> census_rows;
};

HankelReports square_rank_report(const Field& f, std::size_t h_max,
                                 std::uint64_t budget = kDefaultBudget);
HankelReports low_rank_report(const Field& f, std::size_t kl_max,
                              std::uint64_t budget = kDefaultBudget);

// Residue field F_q[x]/P for a monic irreducible P over a prime field.
Field residue_field(const Poly& P);

/**
 * The default verification suite: degree and Q_min distributions for
 * q in {2,3} up to k_max, the two-dimensional bounds, both Hankel
 * censuses (including F_4), the residue-field block censuses, the
 * expectation and primitive-tuple comparisons, and the aggregated
 * discrepancy report. Interior mismatches make ok() false.
 */
struct SuiteConfig {
    std::vector<std::uint32_t> qs = {2, 3};
    std::size_t k_max = 6;
    std::size_t joint_k_max = 4; // n = 2 grid (q = 2)
    bool hankel = true;
    bool padic = true;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

struct SuiteResult {
    // (file stem, report) pairs in deterministic order.
    std::vector<std::pair<std::string, ComparisonReport>> reports;
    std::vector<std::pair<std::string, std::vector<HankelCensusRow>>> census_csvs;
    ComparisonReport discrepancies;

    bool ok() const;
};

SuiteResult run_suite(const SuiteConfig& cfg);

// Writes <stem>.json/<stem>.csv per report plus the census CSVs and a
// summary.json into `outdir` (created if missing).
void write_suite(const SuiteResult& suite, const std::string& outdir);

} // namespace mindenom
