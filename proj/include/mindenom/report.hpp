#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mindenom {

/**
 * Regime of a comparison row. Interior rows are assertions: any mismatch
 * fails the suite. Boundary and out-of-regime rows are informational and
 * feed the discrepancy report.
 */
enum class Regime { interior, boundary, out_of_regime };
std::string_view regime_name(Regime r);

struct ReportRow {
    std::string point;   // "q=2;k=4;d=2"
    std::string oracle;  // exact value as a string
    std::string formula; // closed-form value as a string
    std::string source;  // which evaluator produced `formula`
    bool match = false;
    Regime regime = Regime::interior;
};

/**
 * Formula-vs-oracle comparison report. Serialization is deterministic:
 * no wall-clock data, fixed key order, and a content hash over the
 * canonical CSV body.
 */
struct ComparisonReport {
    std::string title;
    nlohmann::ordered_json spec; // parameter echo

    std::vector<ReportRow> rows;

    std::size_t mismatches(Regime r) const;
    bool interior_ok() const { return mismatches(Regime::interior) == 0; }

    std::string csv() const; // header: point,oracle,formula,source,match,regime
    std::string hash() const;
    nlohmann::ordered_json json() const;
};

// Census row in the Hankel serialization schema.
struct HankelCensusRow {
    std::uint32_t q = 0;
    std::size_t k = 0;
    std::size_t l = 0;
    std::string r_or_rank;
    std::uint64_t count = 0;
    std::string formula_value;
    bool match = false;
};

// CSV with columns (q, k, l, r_or_rank, count, formula_value, match).
std::string hankel_census_csv(const std::vector<HankelCensusRow>& rows);

std::uint64_t fnv1a64(std::string_view data);

} // namespace mindenom
