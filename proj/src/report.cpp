#include "mindenom/report.hpp"

#include <iomanip>
#include <sstream>

namespace mindenom {

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::interior: return "interior";
        case Regime::boundary: return "boundary";
        case Regime::out_of_regime: return "out-of-regime";
    }
    return "?";
}

std::size_t ComparisonReport::mismatches(Regime r) const {
    std::size_t n = 0;
    for (const auto& row : rows)
        if (row.regime == r && !row.match) ++n;
    return n;
}

std::string ComparisonReport::csv() const {
    std::ostringstream os;
    os << "point,oracle,formula,source,match,regime\n";
    for (const auto& r : rows)
        os << r.point << "," << r.oracle << "," << r.formula << "," << r.source << ","
           << (r.match ? "true" : "false") << "," << regime_name(r.regime) << "\n";
    return os.str();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string ComparisonReport::hash() const {
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(csv());
    return os.str();
}

nlohmann::ordered_json ComparisonReport::json() const {
    nlohmann::ordered_json j;
    j["title"] = title;
    j["generator"] = "mindenom";
    j["spec"] = spec;
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json jr;
        jr["point"] = r.point;
        jr["oracle"] = r.oracle;
        jr["formula"] = r.formula;
        jr["source"] = r.source;
        jr["match"] = r.match;
        jr["regime"] = std::string(regime_name(r.regime));
        jrows.push_back(std::move(jr));
    }
    j["rows"] = std::move(jrows);
    nlohmann::ordered_json summary;
    summary["rows"] = rows.size();
    std::size_t matches = 0;
    for (const auto& r : rows)
        if (r.match) ++matches;
    summary["matches"] = matches;
    summary["mismatches_interior"] = mismatches(Regime::interior);
    summary["mismatches_boundary"] = mismatches(Regime::boundary);
    summary["mismatches_out_of_regime"] = mismatches(Regime::out_of_regime);
    j["summary"] = std::move(summary);
    j["hash"] = hash();
    return j;
}

std::string hankel_census_csv(const std::vector<HankelCensusRow>& rows) {
    std::ostringstream os;
    os << "q,k,l,r_or_rank,count,formula_value,match\n";
    for (const auto& r : rows)
        os << r.q << "," << r.k << "," << r.l << "," << r.r_or_rank << "," << r.count << ","
           << r.formula_value << "," << (r.match ? "true" : "false") << "\n";
    return os.str();
}

} // namespace mindenom
