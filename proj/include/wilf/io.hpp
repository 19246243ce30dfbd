#pragma once

#include <string>

#include "json.hpp"

#include "wilf/invariants.hpp"
#include "wilf/semigroup.hpp"
#include "wilf/tree.hpp"

namespace wilf {

// Insertion-ordered JSON keeps every rendering byte-stable.
using Json = nlohmann::ordered_json;

/// {generators, cap, m, c, frobenius, genus}; generators is the minimal
/// generating set and cap the conductor, so build() round-trips it exactly.
Json semigroup_json(const NumericalSemigroup& s);

Json report_json(const WilfReport& r);
std::string report_csv_header();
std::string report_csv_row(const WilfReport& r);

Json decomposition_json(const LevelDecomposition& d);
Json grading_json(const GradingCheck& g);

/// Full analyze payload: semigroup, report, levels, grading.
Json analyze_json(const NumericalSemigroup& s, const WilfReport& r,
                  const LevelDecomposition& d, const GradingCheck& g);
std::string analyze_text(const NumericalSemigroup& s, const WilfReport& r,
                         const LevelDecomposition& d, const GradingCheck& g);

/// "genus,q,count" rows for every nonzero cell, ascending (genus, q).
std::string census_csv(const CensusTable& t);
/// Fixed-width grid: one row per genus, one column per q, with row totals.
std::string census_table_text(const CensusTable& t);
Json census_json(const CensusTable& t);

Json scan_hit_json(const ScanHit& h);
std::string scan_hit_text(const ScanHit& h);

}  // namespace wilf
