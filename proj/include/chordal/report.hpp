#pragma once

// JSON and CSV rendering of tables, constants, fits and verification runs.
// Large integers and high-precision reals are written as decimal strings.

#include <string>
#include <vector>

#include "json.hpp"

#include "chordal/asymptotics.hpp"
#include "chordal/graphs.hpp"
#include "chordal/oracle.hpp"
#include "chordal/singular.hpp"

namespace chordal {

using Json = nlohmann::ordered_json;

/// Scientific notation with `digits` significant digits.
std::string format_real(const HPReal& x, unsigned digits = 30);

Json to_json(const CountTable& t);
/// Header "n,<family>", one row per n.
std::string to_csv(const CountTable& t);
/// Tables sharing the same n range side by side: "n,<f1>,<f2>,...".
std::string to_csv(const std::vector<CountTable>& tables);

Json series_json(const std::string& name, const TruncatedSeries& s);
/// Header "n,coefficient"; rationals as p/q.
std::string series_csv(const TruncatedSeries& s);

Json to_json(const ConstantsReport& r, unsigned digits = 30);
std::string to_csv(const ConstantsReport& r, unsigned digits = 30);

Json to_json(const FitResult& f, unsigned digits = 20);
Json to_json(const Reconciliation& r, unsigned digits = 20);
Json to_json(const TheoremReconciliation& r, unsigned digits = 20);

/// Census rows as count tables, one per statistic, with the graph family
/// spellings of count_table.
std::vector<CountTable> census_tables(const std::vector<oracle::Census>& rows);

}  // namespace chordal
