#include "chordal/report.hpp"

#include <sstream>
#include <stdexcept>

namespace chordal {

std::string format_real(const HPReal& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits > 0 ? digits - 1 : 0), std::ios::scientific);
}

Json to_json(const CountTable& t) {
  Json rows = Json::array();
  for (const auto& [n, count] : t.rows) rows.push_back({{"n", n}, {"count", count.get_str()}});
  return {{"family", t.family}, {"rows", rows}};
}

std::string to_csv(const CountTable& t) { return to_csv(std::vector<CountTable>{t}); }

std::string to_csv(const std::vector<CountTable>& tables) {
  if (tables.empty()) return "";
  std::ostringstream out;
  out << "n";
  for (const auto& t : tables) out << ',' << t.family;
  out << '\n';
  for (std::size_t i = 0; i < tables[0].rows.size(); ++i) {
    out << tables[0].rows[i].first;
    for (const auto& t : tables) {
      if (t.rows.size() != tables[0].rows.size() || t.rows[i].first != tables[0].rows[i].first)
        throw std::invalid_argument("to_csv: tables cover different n ranges");
      out << ',' << t.rows[i].second.get_str();
    }
    out << '\n';
  }
  return out.str();
}

Json series_json(const std::string& name, const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (std::size_t n = 0; n <= s.order(); ++n) coeffs.push_back(s[n].get_str());
  return {{"series", name}, {"order", s.order()}, {"coefficients", coeffs}};
}

std::string series_csv(const TruncatedSeries& s) {
  std::ostringstream out;
  out << "n,coefficient\n";
  for (std::size_t n = 0; n <= s.order(); ++n) out << n << ',' << s[n].get_str() << '\n';
  return out.str();
}

Json to_json(const ConstantsReport& r, unsigned digits) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"name", e.name}, {"value", format_real(e.value, digits)}, {"formula", e.formula}});
  return {{"theorem", r.theorem}, {"precision_bits", r.precision_bits}, {"constants", entries}};
}

std::string to_csv(const ConstantsReport& r, unsigned digits) {
  std::ostringstream out;
  out << "name,value\n";
  for (const auto& e : r.entries) out << e.name << ',' << format_real(e.value, digits) << '\n';
  return out.str();
}

Json to_json(const FitResult& f, unsigned digits) {
  Json table = Json::array();
  for (const auto& row : f.table)
    table.push_back({{"n", row.n},
                     {"rho", format_real(row.rho, digits)},
                     {"exponent", format_real(row.exponent, digits)},
                     {"constant", format_real(row.constant, digits)}});
  return {{"terms", f.terms},
          {"depth", f.depth},
          {"stable", f.stable},
          {"rho", format_real(f.rho, digits)},
          {"inverse_rho", format_real(1 / f.rho, digits)},
          {"exponent", format_real(f.exponent, digits)},
          {"structural_exponent", f.structural_exponent.get_str()},
          {"constant", format_real(f.constant, digits)},
          {"table", table}};
}

Json to_json(const Reconciliation& r, unsigned digits) {
  Json j = {{"name", r.name},
            {"analytic", format_real(r.analytic, digits)},
            {"empirical", format_real(r.empirical, digits)},
            {"analytic_vs_empirical", format_real(r.analytic_vs_empirical, 6)}};
  j["printed"] = r.printed ? Json(format_real(*r.printed, digits)) : Json(nullptr);
  j["analytic_vs_printed"] = r.analytic_vs_printed ? Json(format_real(*r.analytic_vs_printed, 6)) : Json(nullptr);
  j["factor_printed_over_analytic"] = r.factor ? Json(format_real(*r.factor, 12)) : Json(nullptr);
  j["factor_form"] = r.factor_form;
  j["discrepancy"] = r.discrepancy;
  return j;
}

Json to_json(const TheoremReconciliation& r, unsigned digits) {
  Json constants = Json::array(), growth = Json::array();
  for (const auto& c : r.constants) constants.push_back(to_json(c, digits));
  for (const auto& g : r.growth) growth.push_back(to_json(g, digits));
  return {{"theorem", r.theorem}, {"order", r.order}, {"constants", constants}, {"growth", growth}};
}

std::vector<CountTable> census_tables(const std::vector<oracle::Census>& rows) {
  std::vector<CountTable> t{{to_string(GraphFamily::all), {}},
                            {to_string(GraphFamily::connected), {}},
                            {to_string(GraphFamily::two_connected), {}},
                            {to_string(GraphFamily::three_connected), {}},
                            {to_string(GraphFamily::triangulations_unrooted), {}}};
  auto big = [](std::uint64_t v) { return Integer(std::to_string(v)); };
  for (const auto& c : rows) {
    t[0].rows.emplace_back(c.n, big(c.graphs));
    t[1].rows.emplace_back(c.n, big(c.connected));
    t[2].rows.emplace_back(c.n, big(c.two_connected));
    t[3].rows.emplace_back(c.n, big(c.three_connected));
    t[4].rows.emplace_back(c.n, big(c.triangulations));
  }
  return t;
}

}  // namespace chordal
