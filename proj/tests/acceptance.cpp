// Acceptance criteria 1-11, one PASS/FAIL line each.
//
// Criterion 7 is known red: B2, B3, C0 and b are not reproduced. The
// artifact's values for B2 and C0 are checked here against series
// evaluations of the exact coefficients. The process exits nonzero if any
// other criterion fails or if the set of red constants changes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "chordal/maps.hpp"
#include "chordal/polynomial.hpp"
#include "chordal/reference_tables.hpp"
#include "chordal/rootfind.hpp"
#include "chordal/verify.hpp"

using namespace chordal;
namespace mp = boost::multiprecision;

namespace {

// Pinned tolerances.
constexpr double kFourDigits = 5e-4;   // relative, "4 significant digits"
constexpr double kFiveDigits = 5e-5;   // relative, "5 significant digits"
constexpr double kFitAgreement = 0.02; // analytic vs fitted leading constant
constexpr double kTablesSeconds = 10, kOracleSeconds = 60, kConstantsSeconds = 30;
const std::set<std::string> kKnownRed7 = {"B2", "B3", "C0", "b"};

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x, int prec = 6) {
  std::ostringstream s;
  s.precision(prec);
  s << x;
  return s.str();
}

HPReal printed(int theorem, const std::string& name) {
  for (const auto& p : reference::printed_constants)
    if (p.theorem == theorem && name == p.name) return HPReal(p.value);
  throw std::runtime_error("no printed value for " + name);
}

bool within(const HPReal& x, const HPReal& expected, double rel) {
  return mp::abs(x / expected - 1) <= HPReal(rel);
}

// Names from `names` that miss the printed value at 4 significant digits.
std::vector<std::string> mismatches(const ConstantsReport& r, const std::vector<std::string>& names,
                                    std::string& detail) {
  std::vector<std::string> bad;
  for (const auto& n : names) {
    HPReal p = printed(r.theorem, n);
    if (!within(r.at(n), p, kFourDigits)) {
      bad.push_back(n);
      detail += " " + n + "=" + format_real(r.at(n), 5) + " (printed " + format_real(p, 5) + ");";
    }
  }
  return bad;
}

Verdict criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  auto compare = [&](const CountTable& t, auto column) {
    for (std::size_t i = 0; i < 20; ++i, ++checked)
      if (t.rows[i].second != Integer(column(i))) return false;
    return true;
  };
  bool ok = compare(count_table(GraphFamily::all, 20, 64), [](auto i) { return reference::graph_table[i].g; }) &&
            compare(count_table(GraphFamily::connected, 20, 64), [](auto i) { return reference::graph_table[i].c; }) &&
            compare(count_table(GraphFamily::two_connected, 20, 64),
                    [](auto i) { return reference::graph_table[i].b; }) &&
            compare(map_count_table(MapFamily::all_maps, 20, 64), [](auto i) { return reference::map_table[i].m; }) &&
            compare(map_count_table(MapFamily::two_connected_maps, 20, 64),
                    [](auto i) { return reference::map_table[i].b; });
  double s = seconds_since(t0);
  return {ok && s < kTablesSeconds, std::to_string(checked) + "/100 entries exact, " + fmt(s, 3) + " s (limit 10 s)"};
}

Verdict criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  auto census = oracle::census_table(6);
  bool ok = true;
  for (auto [family, pick] : {std::pair{GraphFamily::all, &oracle::Census::graphs},
                              std::pair{GraphFamily::connected, &oracle::Census::connected},
                              std::pair{GraphFamily::two_connected, &oracle::Census::two_connected}}) {
    CountTable t = count_table(family, 6, 64);
    for (unsigned n = 1; n <= 6; ++n) ok = ok && t.rows[n - 1].second == Integer(std::to_string(census[n - 1].*pick));
  }
  const oracle::Census& c6 = census[5];
  ok = ok && c6.graphs == 17962 && c6.connected == 13116 && c6.two_connected == 2880;
  double s = seconds_since(t0);
  return {ok && s < kOracleSeconds, "n=6: " + std::to_string(c6.graphs) + "/" + std::to_string(c6.connected) + "/" +
                                        std::to_string(c6.two_connected) + ", " + fmt(s, 3) + " s (limit 60 s)"};
}

Verdict criterion3() {
  TruncatedSeries s = ternary_series(64);
  bool ok = s[0] == 0;
  for (unsigned n = 1; n <= 64; ++n) ok = ok && s[n] == Rational(binomial(3 * n, n) / (2 * n + 1));
  std::vector<Integer> u = egf_counts(unrooted_triangulation_series(12));
  bool t_ok = true;
  for (unsigned n = 4; n <= 12; ++n) t_ok = t_ok && u[n] == count_3connected(n);
  return {ok && t_ok, std::string("S closed form n<=64 ") + (ok ? "exact" : "wrong") + "; t_n vs n![z^n]U, 4<=n<=12 " +
                          (t_ok ? "exact" : "wrong")};
}

Verdict criterion4() {
  bool ok = two_connected_series_closed(64) == at_y(two_connected_series_bivariate(64), 1);
  return {ok, "closed and integrated B agree to order 64"};
}

Verdict criterion5() {
  TruncatedSeries b = two_connected_maps_series(64), m = all_maps_series(64);
  bool ann = annihilator_check(transcribed_PB(), b).ok && annihilator_check(transcribed_PM(), m).ok;
  BiPolynomial e = eliminate_B_annihilator(), d = derive_M_annihilator(transcribed_PB());
  bool div = divide_exact(e, transcribed_PB()).has_value() && divide_exact(d, transcribed_PM()).has_value();
  bool derived_ann = annihilator_check(e, b).ok && annihilator_check(d, m).ok;
  return {ann && div && derived_ann, std::string("P_B, P_M vanish mod z^65: ") + (ann ? "yes" : "no") +
                                         "; derived annihilators divisible: " + (div ? "yes" : "no")};
}

Verdict criterion6() {
  IntPolynomial fb = transcribed_disc_B_factor(), fm = transcribed_disc_M_factor();
  bool div = fb.degree() == 6 && fm.degree() == 12 && divide_exact(discriminant(transcribed_PB()), fb) &&
             divide_exact(discriminant(transcribed_PM()), fm);
  auto pos = [](const IntPolynomial& p) {
    std::vector<double> out;
    for (const auto& iv : isolate_real_roots(p))
      if (iv.hi > 0) out.push_back(refine(p, iv, Rational(1, 1000000000000L)).lo.get_d());
    return out;
  };
  auto rb = pos(fb), rm = pos(fm);
  auto near = [](double x, double y) { return std::abs(x / y - 1) <= kFiveDigits; };
  bool roots = rb.size() == 1 && near(rb[0], 0.27370) && rm.size() == 2 && near(rm[0], 0.15616) &&
               near(rm[1], 0.49512);
  PrecisionScope scope(256);
  auto db = check_modulus_dominance(all_roots(fb, 256), HPReal(rb.empty() ? 0.2737 : rb[0]));
  auto dm = check_modulus_dominance(all_roots(fm, 256), HPReal(rm.empty() ? 0.15616 : rm[0]));
  // Roots of smaller modulus exist for both factors; they are not singularities
  // of the counting branches (radius of convergence = sigma_b, sigma; criterion 9 fits).
  bool dom = db.unique_on_circle && dm.unique_on_circle;
  std::string detail = std::string("divisible: ") + (div ? "yes" : "no") + "; roots " + fmt(rb.empty() ? 0 : rb[0]) +
                       " | " + (rm.size() == 2 ? fmt(rm[0]) + ", " + fmt(rm[1]) : "?") + "; dominance gaps " +
                       format_real(db.gap, 3) + " > " + format_real(db.bound, 3) + ", " + format_real(dm.gap, 3) +
                       " > " + format_real(dm.bound, 3);
  return {div && roots && dom, detail};
}

Verdict criterion7(bool& red_as_documented) {
  auto t0 = std::chrono::steady_clock::now();
  ConstantsReport k = theorem1_constants(256);
  double s = seconds_since(t0);
  std::string detail;
  auto bad = mismatches(k, {"rho_b", "E0", "S0", "E1", "B0", "B2", "B3", "tau", "rho", "gamma", "gamma_b", "C0", "C2", "b"},
                        detail);
  std::set<std::string> red(bad.begin(), bad.end());
  red_as_documented = red == kKnownRed7 && s < kConstantsSeconds;

  // Series evaluations of the exact coefficients at the singularities.
  PrecisionScope scope(256);
  GraphSeriesY1 g = graph_series_y1(200);
  HPReal b2_series = evaluate(derivative(g.two_connected), k.at("rho_b")) * k.at("rho_b");
  HPReal c0_series = evaluate(g.connected, k.at("rho"));
  std::string oracle = " series check: rho_b B'(rho_b) = " + format_real(b2_series, 5) + ", C(rho) = " +
                       format_real(c0_series, 5) + " (200 terms)";
  std::string verdict = std::to_string(14 - bad.size()) + "/14 at 4 digits, " + fmt(s, 3) + " s;";
  if (!bad.empty()) verdict += " red:" + detail + oracle;
  return {bad.empty() && s < kConstantsSeconds, verdict};
}

Verdict criterion8() {
  ConstantsReport k = theorem2_constants(256);
  std::string detail;
  auto bad = mismatches(k, {"1/sigma_b", "1/sigma", "B(sigma_b)", "b1", "M(sigma)", "m1"}, detail);
  return {bad.empty(), std::to_string(6 - bad.size()) + "/6 at 4 digits" + (bad.empty() ? "" : ";" + detail)};
}

Verdict criterion9() {
  std::string detail;
  bool ok = true;
  for (int theorem : {1, 2}) {
    TheoremReconciliation r = reconcile_theorem(theorem, 256, 256);
    for (const auto& c : r.constants) {
      bool agree = c.analytic_vs_empirical < HPReal(kFitAgreement);
      ok = ok && agree && c.factor.has_value();
      detail += " " + std::to_string(theorem) + ":" + c.name + " fit " + format_real(c.analytic_vs_empirical, 2) +
                ", printed/analytic " + (c.factor ? format_real(*c.factor, 5) : "?") +
                (c.factor_form.empty() ? "" : " = " + c.factor_form) + ";";
    }
  }
  return {ok, "order 256;" + detail};
}

Verdict criterion10() {
  ConstantsReport k1 = theorem1_constants(256), k2 = theorem2_constants(256);
  PrecisionScope scope(256);
  HPReal comp = k1.at("rho_b*E0^3"), maps = k2.at("sigma(1+M(sigma))^2");
  bool ok = within(comp, HPReal("0.14665"), kFourDigits) && comp < HPReal(4) / 27 &&
            k1.at("tau") < k1.at("rho_b") && within(maps, HPReal(reference::printed_subcritical_maps), kFourDigits) &&
            maps < k2.at("sigma_b");
  return {ok, "rho_b E0^3 = " + format_real(comp, 6) + " < 4/27; rho_b - tau = " +
                  format_real(k1.at("rho_b") - k1.at("tau"), 3) + " > 0; sigma(1+M)^2 = " + format_real(maps, 6) +
                  " < sigma_b = " + format_real(k2.at("sigma_b"), 6)};
}

Verdict criterion11() {
  std::string cmd = std::string(CHORDAL_CLI_PATH) + " verify --format csv > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  bool exit0 = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
  // A failing check names module, invariant and order.
  CheckResult c;
  c.module = "chordal-maps";
  c.invariant = "P_B(z, B(z)) = 0";
  AnnihilatorResult a = annihilator_check(parse_bipolynomial("w - z^2"), two_connected_maps_series(8));
  c.ok = a.ok;
  c.first_failing_order = a.first_failing_order;
  std::string text = describe(c);
  bool named = !c.ok && text.find("chordal-maps") != std::string::npos &&
               text.find("first failing order 1") != std::string::npos;
  return {exit0 && named, std::string("`verify` exit ") + (exit0 ? "0" : "nonzero") + "; failure report: \"" + text + "\""};
}

}  // namespace

int main() {
  bool red_as_documented = false;
  std::vector<std::function<Verdict()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
      [&] { return criterion7(red_as_documented); },
      criterion8, criterion9, criterion10, criterion11};
  int passed = 0;
  bool unexpected = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << (i + 1) << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << std::endl;
    if (v.pass) ++passed;
    else if (!(i == 6 && red_as_documented)) unexpected = true;
  }
  std::cout << passed << "/11 criteria pass";
  if (!unexpected && passed == 10) std::cout << "; criterion 7 is red as documented in README.md";
  std::cout << std::endl;
  return unexpected ? 1 : 0;
}
