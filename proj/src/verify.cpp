#include "chordal/verify.hpp"

#include <chrono>
#include <functional>

#include "chordal/maps.hpp"
#include "chordal/polynomial.hpp"
#include "chordal/reference_tables.hpp"
#include "chordal/rootfind.hpp"

namespace chordal {

namespace mp = boost::multiprecision;

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

std::string describe(const CheckResult& c) {
  std::string s = (c.ok ? "ok   " : "FAIL ") + c.module + ": " + c.invariant;
  if (c.first_failing_order) s += " (first failing order " + std::to_string(*c.first_failing_order) + ")";
  if (!c.detail.empty()) s += ": " + c.detail;
  return s;
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"module", c.module}, {"invariant", c.invariant}, {"ok", c.ok}};
    j["first_failing_order"] = c.first_failing_order ? Json(*c.first_failing_order) : Json(nullptr);
    j["detail"] = c.detail;
    checks.push_back(j);
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

namespace {

struct Outcome {
  bool ok;
  std::optional<std::size_t> order;
  std::string detail;
};

Outcome pass(std::string detail = "") { return {true, std::nullopt, std::move(detail)}; }
Outcome fail_at(std::size_t n, std::string detail = "") { return {false, n, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::nullopt, std::move(detail)}; }

std::optional<std::size_t> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  for (std::size_t k = 0; k <= n; ++k)
    if (a[k] != b[k]) return k;
  return std::nullopt;
}

Outcome table_matches(const CountTable& t, const std::vector<const char*>& expected) {
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (t.rows[i].second != Integer(expected[i]))
      return fail_at(t.rows[i].first, t.family + " = " + t.rows[i].second.get_str() + ", expected " + expected[i]);
  return pass();
}

std::vector<double> positive_roots(const IntPolynomial& p) {
  std::vector<double> out;
  for (const auto& iv : isolate_real_roots(p))
    if (iv.hi > 0) out.push_back(refine(p, iv, Rational(1, 10000000000L)).lo.get_d());
  return out;
}

bool five_digits(double x, double expected) { return std::abs(x - expected) <= 0.5e-4 * std::abs(expected); }

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  VerifyReport report;
  PrecisionScope scope(opt.precision_bits);
  const std::size_t N = opt.order;
  bool stop = false;

  auto run = [&](const std::string& module, const std::string& invariant, const std::function<Outcome()>& body) {
    if (stop) return;
    auto t0 = std::chrono::steady_clock::now();
    CheckResult c;
    c.module = module;
    c.invariant = invariant;
    try {
      Outcome o = body();
      c.ok = o.ok;
      c.first_failing_order = o.order;
      c.detail = o.detail;
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(c);
    if (!c.ok && opt.fail_fast) stop = true;
  };

  // exact-series and labelled-graphs
  run("exact-series", "graph counts g_n, c_n, b_n equal the reference table, n <= 20", [&] {
    std::vector<const char*> g, c, b;
    for (const auto& row : reference::graph_table) {
      g.push_back(row.g);
      c.push_back(row.c);
      b.push_back(row.b);
    }
    const std::size_t order = std::max<std::size_t>(N, 20);
    for (auto [family, expected] : {std::pair{GraphFamily::all, &g}, std::pair{GraphFamily::connected, &c},
                                    std::pair{GraphFamily::two_connected, &b}}) {
      Outcome o = table_matches(count_table(family, 20, order), *expected);
      if (!o.ok) return o;
    }
    return pass();
  });
  run("exact-series", "map counts M_n, B_n equal the reference table, n <= 20", [&] {
    std::vector<const char*> m, b;
    for (const auto& row : reference::map_table) {
      m.push_back(row.m);
      b.push_back(row.b);
    }
    const std::size_t order = std::max<std::size_t>(N, 20);
    Outcome o = table_matches(map_count_table(MapFamily::all_maps, 20, order), m);
    if (!o.ok) return o;
    return table_matches(map_count_table(MapFamily::two_connected_maps, 20, order), b);
  });
  run("exact-series", "[z^n]S = binom(3n,n)/(2n+1) for n >= 1", [&] {
    TruncatedSeries s = ternary_series(N);
    if (s[0] != 0) return fail_at(0);
    for (std::size_t n = 1; n <= N; ++n) {
      unsigned k = static_cast<unsigned>(n);
      if (s[n] != Rational(binomial(3 * k, k) / (2 * k + 1))) return fail_at(n);
    }
    return pass("n <= " + std::to_string(N));
  });
  run("exact-series", "t_n = n! [z^n]U for 4 <= n <= 12", [&] {
    std::vector<Integer> u = egf_counts(unrooted_triangulation_series(12));
    for (unsigned n = 4; n <= 12; ++n)
      if (u[n] != count_3connected(n)) return fail_at(n);
    return pass();
  });
  run("labelled-graphs", "dissymmetry: closed B equals integrated B at y = 1", [&] {
    auto k = first_difference(two_connected_series_closed(N), at_y(two_connected_series_bivariate(N), 1));
    return k ? fail_at(*k) : pass("order " + std::to_string(N));
  });
  run("labelled-graphs", "univariate recurrences equal bivariate substitution at y = 1", [&] {
    const std::size_t n = std::min<std::size_t>(N, 14);
    GraphSeriesY1 fast = graph_series_y1(n);
    if (auto k = first_difference(fast.network, at_y(network_series(n), 1))) return fail_at(*k, "E");
    if (auto k = first_difference(fast.connected, at_y(connected_series(n), 1))) return fail_at(*k, "C");
    if (auto k = first_difference(fast.all, at_y(all_graphs_series(n), 1))) return fail_at(*k, "G");
    return pass("order " + std::to_string(n));
  });

  // chordal-maps and poly-algebra
  const TruncatedSeries bmaps = two_connected_maps_series(N);
  const TruncatedSeries mmaps = all_maps_series(N);
  auto annihilates = [&](const BiPolynomial& p, const TruncatedSeries& s) {
    AnnihilatorResult a = annihilator_check(p, s);
    return a.ok ? pass("mod z^" + std::to_string(N + 1)) : fail_at(a.first_failing_order.value_or(0));
  };
  run("chordal-maps", "P_B(z, B(z)) = 0", [&] { return annihilates(transcribed_PB(), bmaps); });
  run("chordal-maps", "P_M(z, M(z)) = 0", [&] { return annihilates(transcribed_PM(), mmaps); });
  run("poly-algebra", "eliminated annihilator of B is divisible by P_B", [&] {
    BiPolynomial e = eliminate_B_annihilator();
    Outcome o = annihilates(e, bmaps);
    if (!o.ok) return o;
    return divide_exact(e, transcribed_PB()) ? pass() : fail("not divisible");
  });
  run("poly-algebra", "substituted annihilator of M is divisible by P_M", [&] {
    BiPolynomial d = derive_M_annihilator(transcribed_PB());
    Outcome o = annihilates(d, mmaps);
    if (!o.ok) return o;
    return divide_exact(d, transcribed_PM()) ? pass() : fail("not divisible");
  });
  run("poly-algebra", "disc(P_B) divisible by the degree-6 factor", [&] {
    IntPolynomial f = transcribed_disc_B_factor();
    if (f.degree() != 6) return fail("factor degree " + std::to_string(f.degree()));
    return divide_exact(discriminant(transcribed_PB()), f) ? pass() : fail("not divisible");
  });
  run("poly-algebra", "disc(P_M) divisible by the degree-12 factor", [&] {
    IntPolynomial f = transcribed_disc_M_factor();
    if (f.degree() != 12) return fail("factor degree " + std::to_string(f.degree()));
    return divide_exact(discriminant(transcribed_PM()), f) ? pass() : fail("not divisible");
  });

  // rootfind
  run("rootfind", "positive roots of the discriminant factors", [&] {
    auto rb = positive_roots(transcribed_disc_B_factor());
    auto rm = positive_roots(transcribed_disc_M_factor());
    if (rb.size() != 1 || !five_digits(rb[0], 0.27370)) return fail("B factor");
    if (rm.size() != 2 || !five_digits(rm[0], 0.15616) || !five_digits(rm[1], 0.49512)) return fail("M factor");
    return pass();
  });
  run("rootfind", "sigma_b and sigma are unique on their circles", [&] {
    auto db = check_modulus_dominance(all_roots(transcribed_disc_B_factor(), opt.precision_bits), HPReal(0.2737));
    auto dm = check_modulus_dominance(all_roots(transcribed_disc_M_factor(), opt.precision_bits), HPReal(0.15616));
    if (!db.unique_on_circle) return fail("B: gap " + format_real(db.gap, 6) + " vs bound " + format_real(db.bound, 6));
    if (!dm.unique_on_circle) return fail("M: gap " + format_real(dm.gap, 6) + " vs bound " + format_real(dm.bound, 6));
    return pass("gaps " + format_real(db.gap, 4) + ", " + format_real(dm.gap, 4));
  });

  // brute-oracle
  run("brute-oracle", "census equals the series pipeline, n <= " + std::to_string(opt.oracle_n), [&] {
    auto tables = census_tables(oracle::census_table(opt.oracle_n));
    for (const auto& t : tables) {
      CountTable s = count_table(parse_graph_family(t.family), opt.oracle_n, std::max<std::size_t>(N, opt.oracle_n));
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.rows[i].second != s.rows[i].second)
          return fail_at(t.rows[i].first, t.family + ": oracle " + t.rows[i].second.get_str() + ", series " +
                                              s.rows[i].second.get_str());
    }
    return pass();
  });

  // singular-analysis
  std::optional<ConstantsReport> k1, k2;
  run("singular-analysis", "characteristic system solved", [&] {
    CharacteristicSolution cs = solve_characteristic_system(opt.precision_bits);
    HPReal tol = mp::ldexp(HPReal(1), -static_cast<int>(opt.precision_bits / 2));
    if (cs.residual > tol) return fail("residual " + format_real(cs.residual, 4));
    k1 = theorem1_constants(opt.precision_bits);
    if (mp::abs(k1->at("Theta_F") - 1) > tol) return fail("Theta_F != 1");
    return pass("residual " + format_real(cs.residual, 4));
  });
  run("singular-analysis", "subcriticality: rho_b E0^3 < 4/27, tau < rho_b", [&] {
    if (!k1) k1 = theorem1_constants(opt.precision_bits);
    HPReal comp = k1->at("rho_b*E0^3");
    if (!(comp < HPReal(4) / 27)) return fail("rho_b E0^3 = " + format_real(comp, 8));
    if (!(k1->at("tau") < k1->at("rho_b"))) return fail("tau >= rho_b");
    return pass("rho_b E0^3 = " + format_real(comp, 6) + ", rho_b - tau = " +
                format_real(k1->at("rho_b") - k1->at("tau"), 4));
  });
  run("singular-analysis", "subcriticality: sigma (1 + M(sigma))^2 < sigma_b", [&] {
    k2 = theorem2_constants(opt.precision_bits);
    HPReal comp = k2->at("sigma(1+M(sigma))^2");
    if (!(comp < k2->at("sigma_b"))) return fail(format_real(comp, 8) + " >= sigma_b");
    return pass(format_real(comp, 6) + " < " + format_real(k2->at("sigma_b"), 6));
  });

  // asymptotics
  if (opt.include_fits) {
    for (int theorem : {1, 2}) {
      run("asymptotics", "fitted and transferred leading constants agree within 2% (theorem " +
                             std::to_string(theorem) + ")",
          [&] {
            TheoremReconciliation r = reconcile_theorem(theorem, 256, opt.precision_bits);
            for (const auto& c : r.constants)
              if (!(c.analytic_vs_empirical < HPReal(0.02)))
                return fail(c.name + ": " + format_real(c.analytic_vs_empirical, 4));
            for (const auto& g : r.growth)
              if (!(g.analytic_vs_empirical < HPReal(1e-4)))
                return fail(g.name + ": " + format_real(g.analytic_vs_empirical, 4));
            return pass();
          });
    }
  }
  return report;
}

}  // namespace chordal
