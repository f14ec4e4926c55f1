#include "doctest.h"

#include "chordal/asymptotics.hpp"
#include "chordal/graphs.hpp"
#include "chordal/maps.hpp"

using namespace chordal;
namespace mp = boost::multiprecision;

namespace {

const HPReal& t_const() {
  static HPReal t = [] {
    PrecisionScope s(256);
    return HPReal(4 * mp::sqrt(HPReal(3)) / (mp::pow(HPReal(3), 10) * mp::sqrt(hp_pi())));
  }();
  return t;
}

std::vector<Integer> ternary_counts(unsigned N) {
  std::vector<Integer> c(N + 1);
  for (unsigned n = 0; n <= N; ++n) c[n] = binomial(3 * n, n) / (2 * n + 1);
  return c;
}

}  // namespace

TEST_CASE("transfer_predict") {
  PrecisionScope scope(256);
  AsymptoticLaw geometric{HPReal(1), Rational(1), HPReal(1), Scaling::ordinary};
  for (unsigned n : {1u, 7u, 100u}) CHECK(mp::abs(transfer_predict(geometric, n) - 1) < HPReal(1e-70));

  AsymptoticLaw half{HPReal(1), Rational(1, 2), HPReal(1), Scaling::ordinary};
  HPReal p = transfer_predict(half, 100);
  CHECK(static_cast<double>(p) == doctest::Approx(0.056419).epsilon(1e-5));
  HPReal exact = to_hp(binomial(200, 100)) / mp::pow(HPReal(4), 100);
  CHECK(static_cast<double>(exact) == doctest::Approx(0.056348).epsilon(1e-5));
  CHECK(mp::abs(p / exact - 1) < HPReal(2e-3));

  CHECK_THROWS_AS(transfer_predict({HPReal(1), Rational(0), HPReal(1)}, 5), AsymptoticsError);
  CHECK_THROWS_AS(transfer_predict({HPReal(1), Rational(-2), HPReal(1)}, 5), AsymptoticsError);
  CHECK_THROWS_AS(transfer_predict({HPReal(1), Rational(1), HPReal(-1)}, 5), AsymptoticsError);
}

TEST_CASE("3-connected law") {
  PrecisionScope scope(256);
  const HPReal gamma_m32 = mp::tgamma(HPReal(-1.5));
  AsymptoticLaw law{t_const() * gamma_m32, Rational(-3, 2), HPReal(4) / 27, Scaling::exponential};
  CHECK(mp::abs(law.leading_constant() - t_const()) < HPReal(1e-70));
  HPReal prev_err = 1;
  for (unsigned n = 20; n <= 400; n += 20) {
    HPReal ratio = transfer_predict(law, n) / to_hp(count_3connected(n));
    HPReal err = mp::abs(ratio - 1);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < HPReal(0.02));
  // Taking the printed t as the amplitude instead gives 1/Gamma(-3/2).
  AsymptoticLaw literal{t_const(), Rational(-3, 2), HPReal(4) / 27, Scaling::exponential};
  HPReal r = transfer_predict(literal, 4000) / to_hp(count_3connected(4000));
  CHECK(static_cast<double>(r) == doctest::Approx(3 / (4 * std::sqrt(M_PI))).epsilon(2e-3));
}

TEST_CASE("empirical fit on the ternary sequence") {
  FitResult f = empirical_fit(ternary_counts(256), Scaling::ordinary);
  PrecisionScope scope(256);
  CHECK(mp::abs(f.rho * 27 / 4 - 1) < HPReal(1e-6));
  CHECK(mp::abs(f.exponent + HPReal(1.5)) < HPReal(1e-3));
  CHECK(f.structural_exponent == Rational(-3, 2));
  CHECK(f.stable);
  // [z^n] S ~ sqrt(3) / (4 sqrt(pi)) n^(-3/2) (27/4)^n
  HPReal expected = mp::sqrt(HPReal(3)) / (4 * mp::sqrt(hp_pi()));
  CHECK(mp::abs(f.constant / expected - 1) < HPReal(1e-5));
  CHECK(f.table.size() == 5);
  CHECK(f.terms == 256);

  std::vector<Integer> short_seq = ternary_counts(40);
  CHECK_THROWS_AS(empirical_fit(short_seq, Scaling::ordinary), AsymptoticsError);
}

TEST_CASE("empirical fit: maps and graphs") {
  FitResult fm = empirical_fit(ogf_counts(all_maps_series(256)), Scaling::ordinary);
  CHECK(static_cast<double>(1 / fm.rho) == doctest::Approx(6.40375).epsilon(1e-6));
  CHECK(std::abs(static_cast<double>(fm.exponent) + 1.5) < 0.05);

  FitResult fb = empirical_fit(ogf_counts(two_connected_maps_series(256)), Scaling::ordinary);
  CHECK(static_cast<double>(1 / fb.rho) == doctest::Approx(3.65370).epsilon(1e-5));
  CHECK(std::abs(static_cast<double>(fb.exponent) + 1.5) < 0.05);

  GraphSeriesY1 s = graph_series_y1(200);
  FitResult fg = empirical_fit(egf_counts(s.all), Scaling::exponential);
  CHECK(static_cast<double>(1 / fg.rho) == doctest::Approx(11.89235).epsilon(1e-6));
  CHECK(std::abs(static_cast<double>(fg.exponent) + 2.5) < 0.05);
}

TEST_CASE("reconcile") {
  PrecisionScope scope(256);
  // (1 - 4z)^(-1/2) = sum binom(2n, n) z^n.
  std::vector<Integer> central(257);
  for (unsigned n = 0; n <= 256; ++n) central[n] = binomial(2 * n, n);
  AsymptoticLaw law{HPReal(1), Rational(1, 2), HPReal(0.25), Scaling::ordinary};
  FitResult fit = empirical_fit(central, Scaling::ordinary);
  const FitResult before = fit;
  Reconciliation r = reconcile("central", law, fit, law.leading_constant());
  CHECK(*r.analytic_vs_printed == 0);
  CHECK_FALSE(r.discrepancy);
  CHECK(r.factor_form == "1");
  CHECK(r.analytic_vs_empirical < HPReal(1e-6));
  CHECK(fit.constant == before.constant);
  CHECK(fit.rho == before.rho);

  Reconciliation doubled = reconcile("central", law, fit, 2 * law.leading_constant());
  CHECK(doubled.discrepancy);
  CHECK(doubled.factor_form == "2");

  CHECK(relative_difference(HPReal(3), HPReal(5)) == relative_difference(HPReal(5), HPReal(3)));
  CHECK(recognise_factor(HPReal(2)) == "2");
  CHECK(recognise_factor(3 * mp::sqrt(hp_pi())) == "3*sqrt(pi)");
  CHECK(recognise_factor(HPReal(9) / 4) == "9/4");
  CHECK(recognise_factor(mp::exp(HPReal(1))) == "");

  AsymptoticLaw wrong{HPReal(1), Rational(-1, 2), HPReal(0.25), Scaling::ordinary};
  CHECK_THROWS_AS(reconcile("central", wrong, fit), AsymptoticsError);
}

TEST_CASE("leading constants of both theorems") {
  TheoremReconciliation t2 = reconcile_theorem(2);
  REQUIRE(t2.constants.size() == 2);
  for (const auto& r : t2.constants) {
    CHECK(r.analytic_vs_empirical < HPReal(0.02));
    CHECK(r.discrepancy);
    CHECK(r.factor_form == "2");
  }
  for (const auto& g : t2.growth) CHECK(*g.analytic_vs_printed < HPReal(1e-5));

  TheoremReconciliation t1 = reconcile_theorem(1);
  REQUIRE(t1.constants.size() == 3);
  for (const auto& r : t1.constants) CHECK(r.analytic_vs_empirical < HPReal(0.02));
  CHECK(t1.constants[1].name == "c");
  CHECK(t1.constants[1].factor_form == "3*sqrt(pi)");
  for (const auto& g : t1.growth) CHECK(*g.analytic_vs_printed < HPReal(1e-5));

  CHECK_THROWS_AS(reconcile_theorem(3), AsymptoticsError);
  CHECK_THROWS_AS(reconcile_theorem(1, 100), AsymptoticsError);
}
