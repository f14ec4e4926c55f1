#include "doctest.h"

#include "chordal/graphs.hpp"
#include "chordal/maps.hpp"
#include "chordal/singular.hpp"

using namespace chordal;
namespace mp = boost::multiprecision;

namespace {

double d(const HPReal& x) { return static_cast<double>(x); }

// Relative agreement to `digits` significant digits.
bool sig(const HPReal& x, double expected, int digits) {
  return std::abs(d(x) - expected) <= 0.5 * std::pow(10.0, 1 - digits) * std::abs(expected);
}

const GraphSeriesY1& series200() {
  static GraphSeriesY1 s = graph_series_y1(200);
  return s;
}

}  // namespace

TEST_CASE("characteristic system") {
  CharacteristicSolution cs = solve_characteristic_system();
  CHECK(cs.residual < HPReal(1e-60));
  CHECK(sig(cs.rho_b, 0.092859, 5));
  CHECK(sig(cs.E0(), 1.16454, 6));
  CHECK(sig(cs.S0, 0.41919, 5));
  CHECK(sig(1 / cs.rho_b, 10.76897, 7));
  CHECK(sig(cs.rho_b * mp::pow(cs.E0(), 3), 0.14665, 5));
  CHECK(cs.rho_b * mp::pow(cs.E0(), 3) < HPReal(4) / 27);

  // A different seed lands on the same point.
  PrecisionScope scope(256);
  CharacteristicSolution other = solve_characteristic_system(256, CharacteristicSeed{0.09, 0.4, 0.15});
  CHECK(mp::abs(other.rho_b - cs.rho_b) < HPReal(1e-60));

  // Coefficient ratios approach rho_b (loose: O(1/n^2) after the correction).
  const TruncatedSeries& e = series200().network;
  const std::size_t n = 200;
  double ratio = d(to_hp(Rational(e[n - 1] / e[n]))) * (1 - 1.5 / n);
  CHECK(ratio == doctest::Approx(d(cs.rho_b)).epsilon(1e-4));
}

TEST_CASE("Theta derivatives and E1") {
  CharacteristicSolution cs = solve_characteristic_system();
  NetworkAmplitude na = network_amplitude(cs);
  CHECK(na.route_difference < HPReal(1e-6));
  // Branch condition for F = Theta(x, F).
  CHECK(mp::abs(na.implicit.theta_F - 1) < HPReal(1e-60));
  CHECK(mp::abs(na.implicit.theta - cs.F0) < HPReal(1e-60));
  CHECK(sig(na.E1, 0.092354, 5));

  // Off the characteristic point the branch condition fails.
  PrecisionScope scope(256);
  CharacteristicSolution moved = cs;
  moved.F0 -= HPReal(0.01);
  CHECK_THROWS_AS(network_amplitude(moved), SingularError);
}

TEST_CASE("E' blows up like E1 / (2 rho_b X)") {
  CharacteristicSolution cs = solve_characteristic_system();
  NetworkAmplitude na = network_amplitude(cs);
  PrecisionScope scope(256);
  HPReal prev_err = 1;
  for (int k = 4; k <= 10; k += 2) {
    HPReal X = mp::pow(HPReal(10), -k / 2.0);
    HPReal x = cs.rho_b * (1 - X * X);
    LocalDerivatives ld = implicit_derivatives_E(x, 1);
    HPReal estimate = ld.E[1] * 2 * cs.rho_b * X;
    HPReal err = mp::abs(estimate / na.E1 - 1);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < HPReal(1e-4));
}

TEST_CASE("square-root expansion of B at rho_b") {
  PrecisionScope scope(256);
  CharacteristicSolution cs = solve_characteristic_system();
  TwoConnectedExpansion ex = two_connected_expansion(cs);
  CHECK(mp::abs(ex.B1_residual) < HPReal(1e-60));
  CHECK(sig(ex.B0, 0.0044796, 5));
  CHECK(mp::abs(ex.E.a[1] + network_amplitude(cs).E1) < HPReal(1e-50));
  CHECK(mp::abs(ex.b - 3 * ex.B3 / (4 * mp::sqrt(hp_pi()))) < HPReal(1e-70));

  // Oracle for B0 and B2: B(rho_b) and B'(rho_b) = B2/rho_b from the exact
  // series, which converge at rho_b (coefficients ~ n^(-5/2) rho_b^(-n)).
  const TruncatedSeries& b = series200().two_connected;
  HPReal B_at = evaluate(b, cs.rho_b);
  HPReal Bp_at = evaluate(derivative(b), cs.rho_b);
  CHECK(mp::abs(B_at / ex.B0 - 1) < HPReal(1e-4));
  CHECK(mp::abs(Bp_at * cs.rho_b / ex.B2 - 1) < HPReal(2e-3));

  // The expansion approaches the local solution as x -> rho_b.
  HPReal prev = 1;
  for (int k = 2; k <= 8; k += 2) {
    HPReal x = cs.rho_b * (1 - mp::pow(HPReal(10), -k));
    LocalDerivatives ld = implicit_derivatives_E(x, 0);
    HPReal err = mp::abs(ex.E(x) - ld.E[0]) + mp::abs(ex.B(x) - ld.B[0]);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < HPReal(1e-20));
  CHECK_THROWS_AS(two_connected_expansion(cs, 256, 3), SingularError);
}

TEST_CASE("implicit derivatives") {
  PrecisionScope scope(256);
  LocalDerivatives ld = implicit_derivatives_E(HPReal(0.05), 3);
  const TruncatedSeries e64 = network_series_y1(64);
  CHECK(mp::abs(ld.E[0] - evaluate(e64, HPReal(0.05))) < HPReal(1e-10));
  CHECK(mp::abs(ld.E[1] - evaluate(derivative(e64), HPReal(0.05))) < HPReal(1e-10));
  const TruncatedSeries b64 = two_connected_series_closed(64);
  CHECK(mp::abs(ld.B[2] - evaluate(derivative(derivative(b64)), HPReal(0.05))) < HPReal(1e-10));

  LocalDerivatives at0 = implicit_derivatives_E(HPReal(0), 2);
  CHECK(mp::abs(at0.E[0] - 1) < HPReal(1e-70));
  CHECK(mp::abs(at0.E[1] - 1) < HPReal(1e-70));
  CHECK(mp::abs(at0.B[2] - 1) < HPReal(1e-70));  // B = x^2/2 + ...

  CHECK_THROWS_AS(implicit_derivatives_E(HPReal(0.0929), 1), SingularError);
  CHECK_THROWS_AS(implicit_derivatives_E(HPReal(-0.01), 1), SingularError);
}

TEST_CASE("connected constants") {
  CharacteristicSolution cs = solve_characteristic_system();
  TwoConnectedExpansion ex = two_connected_expansion(cs);
  ConnectedConstants cc = connected_constants(cs, ex);
  PrecisionScope scope(256);
  CHECK(mp::abs(cc.tau * cc.Bpp_tau - 1) < HPReal(1e-60));
  CHECK(cc.tau < cs.rho_b);
  CHECK(cs.rho_b - cc.tau > HPReal(1e-8));
  CHECK(cc.rho < cs.rho_b);
  CHECK(sig(cc.tau, 0.092859, 5));
  CHECK(sig(cc.E_tau, 1.16446, 6));
  CHECK(sig(cc.gamma, 11.89235, 7));
  CHECK(sig(cc.C2, 0.092859, 5));
  CHECK(cc.C2 == cc.tau);

  // The printed C3 formula equals (9/4) C3 once tau B''(tau) = 1 is used,
  // and reproduces the printed number.
  CHECK(mp::abs(cc.C3_printed_formula / cc.C3 - HPReal(9) / 4) < HPReal(1e-60));
  CHECK(sig(cc.C3_printed_formula, 0.00027194, 5));

  // Oracle for C0: C(rho) from the exact connected series (coefficients ~ n^(-5/2) rho^(-n)).
  HPReal C_at = evaluate(series200().connected, cc.rho);
  CHECK(mp::abs(C_at / cc.C0 - 1) < HPReal(1e-4));
  CHECK(mp::abs(cc.G0 - mp::exp(cc.C0)) < HPReal(1e-70));
  CHECK(mp::abs(cc.G3 - cc.C3 * cc.G0) < HPReal(1e-70));
  // p = c/g = exp(-C0); compare with the exact ratio c_n/g_n at n = 200.
  HPReal ratio = to_hp(Rational(series200().connected[200] / series200().all[200]));
  CHECK(mp::abs(ratio / (cc.c / cc.g) - 1) < HPReal(2e-3));
}

TEST_CASE("algebraic branch: explicit square root") {
  // w^2 - (1 - z): counting branch sqrt(1 - z) = X.
  BiPolynomial p = parse_bipolynomial("w^2 - (1 - z)");
  const std::size_t N = 40;
  std::vector<Rational> c(N + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) c[n] = c[n - 1] * Rational(2 * static_cast<long>(n) - 3, 2 * static_cast<long>(n));
  PrecisionScope scope(256);
  AlgebraicBranch br = algebraic_branch_expansion(p, HPReal(1), TruncatedSeries(c));
  CHECK(mp::abs(br.y0) < HPReal(1e-60));
  CHECK(mp::abs(br.a1 - 1) < HPReal(1e-60));
  CHECK(mp::abs(br.sigma_from_newton - 1) < HPReal(1e-60));
}

TEST_CASE("algebraic branches of the map annihilators") {
  ConstantsReport r = theorem2_constants();
  CHECK(sig(r.at("1/sigma_b"), 3.65370, 6));
  CHECK(sig(r.at("B(sigma_b)"), 0.33301, 5));
  CHECK(sig(r.at("b1"), 0.12704, 5));
  CHECK(sig(r.at("1/sigma"), 6.40375, 6));
  CHECK(sig(r.at("M(sigma)"), 0.31055, 5));
  CHECK(sig(r.at("m1"), 0.22326, 5));
  // Positive coefficients: the branch increases towards the singularity.
  CHECK(r.at("b1_signed") < 0);
  CHECK(r.at("m1_signed") < 0);
  CHECK(sig(r.at("sigma(1+M(sigma))^2"), 0.26821, 5));
  CHECK(r.at("sigma(1+M(sigma))^2") < r.at("sigma_b"));

  // Series values approach the branch values from below.
  PrecisionScope scope(256);
  HPReal b_series = evaluate(two_connected_maps_series(256), r.at("sigma_b"));
  CHECK(b_series < r.at("B(sigma_b)"));
  CHECK(mp::abs(b_series - r.at("B(sigma_b)")) < HPReal(0.01));
}

TEST_CASE("constants reports") {
  ConstantsReport r = theorem1_constants();
  CHECK(r.theorem == 1);
  CHECK(r.precision_bits == kDefaultPrecisionBits);
  CHECK(r.find("gamma") != nullptr);
  CHECK(r.find("nonexistent") == nullptr);
  CHECK_THROWS_AS(r.at("nonexistent"), SingularError);
  CHECK(sig(r.at("gamma"), 11.89235, 7));
  CHECK(sig(r.at("gamma_b"), 10.76897, 7));

  // Precision is a parameter: 128 bits reproduces the leading digits.
  ConstantsReport low = theorem1_constants(128);
  CHECK(mp::abs(low.at("gamma") - r.at("gamma")) < HPReal(1e-25));
}
