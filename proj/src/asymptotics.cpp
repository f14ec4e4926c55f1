#include "chordal/asymptotics.hpp"

#include <algorithm>
#include <numeric>

#include "chordal/graphs.hpp"
#include "chordal/maps.hpp"
#include "chordal/reference_tables.hpp"
#include "chordal/singular.hpp"

namespace chordal {

namespace mp = boost::multiprecision;

namespace {

void check_alpha(const Rational& alpha) {
  if (alpha.get_den() == 1 && alpha <= 0) {
    throw AsymptoticsError("asymptotic law: alpha is a non-positive integer");
  }
}

// Richardson extrapolation of s_n = s + c1/n + ... + ck/n^k + O(n^-(k+1)),
// using s_base .. s_(base+k). `s` is indexed by n.
HPReal richardson(const std::vector<HPReal>& s, unsigned base, unsigned k) {
  HPReal sum = 0;
  HPReal jf = 1;  // j!
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) jf *= j;
    HPReal kjf = 1;  // (k-j)!
    for (unsigned i = 2; i <= k - j; ++i) kjf *= i;
    HPReal term = mp::pow(HPReal(base + j), k) * s[base + j] / (jf * kjf);
    sum += ((k + j) % 2) ? HPReal(-term) : term;
  }
  return sum;
}

bool settling(const std::vector<HPReal>& v) {
  if (v.size() < 3) return true;
  const std::size_t m = v.size();
  HPReal d1 = mp::abs(v[m - 1] - v[m - 2]);
  HPReal d0 = mp::abs(v[m - 2] - v[m - 3]);
  HPReal scale = std::max(HPReal(mp::abs(v[m - 1])), HPReal(1e-30));
  return d1 <= d0 || d1 / scale < HPReal(1e-10);
}

std::string format_rational(const Integer& a, const Integer& b) {
  return b == 1 ? a.get_str() : a.get_str() + "/" + b.get_str();
}

}  // namespace

HPReal AsymptoticLaw::leading_constant() const {
  check_alpha(alpha);
  return amplitude / mp::tgamma(to_hp(alpha));
}

HPReal transfer_predict(const AsymptoticLaw& law, unsigned n) {
  if (!(law.rho > 0)) throw AsymptoticsError("transfer_predict: rho must be positive");
  if (n == 0) throw AsymptoticsError("transfer_predict: n must be positive");
  HPReal v = law.leading_constant() * mp::pow(HPReal(n), to_hp(Rational(law.alpha - 1))) * mp::pow(law.rho, -HPReal(n));
  if (law.scaling == Scaling::exponential) v *= to_hp(factorial(n));
  return v;
}

FitResult empirical_fit(const std::vector<Integer>& counts, Scaling scaling, unsigned depth, unsigned bits) {
  if (counts.empty()) throw AsymptoticsError("empirical_fit: no terms");
  PrecisionScope scope(bits);
  const unsigned N = static_cast<unsigned>(counts.size() - 1);
  unsigned n0 = N + 1;
  while (n0 > 1 && counts[n0 - 1] > 0) --n0;
  if (n0 == 1 && counts[0] > 0) n0 = 0;
  if (n0 == 0) n0 = 1;  // log n needs n >= 1
  const unsigned terms = N + 1 - n0;
  if (terms < kMinFitTerms || terms < 2 * depth + 12) {
    throw AsymptoticsError("empirical_fit: " + std::to_string(terms) + " positive terms, need at least " +
                           std::to_string(std::max(kMinFitTerms, 2 * depth + 12)));
  }

  std::vector<HPReal> a(N + 1), L(N + 1), ratio(N + 1), beta(N + 1);
  for (unsigned n = n0; n <= N; ++n) {
    a[n] = to_hp(counts[n]);
    if (scaling == Scaling::exponential) a[n] /= to_hp(factorial(n));
    L[n] = mp::log(a[n]);
  }
  for (unsigned n = n0 + 1; n <= N; ++n) ratio[n] = a[n] / a[n - 1];
  for (unsigned n = n0 + 1; n < N; ++n) {
    HPReal l2 = mp::log(HPReal(n + 1)) - 2 * mp::log(HPReal(n)) + mp::log(HPReal(n - 1));
    beta[n] = (L[n + 1] - 2 * L[n] + L[n - 1]) / l2;
  }

  FitResult out;
  out.terms = terms;
  // A (-1)^n transient from a subdominant singularity on the negative axis
  // is amplified by Richardson weights roughly like n^k / k!. Pairwise
  // averaging damps it by (1-q)/2 per pass and keeps the 1/n expansion of
  // the smooth part; `passes` passes cost `passes` terms at the top.
  const unsigned passes = depth;
  auto smooth = [&](std::vector<HPReal> s, unsigned lo) {
    for (unsigned p = 0; p < passes; ++p) {
      for (unsigned n = lo; n + 1 < s.size(); ++n) s[n] = (s[n] + s[n + 1]) / 2;
    }
    return s;
  };
  ratio = smooth(ratio, n0 + 1);
  beta = smooth(beta, n0 + 1);
  // Window of bases: the last five admissible ones, 8 apart.
  const unsigned last_base = N - 1 - passes - depth;
  std::vector<unsigned> bases;
  for (int i = 4; i >= 0; --i) {
    int b = static_cast<int>(last_base) - 8 * i;
    if (b > static_cast<int>(n0) + 1) bases.push_back(static_cast<unsigned>(b));
  }
  // Richardson at each depth 1..depth; keep the depth with the smallest
  // spread over the window.
  auto extrapolate = [&](const std::vector<HPReal>& seq, bool invert) {
    std::vector<HPReal> best;
    HPReal best_spread = -1;
    unsigned best_depth = 1;
    for (unsigned k = 1; k <= depth; ++k) {
      std::vector<HPReal> est;
      for (unsigned b : bases) {
        HPReal v = richardson(seq, b, k);
        est.push_back(invert ? HPReal(1 / v) : v);
      }
      HPReal lo = *std::min_element(est.begin(), est.end()), hi = *std::max_element(est.begin(), est.end());
      HPReal spread = (hi - lo) / std::max(HPReal(mp::abs(est.back())), HPReal(1e-300));
      if (best_spread < 0 || spread < best_spread) {
        best_spread = spread;
        best = est;
        best_depth = k;
      }
    }
    out.depth = std::max(out.depth, best_depth);
    return best;
  };
  std::vector<HPReal> rhos = extrapolate(ratio, true);
  std::vector<HPReal> betas = extrapolate(beta, false);
  out.rho = rhos.back();
  out.exponent = betas.back();
  out.structural_exponent = Rational(static_cast<long>(mp::round(2 * out.exponent).convert_to<long>()), 2);
  out.structural_exponent.canonicalize();

  std::vector<HPReal> K(N + 1);
  const HPReal beta_s = to_hp(out.structural_exponent);
  for (unsigned n = n0; n <= N; ++n) K[n] = a[n] * mp::pow(HPReal(n), -beta_s) * mp::pow(out.rho, HPReal(n));
  std::vector<HPReal> consts = extrapolate(smooth(K, n0), false);
  for (std::size_t i = 0; i < bases.size(); ++i) out.table.push_back({bases[i], rhos[i], betas[i], consts[i]});
  out.constant = consts.back();
  out.stable = settling(rhos) && settling(betas) && settling(consts);
  return out;
}

HPReal relative_difference(const HPReal& a, const HPReal& b) {
  HPReal scale = std::max(HPReal(mp::abs(a)), HPReal(mp::abs(b)));
  if (scale == 0) return HPReal(0);
  return mp::abs(a - b) / scale;
}

std::string recognise_factor(const HPReal& x, double tol) {
  if (!(x > 0)) return "";
  const HPReal sp = mp::sqrt(hp_pi());
  struct Kind {
    HPReal mult;
    const char* suffix;
  };
  const Kind kinds[] = {{HPReal(1), ""}, {sp, "*sqrt(pi)"}, {1 / sp, "/sqrt(pi)"}};
  for (const Kind& k : kinds) {
    for (long b = 1; b <= 12; ++b) {
      for (long a = 1; a <= 12; ++a) {
        if (std::gcd(a, b) != 1) continue;
        HPReal q = HPReal(a) / b * k.mult;
        if (mp::abs(x / q - 1) < HPReal(tol)) {
          std::string r = format_rational(a, b);
          if (*k.suffix && b != 1) r = "(" + r + ")";
          return r + k.suffix;
        }
      }
    }
  }
  return "";
}

Reconciliation reconcile(const std::string& name, const AsymptoticLaw& law, const FitResult& fit,
                         std::optional<HPReal> printed) {
  if (fit.structural_exponent != law.alpha - 1) {
    throw AsymptoticsError("reconcile: fitted exponent " + fit.structural_exponent.get_str() +
                           " does not match the law's " + Rational(law.alpha - 1).get_str());
  }
  Reconciliation r;
  r.name = name;
  r.analytic = law.leading_constant();
  r.empirical = fit.constant;
  r.analytic_vs_empirical = relative_difference(r.analytic, r.empirical);
  if (printed) {
    r.printed = *printed;
    r.analytic_vs_printed = relative_difference(r.analytic, *printed);
    r.factor = *printed / r.analytic;
    r.factor_form = recognise_factor(*r.factor);
    r.discrepancy = *r.analytic_vs_printed > HPReal(1e-3);
  }
  return r;
}

namespace {

std::optional<HPReal> printed_value(int theorem, const std::string& name) {
  for (const auto& p : reference::printed_constants) {
    if (p.theorem == theorem && name == p.name) return HPReal(p.value);
  }
  return std::nullopt;
}

Reconciliation growth(const std::string& name, const HPReal& analytic, const FitResult& fit,
                      std::optional<HPReal> printed) {
  Reconciliation r;
  r.name = name;
  r.analytic = analytic;
  r.empirical = 1 / fit.rho;
  r.analytic_vs_empirical = relative_difference(r.analytic, r.empirical);
  if (printed) {
    r.printed = *printed;
    r.analytic_vs_printed = relative_difference(r.analytic, *printed);
    r.factor = *printed / r.analytic;
    r.factor_form = recognise_factor(*r.factor);
    r.discrepancy = *r.analytic_vs_printed > HPReal(1e-3);
  }
  return r;
}

}  // namespace

TheoremReconciliation reconcile_theorem(int theorem, std::size_t order, unsigned bits) {
  if (theorem != 1 && theorem != 2) throw AsymptoticsError("reconcile_theorem: theorem must be 1 or 2");
  if (order < 200) throw AsymptoticsError("reconcile_theorem: need at least 200 coefficients");
  PrecisionScope scope(bits);
  TheoremReconciliation out;
  out.theorem = theorem;
  out.order = static_cast<unsigned>(order);
  const Rational three_halves(-3, 2), half(-1, 2);

  if (theorem == 1) {
    ConstantsReport k = theorem1_constants(bits);
    GraphSeriesY1 s = graph_series_y1(order);
    FitResult fb = empirical_fit(egf_counts(s.two_connected), Scaling::exponential, 4, bits);
    FitResult fc = empirical_fit(egf_counts(s.connected), Scaling::exponential, 4, bits);
    FitResult fg = empirical_fit(egf_counts(s.all), Scaling::exponential, 4, bits);
    out.constants.push_back(reconcile("b", {k.at("B3"), three_halves, k.at("rho_b"), Scaling::exponential}, fb,
                                      printed_value(1, "b")));
    out.constants.push_back(reconcile("c", {k.at("C3"), three_halves, k.at("rho"), Scaling::exponential}, fc,
                                      printed_value(1, "c")));
    out.constants.push_back(reconcile("g", {k.at("G3"), three_halves, k.at("rho"), Scaling::exponential}, fg,
                                      printed_value(1, "g")));
    out.growth.push_back(growth("gamma_b", k.at("gamma_b"), fb, printed_value(1, "gamma_b")));
    out.growth.push_back(growth("gamma", k.at("gamma"), fc, printed_value(1, "gamma")));
  } else {
    ConstantsReport k = theorem2_constants(bits);
    FitResult fb = empirical_fit(ogf_counts(two_connected_maps_series(order)), Scaling::ordinary, 4, bits);
    FitResult fm = empirical_fit(ogf_counts(all_maps_series(order)), Scaling::ordinary, 4, bits);
    out.constants.push_back(reconcile("b", {k.at("b1_signed"), half, k.at("sigma_b"), Scaling::ordinary}, fb,
                                      printed_value(2, "b")));
    out.constants.push_back(reconcile("m", {k.at("m1_signed"), half, k.at("sigma"), Scaling::ordinary}, fm,
                                      printed_value(2, "m")));
    out.growth.push_back(growth("1/sigma_b", k.at("1/sigma_b"), fb, printed_value(2, "1/sigma_b")));
    out.growth.push_back(growth("1/sigma", k.at("1/sigma"), fm, printed_value(2, "1/sigma")));
  }
  return out;
}

}  // namespace chordal
