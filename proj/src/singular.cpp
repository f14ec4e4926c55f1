#include "chordal/singular.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "chordal/graphs.hpp"
#include "chordal/maps.hpp"
#include "chordal/rootfind.hpp"

namespace chordal {

namespace mp = boost::multiprecision;

namespace {

HPReal pow2(int e) { return mp::ldexp(HPReal(1), e); }

// Newton stopping tolerance for a given precision.
HPReal newton_tol(unsigned bits) { return pow2(-static_cast<int>(bits) + 24); }

// ---------------------------------------------------------------- HP series

// Truncated power series with HPReal coefficients, c[0..K].
struct HS {
  std::vector<HPReal> c;

  explicit HS(std::size_t K) : c(K + 1, HPReal(0)) {}
  static HS constant(const HPReal& v, std::size_t K) {
    HS s(K);
    s.c[0] = v;
    return s;
  }
  std::size_t K() const { return c.size() - 1; }
};

HS operator+(HS a, const HS& b) {
  for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
  return a;
}
HS operator-(HS a, const HS& b) {
  for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
  return a;
}
HS operator+(HS a, const HPReal& k) {
  a.c[0] += k;
  return a;
}
HS operator*(HS a, const HPReal& k) {
  for (auto& x : a.c) x *= k;
  return a;
}
HS operator*(const HS& a, const HS& b) {
  HS r(a.K());
  for (std::size_t i = 0; i <= a.K(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.K(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

HS power(const HS& a, unsigned k) {
  HS r = HS::constant(HPReal(1), a.K());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

HS reciprocal(const HS& a) {
  if (a.c[0] == 0) throw SingularError("series reciprocal: zero constant term");
  HS r(a.K());
  r.c[0] = 1 / a.c[0];
  for (std::size_t n = 1; n <= a.K(); ++n) {
    HPReal s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a.c[k] * r.c[n - k];
    r.c[n] = -s * r.c[0];
  }
  return r;
}

// exp(a) via b' = a' b.
HS exp(const HS& a) {
  HS r(a.K());
  r.c[0] = mp::exp(a.c[0]);
  for (std::size_t n = 1; n <= a.K(); ++n) {
    HPReal s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += k * a.c[k] * r.c[n - k];
    r.c[n] = s / n;
  }
  return r;
}

HPReal max_abs(const HS& a) {
  HPReal m = 0;
  for (const auto& x : a.c) m = std::max(m, HPReal(mp::abs(x)));
  return m;
}

// ------------------------------------------------------- the graph system

// Phi = exp(g) - 1 with g = x(1+F)^2(1+S/2); Psi = x(1+F)^3(1+S)^3.
struct SystemValues {
  HPReal phi, psi, phi_S, phi_F, psi_S, psi_F;
};

SystemValues system_values(const HPReal& x, const HPReal& S, const HPReal& F) {
  const HPReal e = 1 + F, s = 1 + S;
  const HPReal eg = mp::exp(x * e * e * (1 + S / 2));
  SystemValues v;
  v.phi = eg - 1;
  v.phi_S = eg * x * e * e / 2;
  v.phi_F = eg * 2 * x * e * (1 + S / 2);
  v.psi = x * e * e * e * s * s * s;
  v.psi_S = 3 * x * e * e * e * s * s;
  v.psi_F = 3 * x * e * e * s * s * s;
  return v;
}

std::array<HPReal, 3> characteristic_residual(const HPReal& x, const HPReal& S, const HPReal& F) {
  SystemValues v = system_values(x, S, F);
  return {v.phi - F, v.psi - S, (1 - v.psi_S) * (1 - v.phi_F) - v.psi_F * v.phi_S};
}

// Solves a dense linear system in place (partial pivoting).
template <std::size_t N>
std::array<HPReal, N> solve_linear(std::array<std::array<HPReal, N>, N> a, std::array<HPReal, N> b) {
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < N; ++i) {
      if (mp::abs(a[i][k]) > mp::abs(a[p][k])) p = i;
    }
    if (a[p][k] == 0) throw SingularError("linear solve: singular matrix");
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < N; ++i) {
      HPReal f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < N; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::array<HPReal, N> x;
  for (std::size_t k = N; k-- > 0;) {
    HPReal s = b[k];
    for (std::size_t j = k + 1; j < N; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

// Small root of S = x a (1+S)^3 with a = (1+F)^3, by Newton from 0 (the
// function x a (1+S)^3 - S is convex, so the iteration increases monotonically).
HPReal solve_S(const HPReal& x, const HPReal& F, unsigned bits) {
  const HPReal a = x * mp::pow(1 + F, 3);
  HPReal S = 0;
  const HPReal tol = newton_tol(bits);
  for (int it = 0; it < 400; ++it) {
    HPReal s1 = 1 + S;
    HPReal q = a * s1 * s1 * s1 - S;
    HPReal dq = 3 * a * s1 * s1 - 1;
    if (dq >= 0) throw SingularError("solve_S: no small root (x(1+F)^3 beyond 4/27)");
    HPReal step = q / dq;
    S -= step;
    if (mp::abs(step) < tol) return S;
  }
  throw SingularError("solve_S: no convergence");
}

const TruncatedSeries& network_seed_series() {
  static std::once_flag once;
  static TruncatedSeries e;
  std::call_once(once, [] { e = network_series_y1(96); });
  return e;
}

// Series Newton for (S, F) in powers of delta around x = x0 + delta.
struct LocalSeries {
  HS S, F;
};

LocalSeries solve_local(const HPReal& x0, const HPReal& S_seed, const HPReal& F_seed, std::size_t K,
                        unsigned bits) {
  HS x = HS::constant(x0, K);
  if (K >= 1) x.c[1] = 1;
  HS S = HS::constant(S_seed, K), F = HS::constant(F_seed, K);
  const HPReal tol = newton_tol(bits);
  int settled = 0;
  HPReal last = 1;
  for (int it = 0; it < 200; ++it) {
    HS e = F + HPReal(1), s = S + HPReal(1);
    HS e2 = e * e, s2 = s * s;
    HS half = S * HPReal(0.5) + HPReal(1);
    HS eg = exp(x * e2 * half);
    HS R1 = eg + HPReal(-1) - F;
    HS R2 = x * e2 * e * s2 * s - S;
    HS phi_S = eg * x * e2 * HPReal(0.5);
    HS phi_F = eg * x * e * half * HPReal(2);
    HS psi_S = x * e2 * e * s2 * HPReal(3);
    HS psi_F = x * e2 * s2 * s * HPReal(3);
    // [a b; c d] (dS, dF) = -(R2, R1)
    HS a = psi_S + HPReal(-1), b = psi_F, c = phi_S, d = phi_F + HPReal(-1);
    HS inv = reciprocal(a * d - b * c);
    HS dS = (b * R1 - R2 * d) * inv;
    HS dF = (c * R2 - a * R1) * inv;
    S = S + dS;
    F = F + dF;
    HPReal m = std::max(max_abs(dS), max_abs(dF)) / std::max({HPReal(1), max_abs(S), max_abs(F)});
    if (m < tol) {
      if (++settled >= 2) return {S, F};
    } else {
      settled = 0;
    }
    // Near the fold the attainable accuracy is limited by conditioning;
    // accept once the steps stop shrinking at rounding level.
    if (m < pow2(-static_cast<int>(bits) / 2) && m >= last) return {S, F};
    last = m;
  }
  throw SingularError("solve_local: no convergence at x0 = " + to_string(x0, 12));
}

LocalDerivatives derivatives_from(const HPReal& x0, const LocalSeries& ls, unsigned order) {
  const std::size_t K = ls.F.K();
  HS x = HS::constant(x0, K);
  x.c[1] = 1;
  HS E = ls.F + HPReal(1);
  HS sig = ls.S;
  // B = (x^2/2) E - (x^3/24) E^3 (Sigma^2 + 5 Sigma + 8)
  HS B = x * x * E * HPReal(0.5) -
         power(x, 3) * power(E, 3) * (sig * sig + sig * HPReal(5) + HPReal(8)) * (HPReal(1) / 24);
  LocalDerivatives d;
  d.x0 = x0;
  HPReal fact = 1;
  for (unsigned k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    d.E.push_back(E.c[k] * fact);
    d.Sigma.push_back(sig.c[k] * fact);
    d.B.push_back(B.c[k] * fact);
  }
  return d;
}

HPReal rel_diff(const HPReal& a, const HPReal& b) {
  HPReal scale = std::max(HPReal(mp::abs(a)), HPReal(mp::abs(b)));
  if (scale == 0) return HPReal(0);
  return mp::abs(a - b) / scale;
}

// ------------------------------------------------- square-root expansion

// Given F(X) (coefficients), returns S(X) and H(X) = Theta(x(X), F(X)) - F(X)
// with x = rho (1 - X^2).
struct ThetaSeries {
  HS S, H;
};

ThetaSeries theta_series(const HPReal& rho, const HS& F, const HPReal& S0, unsigned bits) {
  const std::size_t K = F.K();
  HS x = HS::constant(rho, K);
  if (K >= 2) x.c[2] = -rho;
  HS e = F + HPReal(1);
  HS a = x * power(e, 3);
  HS S = HS::constant(S0, K);
  const HPReal tol = newton_tol(bits);
  int settled = 0;
  for (int it = 0;; ++it) {
    if (it > 200) throw SingularError("theta_series: S iteration does not converge");
    HS s = S + HPReal(1);
    HS q = a * s * s * s - S;
    HS dq = a * s * s * HPReal(3) + HPReal(-1);
    HS step = q * reciprocal(dq);
    S = S - step;
    if (max_abs(step) < tol * std::max(HPReal(1), max_abs(S))) {
      if (++settled >= 2) break;
    } else {
      settled = 0;
    }
  }
  HS g = x * e * e * (S * HPReal(0.5) + HPReal(1));
  HS H = exp(g) + HPReal(-1) - F;
  return {S, H};
}

// ------------------------------------------------- algebraic functions

struct BiEval {
  HPReal p, pz, py, pzy, pyy;
};

BiEval bi_eval(const BiPolynomial& P, const HPReal& z, const HPReal& y) {
  BiEval r{HPReal(0), HPReal(0), HPReal(0), HPReal(0), HPReal(0)};
  HPReal yk = 1, yk1 = 0, yk2 = 0;  // y^k, k y^(k-1), k(k-1) y^(k-2)
  for (int k = 0; k <= P.degree(); ++k) {
    const IntPolynomial& ck = P[k];
    HPReal v = evaluate(ck, z);
    HPReal dv = evaluate(ck.derivative(), z);
    r.p += v * yk;
    r.pz += dv * yk;
    r.py += v * yk1;
    r.pzy += dv * yk1;
    r.pyy += v * yk2;
    // advance
    yk2 = yk2 * y + 2 * yk1;
    yk1 = yk1 * y + yk;
    yk = yk * y;
  }
  return r;
}

}  // namespace

// ====================================================== characteristic

CharacteristicSolution solve_characteristic_system(unsigned bits, std::optional<CharacteristicSeed> seed) {
  PrecisionScope scope(bits);
  HPReal x, S, F;
  if (seed) {
    x = seed->x;
    S = seed->S;
    F = seed->F;
  } else {
    // Coefficient ratio with the n^(-3/2) correction, then the series value.
    const TruncatedSeries& e = network_seed_series();
    const std::size_t n = e.order();
    x = to_hp(Rational(e[n - 1] / e[n])) * (1 - HPReal(3) / (2 * n));
    F = evaluate(e, x) - 1;
    try {
      S = solve_S(x, F, bits);
    } catch (const SingularError&) {
      S = HPReal(0.4);
    }
  }

  const HPReal tol = newton_tol(bits);
  const HPReal h = pow2(-static_cast<int>(bits) / 3);
  CharacteristicSolution out;
  int settled = 0;
  for (unsigned it = 1; it <= 100; ++it) {
    std::array<HPReal, 3> v{x, S, F};
    std::array<HPReal, 3> r = characteristic_residual(x, S, F);
    std::array<std::array<HPReal, 3>, 3> J;
    for (int j = 0; j < 3; ++j) {
      std::array<HPReal, 3> vp = v, vm = v;
      vp[j] += h;
      vm[j] -= h;
      auto rp = characteristic_residual(vp[0], vp[1], vp[2]);
      auto rm = characteristic_residual(vm[0], vm[1], vm[2]);
      for (int i = 0; i < 3; ++i) J[i][j] = (rp[i] - rm[i]) / (2 * h);
    }
    auto d = solve_linear<3>(J, {-r[0], -r[1], -r[2]});
    x += d[0];
    S += d[1];
    F += d[2];
    HPReal m = std::max({HPReal(mp::abs(d[0])), HPReal(mp::abs(d[1])), HPReal(mp::abs(d[2]))});
    if (m < tol) {
      if (++settled >= 2) {
        out.iterations = it;
        break;
      }
    } else {
      settled = 0;
    }
    if (it == 100) throw SingularError("solve_characteristic_system: no convergence");
  }
  if (!(x > 0) || !(S > 0) || !(F > 0)) throw SingularError("solve_characteristic_system: non-positive solution");
  auto r = characteristic_residual(x, S, F);
  out.residual = std::max({HPReal(mp::abs(r[0])), HPReal(mp::abs(r[1])), HPReal(mp::abs(r[2]))});
  if (out.residual > pow2(-static_cast<int>(bits) / 2)) {
    throw SingularError("solve_characteristic_system: residual too large");
  }
  // The branch must be the combinatorial one: S below the 4/27 barrier.
  if (!(x * mp::pow(1 + F, 3) < HPReal(4) / 27)) {
    throw SingularError("solve_characteristic_system: converged to a non-combinatorial branch");
  }
  out.rho_b = x;
  out.S0 = S;
  out.F0 = F;
  return out;
}

// ====================================================== Theta derivatives

ThetaDerivatives theta_derivatives_fd(const HPReal& x, const HPReal& F, unsigned bits) {
  PrecisionScope scope(bits);
  auto theta = [&](const HPReal& xx, const HPReal& ff) {
    HPReal S = solve_S(xx, ff, bits);
    return HPReal(mp::exp(xx * (1 + ff) * (1 + ff) * (1 + S / 2)) - 1);
  };
  const HPReal h = pow2(-static_cast<int>(bits) / 4);
  ThetaDerivatives d;
  d.theta = theta(x, F);
  d.theta_x = (theta(x + h, F) - theta(x - h, F)) / (2 * h);
  HPReal tp = theta(x, F + h), tm = theta(x, F - h);
  d.theta_F = (tp - tm) / (2 * h);
  d.theta_FF = (tp - 2 * d.theta + tm) / (h * h);
  return d;
}

ThetaDerivatives theta_derivatives_implicit(const HPReal& x, const HPReal& F, unsigned bits) {
  PrecisionScope scope(bits);
  const HPReal S = solve_S(x, F, bits);
  const HPReal e = 1 + F, s = 1 + S;
  // G(x,F,S) = S - x e^3 s^3
  const HPReal G_S = 1 - 3 * x * e * e * e * s * s;
  const HPReal G_x = -e * e * e * s * s * s;
  const HPReal G_F = -3 * x * e * e * s * s * s;
  const HPReal G_FF = -6 * x * e * s * s * s;
  const HPReal G_FS = -9 * x * e * e * s * s;
  const HPReal G_SS = -6 * x * e * e * e * s;
  const HPReal S_x = -G_x / G_S;
  const HPReal S_F = -G_F / G_S;
  const HPReal S_FF = -(G_FF + 2 * G_FS * S_F + G_SS * S_F * S_F) / G_S;
  const HPReal g = x * e * e * (1 + S / 2);
  const HPReal g_x = e * e * (1 + S / 2) + x * e * e * S_x / 2;
  const HPReal g_F = 2 * x * e * (1 + S / 2) + x * e * e * S_F / 2;
  const HPReal g_FF = 2 * x * (1 + S / 2) + 2 * x * e * S_F + x * e * e * S_FF / 2;
  const HPReal eg = mp::exp(g);
  return {eg - 1, eg * g_x, eg * g_F, eg * (g_FF + g_F * g_F)};
}

NetworkAmplitude network_amplitude(const CharacteristicSolution& cs, unsigned bits) {
  PrecisionScope scope(bits);
  NetworkAmplitude out;
  out.fd = theta_derivatives_fd(cs.rho_b, cs.F0, bits);
  out.implicit = theta_derivatives_implicit(cs.rho_b, cs.F0, bits);
  out.route_difference = std::max({rel_diff(out.fd.theta_x, out.implicit.theta_x),
                                   rel_diff(out.fd.theta_F, out.implicit.theta_F),
                                   rel_diff(out.fd.theta_FF, out.implicit.theta_FF)});
  if (out.route_difference > HPReal(1e-6)) {
    throw SingularError("network_amplitude: finite-difference and implicit Theta derivatives disagree");
  }
  if (mp::abs(out.implicit.theta_F - 1) > pow2(-static_cast<int>(bits) / 2)) {
    throw SingularError("network_amplitude: Theta_F is not 1 at the characteristic point");
  }
  if (!(out.implicit.theta_x > 0) || !(out.implicit.theta_FF > 0)) {
    throw SingularError("network_amplitude: Theta_x and Theta_FF must be positive");
  }
  out.E1 = mp::sqrt(2 * cs.rho_b * out.implicit.theta_x / out.implicit.theta_FF);
  return out;
}

// ====================================================== expansions

HPReal BranchExpansion::operator()(const HPReal& z) const {
  HPReal X = mp::sqrt(1 - z / rho);
  HPReal r = 0;
  for (std::size_t k = a.size(); k-- > 0;) r = r * X + a[k];
  return r;
}

TwoConnectedExpansion two_connected_expansion(const CharacteristicSolution& cs, unsigned bits, unsigned terms) {
  if (terms < 4) throw SingularError("two_connected_expansion: need at least 4 terms");
  PrecisionScope scope(bits);
  const std::size_t K = terms;
  const HPReal rho = cs.rho_b;
  HS F = HS::constant(cs.F0, K);

  auto coefficient = [&](const HS& f, std::size_t k) { return theta_series(rho, f, cs.S0, bits).H.c[k]; };

  // X^2: -rho Theta_x + (Theta_FF/2) f1^2 = 0, read off from two evaluations.
  HPReal v0 = coefficient(F, 2);
  F.c[1] = 1;
  HPReal v1 = coefficient(F, 2);
  HPReal h02 = v1 - v0;
  if (!(-v0 / h02 > 0)) throw SingularError("two_connected_expansion: no real square-root branch");
  F.c[1] = -mp::sqrt(-v0 / h02);
  // X^(k+1) is linear in f_k with slope Theta_FF f1.
  for (std::size_t k = 2; k < K; ++k) {
    F.c[k] = 0;
    HPReal w0 = coefficient(F, k + 1);
    F.c[k] = 1;
    HPReal w1 = coefficient(F, k + 1);
    F.c[k] = -w0 / (w1 - w0);
  }
  ThetaSeries ts = theta_series(rho, F, cs.S0, bits);

  TwoConnectedExpansion out;
  HS x = HS::constant(rho, K);
  x.c[2] = -rho;
  HS E = F + HPReal(1);
  HS sig = ts.S;
  HS B = x * x * E * HPReal(0.5) -
         power(x, 3) * power(E, 3) * (sig * sig + sig * HPReal(5) + HPReal(8)) * (HPReal(1) / 24);
  out.E.rho = out.Sigma.rho = out.B.rho = rho;
  // The X^K coefficients depend on the unknown f_K; keep 0..K-1.
  for (std::size_t k = 0; k < K; ++k) {
    out.E.a.push_back(E.c[k]);
    out.Sigma.a.push_back(sig.c[k]);
    out.B.a.push_back(B.c[k]);
  }
  out.B0 = B.c[0];
  out.B1_residual = B.c[1];
  out.B2 = -B.c[2];
  out.B3 = B.c[3];
  out.b = 3 * out.B3 / (4 * mp::sqrt(hp_pi()));
  return out;
}

LocalDerivatives implicit_derivatives_E(const HPReal& x0, unsigned order, unsigned bits) {
  PrecisionScope scope(bits);
  if (!(x0 >= 0)) throw SingularError("implicit_derivatives_E: x0 must be non-negative");
  const CharacteristicSolution cs = solve_characteristic_system(bits);
  if (!(x0 < cs.rho_b)) throw SingularError("implicit_derivatives_E: x0 at or beyond rho_b (singular Jacobian)");
  HPReal F, S;
  if (x0 <= HPReal(0.9) * cs.rho_b) {
    F = evaluate(network_seed_series(), x0) - 1;
    S = solve_S(x0, F, bits);
  } else {
    // Close to rho_b the truncated series is a poor seed; use the branch expansion.
    TwoConnectedExpansion ex = two_connected_expansion(cs, bits);
    F = ex.E(x0) - 1;
    S = ex.Sigma(x0);
  }
  LocalSeries ls = solve_local(x0, S, F, std::max(order, 1u), bits);
  return derivatives_from(x0, ls, order);
}

namespace {

// Derivatives at x = rho_b (1 - X^2), seeded by the square-root expansion.
LocalDerivatives derivatives_near_branch(const TwoConnectedExpansion& ex, const HPReal& X, unsigned bits) {
  const HPReal x = ex.E.rho * (1 - X * X);
  HPReal E = 0, sig = 0;
  for (std::size_t k = ex.E.a.size(); k-- > 0;) {
    E = E * X + ex.E.a[k];
    sig = sig * X + ex.Sigma.a[k];
  }
  LocalSeries ls = solve_local(x, sig, E - 1, 3, bits);
  return derivatives_from(x, ls, 3);
}

}  // namespace

ConnectedConstants connected_constants(const CharacteristicSolution& cs, const TwoConnectedExpansion& ex,
                                       unsigned bits) {
  PrecisionScope scope(bits);
  // tau B''(tau) = 1 with tau = rho_b (1 - X^2); f decreases in X.
  auto f = [&](const HPReal& X) {
    LocalDerivatives d = derivatives_near_branch(ex, X, bits);
    return HPReal(d.x0 * d.B[2] - 1);
  };
  HPReal lo = HPReal(1e-7), hi = HPReal(0.5);
  HPReal flo = f(lo), fhi = f(hi);
  if (!(flo > 0) || !(fhi < 0)) throw SingularError("connected_constants: tau is not bracketed");
  // Illinois regula falsi, bisecting when progress stalls.
  const HPReal tol = newton_tol(bits);
  int side = 0;
  for (int it = 0; it < 2000 && hi - lo > tol * hi; ++it) {
    HPReal m = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(m > lo && m < hi) || it % 8 == 7) m = (lo + hi) / 2;
    HPReal fm = f(m);
    if (fm == 0) {
      lo = hi = m;
      break;
    }
    if (fm > 0) {
      lo = m;
      flo = fm;
      if (side == 1) fhi /= 2;
      side = 1;
    } else {
      hi = m;
      fhi = fm;
      if (side == -1) flo /= 2;
      side = -1;
    }
  }
  const HPReal X = (lo + hi) / 2;
  LocalDerivatives d = derivatives_near_branch(ex, X, bits);

  ConnectedConstants c;
  c.tau = d.x0;
  c.E_tau = d.E[0];
  c.B_tau = d.B[0];
  c.Bp_tau = d.B[1];
  c.Bpp_tau = d.B[2];
  c.Bppp_tau = d.B[3];
  c.rho = c.tau * mp::exp(-c.Bp_tau);
  c.gamma = 1 / c.rho;
  c.kappa = mp::sqrt(2 * c.tau / (c.tau * c.Bppp_tau + c.Bpp_tau));
  c.C0 = c.tau * (1 + mp::log(c.rho) - mp::log(c.tau)) + c.B_tau;
  c.C2 = c.tau;
  c.C3 = 2 * c.kappa / 3;
  c.C3_printed_formula =
      HPReal(1.5) * mp::sqrt(2 * c.rho * mp::exp(c.Bp_tau) /
                             (c.tau * c.Bppp_tau - c.tau * c.Bpp_tau * c.Bpp_tau + 2 * c.Bpp_tau));
  const HPReal eC0 = mp::exp(c.C0);
  c.G0 = eC0;
  c.G2 = c.C2 * eC0;
  c.G3 = c.C3 * eC0;
  const HPReal gamma_factor = 4 * mp::sqrt(hp_pi()) / 3;  // Gamma(-3/2)
  c.c = c.C3 / gamma_factor;
  c.g = c.G3 / gamma_factor;
  if (!(c.tau < cs.rho_b)) throw SingularError("connected_constants: tau >= rho_b (subcriticality violated)");
  return c;
}

// ====================================================== algebraic branches

HPReal positive_root(const IntPolynomial& p, std::size_t index, unsigned bits) {
  std::vector<IsolatingInterval> pos;
  for (const auto& iv : isolate_real_roots(p)) {
    if (iv.lo >= 0 && iv.hi > 0) pos.push_back(iv);
    else if (iv.hi > 0) pos.push_back({Rational(0), iv.hi});  // straddles 0: root is positive only if p(0) != 0
  }
  if (index >= pos.size()) throw SingularError("positive_root: not enough positive roots");
  Rational w(1);
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), bits + 8);
  IsolatingInterval r = refine(p, pos[index], w);
  PrecisionScope scope(bits);
  return r.midpoint();
}

AlgebraicBranch algebraic_branch_expansion(const BiPolynomial& P, const HPReal& sigma_in,
                                           const TruncatedSeries& counting, unsigned bits) {
  PrecisionScope scope(bits);
  const HPReal sigma = sigma_in;
  const HPReal tol = newton_tol(bits);

  auto newton_y = [&](const HPReal& z, HPReal y) {
    for (int it = 0; it < 200; ++it) {
      BiEval v = bi_eval(P, z, y);
      if (v.py == 0) throw SingularError("algebraic_branch_expansion: p_y vanishes during continuation");
      HPReal step = v.p / v.py;
      y -= step;
      if (mp::abs(step) <= tol * std::max(HPReal(1), HPReal(mp::abs(y)))) return y;
    }
    throw SingularError("algebraic_branch_expansion: continuation step does not converge");
  };

  // Follow the branch in X = sqrt(1 - z/sigma) from X^2 = 1/2 down to 1e-3.
  // While z <= 0.8 sigma the Taylor series itself supplies the guesses;
  // closer in, y is smooth in X and quadratic extrapolation is used.
  std::vector<std::pair<HPReal, HPReal>> path;  // (X, y)
  const HPReal X_end = HPReal(1e-3);
  HPReal X = mp::sqrt(HPReal(0.5));
  HPReal y;
  for (;;) {
    const HPReal z = sigma * (1 - X * X);
    HPReal guess;
    if (X * X >= HPReal(0.2) || path.size() < 3) {
      guess = evaluate(counting, z);
    } else {
      const auto& [X0, y0] = path[path.size() - 3];
      const auto& [X1, y1] = path[path.size() - 2];
      const auto& [X2, y2] = path[path.size() - 1];
      guess = y0 * (X - X1) * (X - X2) / ((X0 - X1) * (X0 - X2)) +
              y1 * (X - X0) * (X - X2) / ((X1 - X0) * (X1 - X2)) +
              y2 * (X - X0) * (X - X1) / ((X2 - X0) * (X2 - X1));
    }
    y = newton_y(z, guess);
    path.emplace_back(X, y);
    if (X == X_end) break;
    X = std::max(HPReal(X * HPReal(0.9)), X_end);
  }
  // Double point: p = p_y = 0 in (z, y).
  HPReal z = sigma, y0 = y;
  int settled = 0;
  for (int it = 0;; ++it) {
    if (it > 200) throw SingularError("algebraic_branch_expansion: double point does not converge");
    BiEval v = bi_eval(P, z, y0);
    auto d = solve_linear<2>({{{v.pz, v.py}, {v.pzy, v.pyy}}}, {-v.p, -v.py});
    z += d[0];
    y0 += d[1];
    if (std::max(mp::abs(d[0]), mp::abs(d[1])) < tol) {
      if (++settled >= 2) break;
    } else {
      settled = 0;
    }
  }
  if (mp::abs(z - sigma) > pow2(-static_cast<int>(bits) / 2)) {
    throw SingularError("algebraic_branch_expansion: the branch has no double point at sigma");
  }

  BiEval v = bi_eval(P, z, y0);
  const HPReal ratio = 2 * sigma * v.pz / v.pyy;
  if (!(ratio > 0)) throw SingularError("algebraic_branch_expansion: not a real square-root branch");
  AlgebraicBranch out;
  out.sigma = sigma;
  out.sigma_from_newton = z;
  out.y0 = y0;
  out.abs_a1 = mp::sqrt(ratio);
  const HPReal slope = (y - y0) / X;
  out.a1 = slope < 0 ? HPReal(-out.abs_a1) : out.abs_a1;
  if (mp::abs(slope - out.a1) > HPReal(0.05) * out.abs_a1) {
    throw SingularError("algebraic_branch_expansion: continued branch does not approach the double point");
  }
  return out;
}

// ====================================================== reports

const ConstantEntry* ConstantsReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const HPReal& ConstantsReport::at(const std::string& name) const {
  const ConstantEntry* e = find(name);
  if (!e) throw SingularError("no constant named " + name);
  return e->value;
}

ConstantsReport theorem1_constants(unsigned bits) {
  PrecisionScope scope(bits);
  CharacteristicSolution cs = solve_characteristic_system(bits);
  NetworkAmplitude na = network_amplitude(cs, bits);
  TwoConnectedExpansion ex = two_connected_expansion(cs, bits);
  ConnectedConstants cc = connected_constants(cs, ex, bits);

  ConstantsReport r;
  r.theorem = 1;
  r.precision_bits = bits;
  auto add = [&](std::string name, const HPReal& v, std::string formula) {
    r.entries.push_back({std::move(name), v, std::move(formula)});
  };
  add("rho_b", cs.rho_b, "characteristic system");
  add("gamma_b", 1 / cs.rho_b, "1/rho_b");
  add("E0", cs.E0(), "E(rho_b)");
  add("S0", cs.S0, "Sigma(rho_b)");
  add("rho_b*E0^3", cs.rho_b * mp::pow(cs.E0(), 3), "< 4/27");
  add("Theta_F", na.implicit.theta_F, "= 1 at the branch point");
  add("E1", na.E1, "sqrt(2 rho_b Theta_x / Theta_FF)");
  add("B0", ex.B0, "B = B0 - B2 X^2 + B3 X^3");
  add("B1", ex.B1_residual, "vanishes");
  add("B2", ex.B2, "");
  add("B3", ex.B3, "");
  add("b", ex.b, "3 B3 / (4 sqrt(pi))");
  add("tau", cc.tau, "tau B''(tau) = 1");
  add("E(tau)", cc.E_tau, "");
  add("rho", cc.rho, "tau exp(-B'(tau))");
  add("gamma", cc.gamma, "1/rho");
  add("kappa", cc.kappa, "sqrt(2 tau / (tau B''' + B''))");
  add("C0", cc.C0, "tau (1 + log rho - log tau) + B(tau)");
  add("C2", cc.C2, "tau");
  add("C3", cc.C3, "2 kappa / 3");
  add("C3_printed_formula", cc.C3_printed_formula, "(3/2) sqrt(2 rho e^B' / (tau B''' - tau B''^2 + 2 B''))");
  add("G0", cc.G0, "exp(C0)");
  add("G2", cc.G2, "C2 exp(C0)");
  add("G3", cc.G3, "C3 exp(C0)");
  add("c", cc.c, "3 C3 / (4 sqrt(pi))");
  add("g", cc.g, "3 G3 / (4 sqrt(pi))");
  add("p", cc.c / cc.g, "c / g = exp(-C0)");
  return r;
}

ConstantsReport theorem2_constants(unsigned bits) {
  PrecisionScope scope(bits);
  const HPReal sqrt_pi = mp::sqrt(hp_pi());
  const TruncatedSeries bs = two_connected_maps_series(64);
  const TruncatedSeries ms = all_maps_series(64);
  const HPReal sigma_b = positive_root(transcribed_disc_B_factor(), 0, bits);
  const HPReal sigma = positive_root(transcribed_disc_M_factor(), 0, bits);
  AlgebraicBranch bb = algebraic_branch_expansion(transcribed_PB(), sigma_b, bs, bits);
  AlgebraicBranch mb = algebraic_branch_expansion(transcribed_PM(), sigma, ms, bits);

  ConstantsReport r;
  r.theorem = 2;
  r.precision_bits = bits;
  auto add = [&](std::string name, const HPReal& v, std::string formula) {
    r.entries.push_back({std::move(name), v, std::move(formula)});
  };
  add("sigma_b", sigma_b, "smallest positive root of the B discriminant factor");
  add("1/sigma_b", 1 / sigma_b, "");
  add("B(sigma_b)", bb.y0, "double point of P_B");
  add("b1", bb.abs_a1, "sqrt(2 sigma_b |P_z| / |P_BB|)");
  add("b1_signed", bb.a1, "B = B0 + b1_signed X + ...");
  add("b", bb.abs_a1 / (2 * sqrt_pi), "b1 / (2 sqrt(pi)) = -b1_signed / Gamma(-1/2)");
  add("b_gamma_half", bb.abs_a1 / sqrt_pi, "b1 / Gamma(1/2)");
  add("sigma", sigma, "smallest positive root of the M discriminant factor");
  add("1/sigma", 1 / sigma, "");
  add("M(sigma)", mb.y0, "double point of P_M");
  add("m1", mb.abs_a1, "sqrt(2 sigma |P_z| / |P_MM|)");
  add("m1_signed", mb.a1, "M = M0 + m1_signed X + ...");
  add("m", mb.abs_a1 / (2 * sqrt_pi), "m1 / (2 sqrt(pi))");
  add("m_gamma_half", mb.abs_a1 / sqrt_pi, "m1 / Gamma(1/2)");
  add("sigma(1+M(sigma))^2", sigma * (1 + mb.y0) * (1 + mb.y0), "< sigma_b (subcritical)");
  add("sigma(1+M(sigma)^2)", sigma * (1 + mb.y0 * mb.y0), "");
  return r;
}

}  // namespace chordal
