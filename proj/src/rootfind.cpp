#include "chordal/rootfind.hpp"

#include <algorithm>

namespace chordal {

namespace {

IntPolynomial positive_primitive(const IntPolynomial& p) {
  Integer c = abs(content(p));
  return is_zero(c) ? p : exact_div_scalar(p, c);
}

// Remainder of a by b up to a positive constant factor.
IntPolynomial positive_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = pseudo_remainder(a, b);
  const int e = a.degree() - b.degree() + 1;
  if (sgn(b.lc()) < 0 && (e % 2)) r = -r;
  return r;
}

int variations(const std::vector<IntPolynomial>& seq, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Integer cauchy_bound(const IntPolynomial& p) {
  Integer m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max<Integer>(m, abs(p[k]));
  Integer an = abs(p.lc());
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), an.get_mpz_t());
  return q + 1;
}

// A point strictly inside (lo, hi) where p does not vanish, close to the middle.
Rational split_point(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  for (long k = 3; sign_at(p, mid) == 0; k += 2) mid = lo + (hi - lo) * Rational(k - 1, 2 * k);
  return mid;
}

}  // namespace

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p_in) {
  IntPolynomial p = positive_primitive(squarefree_part(p_in));
  std::vector<IntPolynomial> seq{p};
  if (p.degree() <= 0) return seq;
  seq.push_back(positive_primitive(p.derivative()));
  while (seq.back().degree() > 0) {
    IntPolynomial r = positive_remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(positive_primitive(-r));
  }
  return seq;
}

int count_real_roots(const std::vector<IntPolynomial>& sturm, const Rational& a, const Rational& b) {
  return variations(sturm, a) - variations(sturm, b);
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPolynomial& p_in) {
  if (p_in.is_zero()) throw RootError("isolate_real_roots: zero polynomial");
  std::vector<IntPolynomial> sturm = sturm_sequence(p_in);
  const IntPolynomial& p = sturm.front();
  std::vector<IsolatingInterval> out;
  if (p.degree() <= 0) return out;
  const Rational bound(cauchy_bound(p));

  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> stack{{-bound, bound, count_real_roots(sturm, -bound, bound)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.count == 0) continue;
    if (j.count == 1) {
      out.push_back({j.lo, j.hi});
      continue;
    }
    Rational mid = split_point(p, j.lo, j.hi);
    int left = count_real_roots(sturm, j.lo, mid);
    stack.push_back({mid, j.hi, j.count - left});
    stack.push_back({j.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

IsolatingInterval refine(const IntPolynomial& p_in, IsolatingInterval iv, const Rational& width) {
  IntPolynomial p = squarefree_part(p_in);
  if (iv.lo == iv.hi) return iv;
  int slo = sign_at(p, iv.lo);
  if (slo == 0 || slo == sign_at(p, iv.hi)) throw RootError("refine: interval carries no sign change");
  while (iv.width() > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = sign_at(p, mid);
    if (s == 0) return {mid, mid};
    if (s == slo) iv.lo = mid;
    else iv.hi = mid;
  }
  return iv;
}

// ------------------------------------------------------------- complex roots

HPReal HPComplex::abs() const { return boost::multiprecision::hypot(re, im); }

namespace {

HPComplex operator+(const HPComplex& a, const HPComplex& b) { return {a.re + b.re, a.im + b.im}; }
HPComplex operator-(const HPComplex& a, const HPComplex& b) { return {a.re - b.re, a.im - b.im}; }
HPComplex operator*(const HPComplex& a, const HPComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
HPComplex operator/(const HPComplex& a, const HPComplex& b) {
  HPReal d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// p(z), p'(z) and sum |a_k| |z|^k.
void horner(const std::vector<HPReal>& a, const HPComplex& z, HPComplex& p, HPComplex& dp, HPReal& mag) {
  p = {HPReal(0), HPReal(0)};
  dp = {HPReal(0), HPReal(0)};
  mag = 0;
  const HPReal r = z.abs();
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + HPComplex{a[k], HPReal(0)};
    mag = mag * r + boost::multiprecision::abs(a[k]);
  }
}

}  // namespace

RootSet all_roots(const IntPolynomial& p_in, unsigned bits, unsigned max_iterations) {
  IntPolynomial p = positive_primitive(squarefree_part(p_in));
  if (p.degree() < 1) throw RootError("all_roots: polynomial has no roots");
  PrecisionScope scope(bits);
  const int n = p.degree();
  std::vector<HPReal> a;
  for (const auto& c : p.coeffs()) a.push_back(to_hp(c));

  RootSet out;
  out.precision_bits = bits;
  // Starting points on a circle inside the Fujiwara bound.
  HPReal radius = 0;
  for (int k = 1; k <= n; ++k) {
    HPReal q = boost::multiprecision::abs(a[n - k] / a[n]);
    if (q != 0) radius = std::max(radius, HPReal(boost::multiprecision::pow(q, HPReal(1) / k)));
  }
  const HPReal pi = hp_pi();
  std::vector<HPComplex> z(n);
  for (int k = 0; k < n; ++k) {
    HPReal t = 2 * pi * k / n + HPReal(0.7);
    z[k] = {radius * boost::multiprecision::cos(t), radius * boost::multiprecision::sin(t)};
  }

  const HPReal tol = boost::multiprecision::ldexp(HPReal(1), -static_cast<int>(bits) + 12);
  int settle = 0;
  unsigned it = 0;
  for (; it < max_iterations; ++it) {
    HPReal worst = 0;
    for (int i = 0; i < n; ++i) {
      HPComplex pv, dv;
      HPReal mag;
      horner(a, z[i], pv, dv, mag);
      if (pv.re == 0 && pv.im == 0) continue;
      HPComplex w = pv / dv;
      HPComplex s{HPReal(0), HPReal(0)};
      for (int j = 0; j < n; ++j) {
        if (j != i) s = s + HPComplex{HPReal(1), HPReal(0)} / (z[i] - z[j]);
      }
      HPComplex corr = w / (HPComplex{HPReal(1), HPReal(0)} - w * s);
      z[i] = z[i] - corr;
      HPReal rel = corr.abs() / std::max(HPReal(1), z[i].abs());
      worst = std::max(worst, rel);
    }
    if (worst < tol && ++settle >= 3) break;
  }
  if (it == max_iterations) {
    throw RootError("all_roots: no convergence after " + std::to_string(max_iterations) +
                    " iterations (degree " + std::to_string(n) + ", " + std::to_string(bits) + " bits)");
  }
  out.iterations = it + 1;

  // Inclusion radii n |p(z_i)| / |a_n prod (z_i - z_j)|, with the Horner
  // rounding error added to |p(z_i)|.
  const HPReal unit = boost::multiprecision::ldexp(HPReal(1), 1 - static_cast<int>(bits));
  for (int i = 0; i < n; ++i) {
    HPComplex pv, dv;
    HPReal mag;
    horner(a, z[i], pv, dv, mag);
    HPReal prod = boost::multiprecision::abs(a[n]);
    for (int j = 0; j < n; ++j) {
      if (j != i) prod *= (z[i] - z[j]).abs();
    }
    HPReal err = pv.abs() + 8 * n * unit * mag;
    out.roots.push_back({z[i], n * err / prod});
  }
  out.discs_disjoint = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((out.roots[i].z - out.roots[j].z).abs() <= out.roots[i].radius + out.roots[j].radius) {
        out.discs_disjoint = false;
      }
    }
  }
  return out;
}

DominanceCheck check_modulus_dominance(const RootSet& rs, const HPReal& target) {
  if (rs.roots.empty()) throw RootError("check_modulus_dominance: empty root set");
  PrecisionScope scope(rs.precision_bits);
  DominanceCheck c;
  HPReal best = -1;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    HPComplex d{rs.roots[i].z.re - target, rs.roots[i].z.im};
    HPReal dist = d.abs();
    if (best < 0 || dist < best) {
      best = dist;
      c.index = i;
    }
  }
  const ComplexRoot& t = rs.roots[c.index];
  c.modulus = t.z.abs();
  c.gap = -1;
  c.bound = 0;
  c.unique_on_circle = rs.discs_disjoint;
  c.strictly_minimal = rs.discs_disjoint;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (i == c.index) continue;
    const ComplexRoot& r = rs.roots[i];
    HPReal m = r.z.abs();
    HPReal gap = boost::multiprecision::abs(m - c.modulus);
    HPReal bound = 10 * (r.radius + t.radius);
    if (c.gap < 0 || gap < c.gap) c.gap = gap;
    c.bound = std::max(c.bound, bound);
    if (gap <= bound) c.unique_on_circle = false;
    if (m <= c.modulus + bound) c.strictly_minimal = false;
  }
  if (c.gap < 0) c.gap = 0;
  return c;
}

}  // namespace chordal
