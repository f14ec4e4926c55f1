#include "chordal/series.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace chordal {

namespace {

bool nil(const Rational& q) { return sgn(q) == 0; }
bool nil(const YPoly& p) { return p.is_zero(); }

Rational unit_inverse(const Rational& q) {
  if (nil(q)) throw SeriesError("reciprocal: constant term is zero");
  return 1 / q;
}

YPoly unit_inverse(const YPoly& p) {
  if (p.is_zero() || !p.is_constant()) {
    throw SeriesError("reciprocal: constant term is not a unit in Q[y]");
  }
  return YPoly(Rational(1 / p[0]));
}

Integer lcm_of_denominators(std::span<const Rational> c) {
  Integer l = 1;
  for (const auto& q : c) {
    if (q.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  return l;
}

}  // namespace

// ---------------------------------------------------------------- YPoly

YPoly::YPoly(const Rational& c) {
  if (!nil(c)) c_.push_back(c);
}

YPoly::YPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

YPoly YPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return YPoly(std::move(v));
}

const Rational& YPoly::operator[](std::size_t k) const {
  static const Rational zero(0);
  return k < c_.size() ? c_[k] : zero;
}

void YPoly::trim() {
  while (!c_.empty() && nil(c_.back())) c_.pop_back();
}

YPoly& YPoly::operator+=(const YPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

YPoly& YPoly::operator*=(const YPoly& o) { return *this = *this * o; }

YPoly& YPoly::operator*=(const Rational& k) {
  if (nil(k)) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= k;
  return *this;
}

YPoly YPoly::operator-() const {
  YPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

// Denominators are cleared first so the convolution runs on integers.
YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Integer da = lcm_of_denominators(a.c_);
  const Integer db = lcm_of_denominators(b.c_);
  std::vector<Integer> ia(a.c_.size()), ib(b.c_.size());
  for (std::size_t i = 0; i < ia.size(); ++i) ia[i] = a.c_[i].get_num() * (da / a.c_[i].get_den());
  for (std::size_t j = 0; j < ib.size(); ++j) ib[j] = b.c_[j].get_num() * (db / b.c_[j].get_den());
  std::vector<Integer> prod(ia.size() + ib.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (sgn(ia[i]) == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  const Integer den = da * db;
  std::vector<Rational> out(prod.size());
  for (std::size_t k = 0; k < prod.size(); ++k) {
    out[k] = Rational(prod[k], den);
    out[k].canonicalize();
  }
  return YPoly(std::move(out));
}

Rational YPoly::operator()(const Rational& y) const {
  Rational r = 0;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * y + c_[k];
  return r;
}

YPoly YPoly::partial_y() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long>(k);
  return YPoly(std::move(v));
}

YPoly YPoly::integrate_y() const {
  if (c_.empty()) return {};
  std::vector<Rational> v(c_.size() + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) v[k + 1] = c_[k] / static_cast<long>(k + 1);
  return YPoly(std::move(v));
}

YPoly YPoly::divide_by_y() const {
  if (c_.empty()) return {};
  if (!nil(c_[0])) throw SeriesError("divide_by_y: coefficient has a nonzero y^0 term");
  return YPoly(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

std::string YPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (nil(c_[k])) continue;
    if (!first) os << " + ";
    os << c_[k].get_str();
    if (k > 0) os << "*y^" << k;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- series

template <class C>
BasicSeries<C>::BasicSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw SeriesError("series needs at least one coefficient");
}

template <class C>
BasicSeries<C> BasicSeries<C>::variable(std::size_t order) {
  BasicSeries s(order);
  if (order >= 1) s[1] = C(1);
  return s;
}

template <class C>
BasicSeries<C> BasicSeries<C>::constant(const C& value, std::size_t order) {
  BasicSeries s(order);
  s[0] = value;
  return s;
}

template <class C>
std::size_t BasicSeries<C>::valuation() const {
  for (std::size_t n = 0; n < c_.size(); ++n) {
    if (!nil(c_[n])) return n;
  }
  return c_.size();
}

template class BasicSeries<Rational>;
template class BasicSeries<YPoly>;

namespace {

template <class C>
void require_same_order(const BasicSeries<C>& a, const BasicSeries<C>& b, const char* op) {
  if (a.order() != b.order()) {
    throw SeriesError(std::string(op) + ": mismatched truncation orders " +
                      std::to_string(a.order()) + " and " + std::to_string(b.order()));
  }
}

}  // namespace

template <class C>
BasicSeries<C> operator+(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  require_same_order(a, b, "add");
  BasicSeries<C> r = a;
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] += b[n];
  return r;
}

template <class C>
BasicSeries<C> operator-(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  require_same_order(a, b, "sub");
  BasicSeries<C> r = a;
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] -= b[n];
  return r;
}

template <class C>
BasicSeries<C> operator-(const BasicSeries<C>& a) {
  BasicSeries<C> r(a.order());
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] -= a[n];
  return r;
}

template <class C>
BasicSeries<C> operator*(const BasicSeries<C>& a, const Rational& k) {
  BasicSeries<C> r = a;
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] *= k;
  return r;
}

template <class C>
BasicSeries<C> mul(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  require_same_order(a, b, "mul");
  const std::size_t N = a.order();
  BasicSeries<C> r(N);
  const std::size_t va = a.valuation(), vb = b.valuation();
  for (std::size_t i = va; i <= N; ++i) {
    if (nil(a[i])) continue;
    for (std::size_t j = vb; i + j <= N; ++j) {
      if (nil(b[j])) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

template <class C>
BasicSeries<C> scale(const BasicSeries<C>& a, const C& k) {
  BasicSeries<C> r(a.order());
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] * k;
  return r;
}

template <class C>
BasicSeries<C> pow(const BasicSeries<C>& a, unsigned k) {
  BasicSeries<C> r = BasicSeries<C>::constant(C(1), a.order());
  BasicSeries<C> base = a;
  while (k > 0) {
    if (k & 1u) r = mul(r, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return r;
}

template <class Outer, class C>
BasicSeries<C> compose(const BasicSeries<Outer>& outer, const BasicSeries<C>& inner) {
  static_assert(std::is_same_v<Outer, Rational> || std::is_same_v<Outer, C>,
                "compose: outer coefficients must be Rational or match the inner ring");
  if (!nil(inner[0])) {
    throw SeriesError("compose: inner series has a nonzero constant term");
  }
  const std::size_t N = inner.order();
  const std::size_t v = inner.valuation();
  if (v > N) return BasicSeries<C>::constant(C(outer[0]), N);
  const std::size_t needed = N / v;
  if (outer.order() < needed) {
    throw SeriesError("compose: outer series of order " + std::to_string(outer.order()) +
                      " is too short for inner of order " + std::to_string(N));
  }
  BasicSeries<C> r = BasicSeries<C>::constant(C(outer[needed]), N);
  for (std::size_t k = needed; k-- > 0;) {
    r = mul(r, inner);
    r[0] += C(outer[k]);
  }
  return r;
}

template <class C>
BasicSeries<C> exp(const BasicSeries<C>& a) {
  if (!nil(a[0])) throw SeriesError("exp: argument has a nonzero constant term");
  const std::size_t N = a.order();
  BasicSeries<C> w(N);
  w[0] = C(1);
  for (std::size_t n = 1; n <= N; ++n) {
    C acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (nil(a[k])) continue;
      acc += a[k] * w[n - k] * Rational(static_cast<long>(k));
    }
    w[n] = acc * Rational(1, static_cast<long>(n));
  }
  return w;
}

template <class C>
BasicSeries<C> reciprocal(const BasicSeries<C>& a) {
  const C inv0 = unit_inverse(a[0]);
  const std::size_t N = a.order();
  BasicSeries<C> r(N);
  r[0] = inv0;
  for (std::size_t n = 1; n <= N; ++n) {
    C acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (nil(a[k])) continue;
      acc += a[k] * r[n - k];
    }
    r[n] = -(acc * inv0);
  }
  return r;
}

template <class C>
BasicSeries<C> derivative(const BasicSeries<C>& a) {
  const std::size_t N = a.order();
  if (N == 0) return BasicSeries<C>(0);
  BasicSeries<C> r(N - 1);
  for (std::size_t n = 1; n <= N; ++n) r[n - 1] = a[n] * Rational(static_cast<long>(n));
  return r;
}

template <class C>
BasicSeries<C> integrate(const BasicSeries<C>& a) {
  const std::size_t N = a.order();
  BasicSeries<C> r(N + 1);
  for (std::size_t n = 0; n <= N; ++n) r[n + 1] = a[n] * Rational(1, static_cast<long>(n + 1));
  return r;
}

template <class C>
BasicSeries<C> shift(const BasicSeries<C>& a, std::size_t m) {
  BasicSeries<C> r(a.order());
  for (std::size_t n = m; n <= a.order(); ++n) r[n] = a[n - m];
  return r;
}

template <class C>
BasicSeries<C> divide_by_x_power(const BasicSeries<C>& a, std::size_t m) {
  if (m > a.order()) throw SeriesError("divide_by_x_power: shift exceeds order");
  for (std::size_t n = 0; n < m; ++n) {
    if (!nil(a[n])) throw SeriesError("divide_by_x_power: series is not divisible by x^m");
  }
  BasicSeries<C> r(a.order() - m);
  for (std::size_t n = m; n <= a.order(); ++n) r[n - m] = a[n];
  return r;
}

template <class C>
BasicSeries<C> truncate(const BasicSeries<C>& a, std::size_t order) {
  if (order > a.order()) {
    throw SeriesError("truncate: cannot raise order " + std::to_string(a.order()) + " to " +
                      std::to_string(order));
  }
  return BasicSeries<C>(std::vector<C>(a.coeffs().begin(), a.coeffs().begin() + order + 1));
}

template <class C>
BasicSeries<C> solve_fixed_point(const std::function<BasicSeries<C>(const BasicSeries<C>&)>& phi,
                                 std::size_t order, const C& seed) {
  BasicSeries<C> x = BasicSeries<C>::constant(seed, order);
  for (std::size_t pass = 0; pass <= order; ++pass) {
    BasicSeries<C> y = phi(x);
    if (y.order() != order) throw SeriesError("solve_fixed_point: map changed the truncation order");
    if (y == x) return x;
    for (std::size_t n = 0; n < pass; ++n) {
      if (!(y[n] == x[n])) {
        throw SeriesError("solve_fixed_point: not a contraction; coefficient " + std::to_string(n) +
                          " changed at pass " + std::to_string(pass));
      }
    }
    x = std::move(y);
  }
  if (!(phi(x) == x)) throw SeriesError("solve_fixed_point: no fixed point after N+1 passes");
  return x;
}

#define CHORDAL_INSTANTIATE(C)                                                                   \
  template BasicSeries<C> operator+(const BasicSeries<C>&, const BasicSeries<C>&);               \
  template BasicSeries<C> operator-(const BasicSeries<C>&, const BasicSeries<C>&);               \
  template BasicSeries<C> operator-(const BasicSeries<C>&);                                      \
  template BasicSeries<C> operator*(const BasicSeries<C>&, const Rational&);                     \
  template BasicSeries<C> mul(const BasicSeries<C>&, const BasicSeries<C>&);                     \
  template BasicSeries<C> scale(const BasicSeries<C>&, const C&);                                \
  template BasicSeries<C> pow(const BasicSeries<C>&, unsigned);                                  \
  template BasicSeries<C> compose(const BasicSeries<Rational>&, const BasicSeries<C>&);          \
  template BasicSeries<C> exp(const BasicSeries<C>&);                                            \
  template BasicSeries<C> reciprocal(const BasicSeries<C>&);                                     \
  template BasicSeries<C> derivative(const BasicSeries<C>&);                                     \
  template BasicSeries<C> integrate(const BasicSeries<C>&);                                      \
  template BasicSeries<C> shift(const BasicSeries<C>&, std::size_t);                             \
  template BasicSeries<C> divide_by_x_power(const BasicSeries<C>&, std::size_t);                 \
  template BasicSeries<C> truncate(const BasicSeries<C>&, std::size_t);                          \
  template BasicSeries<C> solve_fixed_point(                                                     \
      const std::function<BasicSeries<C>(const BasicSeries<C>&)>&, std::size_t, const C&);

CHORDAL_INSTANTIATE(Rational)
CHORDAL_INSTANTIATE(YPoly)
#undef CHORDAL_INSTANTIATE

template BivariateSeries compose(const BivariateSeries&, const BivariateSeries&);

// ---------------------------------------------------------------- bivariate

BivariateSeries partial_y(const BivariateSeries& a) {
  BivariateSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r[n] = a[n].partial_y();
  return r;
}

BivariateSeries integrate_y(const BivariateSeries& a) {
  BivariateSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r[n] = a[n].integrate_y();
  return r;
}

BivariateSeries divide_by_y(const BivariateSeries& a) {
  BivariateSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    try {
      r[n] = a[n].divide_by_y();
    } catch (const SeriesError&) {
      throw SeriesError("divide_by_y: coefficient of x^" + std::to_string(n) +
                        " is not divisible by y");
    }
  }
  return r;
}

TruncatedSeries at_y(const BivariateSeries& a, const Rational& y) {
  TruncatedSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r[n] = a[n](y);
  return r;
}

BivariateSeries to_bivariate(const TruncatedSeries& a) {
  BivariateSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r[n] = YPoly(a[n]);
  return r;
}

std::vector<Integer> egf_counts(const TruncatedSeries& a) {
  std::vector<Integer> out(a.order() + 1);
  Integer f = 1;
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (n > 0) f *= static_cast<unsigned long>(n);
    Rational v = a[n] * f;
    if (v.get_den() != 1) {
      throw SeriesError("egf_counts: n!*a_n is not an integer at n=" + std::to_string(n));
    }
    out[n] = v.get_num();
  }
  return out;
}

std::vector<Integer> ogf_counts(const TruncatedSeries& a) {
  std::vector<Integer> out(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (a[n].get_den() != 1) {
      throw SeriesError("ogf_counts: coefficient is not an integer at n=" + std::to_string(n));
    }
    out[n] = a[n].get_num();
  }
  return out;
}

HPReal evaluate(const TruncatedSeries& a, const HPReal& x) {
  HPReal r = 0;
  for (std::size_t n = a.order() + 1; n-- > 0;) r = r * x + to_hp(a[n]);
  return r;
}

}  // namespace chordal
