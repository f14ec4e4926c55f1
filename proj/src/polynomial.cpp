#include "chordal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chordal {

bool is_zero(const Integer& a) { return sgn(a) == 0; }

Integer exact_div(const Integer& a, const Integer& b) {
  if (is_zero(b)) throw PolyError("exact_div: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw PolyError("exact_div: inexact integer division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// ------------------------------------------------------------------ Poly<R>

template <class R>
Poly<R>::Poly(const R& c) {
  if (!chordal::is_zero(c)) c_.push_back(c);
}

template <class R>
Poly<R>::Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) {
  trim();
}

template <class R>
Poly<R> Poly<R>::monomial(unsigned degree, const R& c) {
  std::vector<R> v(degree + 1, R(0));
  v[degree] = c;
  return Poly(std::move(v));
}

template <class R>
const R& Poly<R>::lc() const {
  if (c_.empty()) throw PolyError("lc: zero polynomial");
  return c_.back();
}

template <class R>
const R& Poly<R>::operator[](std::size_t k) const {
  static const R zero(0);
  return k < c_.size() ? c_[k] : zero;
}

template <class R>
void Poly<R>::trim() {
  while (!c_.empty() && chordal::is_zero(c_.back())) c_.pop_back();
}

template <class R>
Poly<R>& Poly<R>::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

template <class R>
Poly<R>& Poly<R>::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

template <class R>
Poly<R> Poly<R>::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

template <class R>
Poly<R> Poly<R>::multiply(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (chordal::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (chordal::is_zero(b.c_[j])) continue;
      if constexpr (std::is_same_v<R, Integer>) {
        mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      } else {
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
  }
  return Poly(std::move(out));
}

template <class R>
Poly<R> Poly<R>::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<R> d(c_.size() - 1, R(0));
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * R(static_cast<long>(k));
  return Poly(std::move(d));
}

template <class R>
R Poly<R>::operator()(const R& x) const {
  R acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

template class Poly<Integer>;
template class Poly<IntPolynomial>;
template class Poly<BiPolynomial>;

// ------------------------------------------------------------- ring helpers

template <class R>
Poly<R> exact_div_scalar(const Poly<R>& a, const R& b) {
  std::vector<R> c(a.coeffs().size(), R(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = exact_div(a.coeffs()[i], b);
  return Poly<R>(std::move(c));
}

template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw PolyError("exact_div: division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw PolyError("exact_div: inexact polynomial division");
  Poly<R> rem = a;
  std::vector<R> q(a.degree() - b.degree() + 1, R(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const unsigned k = rem.degree() - b.degree();
    q[k] = exact_div(rem.lc(), b.lc());
    rem -= Poly<R>::monomial(k, q[k]) * b;
  }
  if (!rem.is_zero()) throw PolyError("exact_div: inexact polynomial division");
  return Poly<R>(std::move(q));
}

template <class R>
R power(const R& a, unsigned k) {
  R r(1), base = a;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw PolyError("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  Poly<R> r = a;
  int e = a.degree() - b.degree() + 1;
  const Poly<R> lb(b.lc());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly<R> t = Poly<R>::monomial(r.degree() - b.degree(), r.lc());
    r = lb * r - t * b;
    --e;
  }
  return Poly<R>(power(b.lc(), static_cast<unsigned>(e))) * r;
}

template <class R>
R resultant(const Poly<R>& a_in, const Poly<R>& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) throw PolyError("resultant: zero polynomial");
  Poly<R> a = a_in, b = b_in;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
  }
  if (b.degree() == 0) return power(b.lc(), static_cast<unsigned>(a.degree())) * R(s);
  R g(1), h(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    Poly<R> r = pseudo_remainder(a, b);
    if (r.is_zero()) return R(0);
    a = b;
    b = exact_div_scalar(r, R(g * power(h, static_cast<unsigned>(delta))));
    g = a.lc();
    if (delta > 0) h = exact_div(power(g, static_cast<unsigned>(delta)), power(h, static_cast<unsigned>(delta - 1)));
    if (b.degree() == 0) {
      const unsigned da = static_cast<unsigned>(a.degree());
      R res = exact_div(power(b.lc(), da), power(h, da - 1));
      return res * R(s);
    }
  }
}

template <class R>
R discriminant(const Poly<R>& p) {
  if (p.degree() < 2) throw PolyError("discriminant: degree must be at least 2");
  const long d = p.degree();
  R r = exact_div(resultant(p, p.derivative()), p.lc());
  return (d * (d - 1) / 2) % 2 ? R(-r) : r;
}

#define CHORDAL_INSTANTIATE(R)                                         \
  template Poly<R> exact_div(const Poly<R>&, const Poly<R>&);          \
  template Poly<R> exact_div_scalar(const Poly<R>&, const R&);         \
  template Poly<R> pseudo_remainder(const Poly<R>&, const Poly<R>&);   \
  template R resultant(const Poly<R>&, const Poly<R>&);                \
  template R discriminant(const Poly<R>&);                             \
  template R power(const R&, unsigned);

CHORDAL_INSTANTIATE(Integer)
CHORDAL_INSTANTIATE(IntPolynomial)
CHORDAL_INSTANTIATE(BiPolynomial)
#undef CHORDAL_INSTANTIATE

// ------------------------------------------------------- integer polynomials

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (!p.is_zero() && sgn(p.lc()) < 0) g = -g;
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  return exact_div_scalar(p, content(p));
}

IntPolynomial gcd(const IntPolynomial& a_in, const IntPolynomial& b_in) {
  if (a_in.is_zero()) return primitive_part(b_in);
  if (b_in.is_zero()) return primitive_part(a_in);
  Integer c = 0;
  mpz_gcd(c.get_mpz_t(), content(a_in).get_mpz_t(), content(b_in).get_mpz_t());
  IntPolynomial a = primitive_part(a_in), b = primitive_part(b_in);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = b;
    b = primitive_part(r);
  }
  return IntPolynomial(c) * primitive_part(a);
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return primitive_part(p);
  IntPolynomial g = gcd(p, p.derivative());
  return primitive_part(exact_div(primitive_part(p), primitive_part(g)));
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
  // Horner on the numerator with a common denominator: sum c_k n^k d^(m-k).
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  if (p.is_zero()) return 0;
  Integer acc = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * n + p.coeffs()[k] * power(d, static_cast<unsigned>(p.degree() - k));
  return frac(acc, power(d, static_cast<unsigned>(p.degree())));
}

int sign_at(const IntPolynomial& p, const Rational& x) { return sgn(evaluate(p, x)); }

HPReal evaluate(const IntPolynomial& p, const HPReal& x) {
  HPReal acc = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + to_hp(p.coeffs()[k]);
  return acc;
}

std::string to_string(const IntPolynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Integer& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    Integer a = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) os << (k == 0 || a != 1 ? "*" : "") << var;
    if (k > 1) os << '^' << k;
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------------ bivariate

Integer coeff(const BiPolynomial& p, unsigned z_exp, unsigned w_exp) { return p[w_exp][z_exp]; }

int z_degree(const BiPolynomial& p) {
  int d = -1;
  for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
  return d;
}

std::vector<std::tuple<unsigned, unsigned, Integer>> terms(const BiPolynomial& p) {
  std::vector<std::tuple<unsigned, unsigned, Integer>> t;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const auto& c = p.coeffs()[j];
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
      if (!is_zero(c.coeffs()[i])) t.emplace_back(i, j, c.coeffs()[i]);
    }
  }
  return t;
}

BiPolynomial from_terms(const std::vector<std::tuple<unsigned, unsigned, Integer>>& t) {
  BiPolynomial p;
  for (const auto& [i, j, c] : t) p += BiPolynomial::monomial(j, IntPolynomial::monomial(i, c));
  return p;
}

Integer content(const BiPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer ci = abs(content(c));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
  }
  if (!p.is_zero() && sgn(p.lc().lc()) < 0) g = -g;
  return g;
}

BiPolynomial primitive_part(const BiPolynomial& p) {
  if (p.is_zero()) return p;
  const IntPolynomial c(content(p));
  return exact_div_scalar(p, c);
}

TruncatedSeries substitute_series(const BiPolynomial& p, const TruncatedSeries& q) {
  const std::size_t N = q.order();
  TruncatedSeries acc(N);
  for (std::size_t j = p.coeffs().size(); j-- > 0;) {
    TruncatedSeries cj(N);
    const auto& c = p.coeffs()[j].coeffs();
    for (std::size_t i = 0; i < c.size() && i <= N; ++i) cj[i] = Rational(c[i]);
    acc = acc * q + cj;
  }
  return acc;
}

std::string to_string(const BiPolynomial& p, char z, char w) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = p.coeffs().size(); j-- > 0;) {
    const auto& c = p.coeffs()[j];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << '(' << to_string(c, z) << ')';
    if (j > 0) os << '*' << w;
    if (j > 1) os << '^' << j;
    first = false;
  }
  return os.str();
}

// --------------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const std::string& s, char z, char w) : s_(s), z_(z), w_(w) {}

  BiPolynomial parse() {
    BiPolynomial r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PolyError("parse error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || (c != '\0' && (c == z_ || c == w_));
  }

  BiPolynomial expr() {
    BiPolynomial acc;
    char c = peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      BiPolynomial t = term();
      if (c == '+') acc += t;
      else acc -= t;
    }
  }

  BiPolynomial term() {
    BiPolynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  BiPolynomial factor() {
    BiPolynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      return power(base, static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  BiPolynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      BiPolynomial r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return BiPolynomial(IntPolynomial(Integer(s_.substr(start, pos_ - start))));
    }
    if (c != '\0' && c == z_) {
      ++pos_;
      return BiPolynomial(IntPolynomial::x());
    }
    if (c != '\0' && c == w_) {
      ++pos_;
      return BiPolynomial::x();
    }
    fail("expected a number, a variable or '('");
  }

  const std::string& s_;
  char z_, w_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPolynomial parse_bipolynomial(const std::string& text, char z, char w) {
  return Parser(text, z, w).parse();
}

IntPolynomial parse_polynomial(const std::string& text, char var) {
  BiPolynomial p = Parser(text, var, '\0').parse();
  return p.is_zero() ? IntPolynomial() : p[0];
}

// ---------------------------------------------------------------- annihilators

AnnihilatorResult annihilator_check(const BiPolynomial& p, const TruncatedSeries& s) {
  TruncatedSeries r = substitute_series(p, s);
  for (std::size_t n = 0; n <= r.order(); ++n) {
    if (sgn(r[n]) != 0) return {false, n};
  }
  return {true, std::nullopt};
}

BiPolynomial transcribed_PB() {
  return parse_bipolynomial("B^9 - z^2B^5 + z^3B^4 + z^3B^3 - 3z^4B^2 + 3z^5B - z^6", 'z', 'B');
}

BiPolynomial transcribed_PM() {
  return parse_bipolynomial(
      "z^6M^12 + 3z^5(4z - 1)M^11 + z^3(66z^3 - 30z^2 + 3z - 1)M^10"
      " + (220z^6 - 135z^5 + 24z^4 - 7z^3 + z^2 - 1)M^9"
      " + z^2(495z^4 - 360z^3 + 84z^2 - 21z + 4)M^8"
      " + z^2(792z^4 - 630z^3 + 168z^2 - 35z + 6)M^7"
      " + z^2(924z^4 - 756z^3 + 210z^2 - 35z + 4)M^6"
      " + z^2(792z^4 - 630z^3 + 168z^2 - 21z + 1)M^5"
      " + (495z^6 - 360z^5 + 84z^4 - 7z^3)M^4"
      " + z^3(220z^3 - 135z^2 + 24z - 1)M^3"
      " + 3z^4(22z^2 - 10z + 1)M^2"
      " + 3z^5(4z - 1)M"
      " + z^6",
      'z', 'M');
}

IntPolynomial transcribed_disc_B_factor() {
  return parse_polynomial(
      "387420489z^6 + 573956280z^5 + 184705272z^4 - 81168524z^3 - 15907392z^2 + 3326272z - 135424");
}

IntPolynomial transcribed_disc_M_factor() {
  return parse_polynomial(
      "2035256037376z^12 - 2215690119168z^11 + 6474387490048z^10 + 1262789263168z^9"
      " - 3620212090976z^8 + 1275725763644z^7 - 301902286683z^6 + 60575733276z^5"
      " - 13112588384z^4 - 5212588972z^3 + 1812419712z^2 - 148471488z + 3656448");
}

BiPolynomial eliminate_B_annihilator() {
  // Polynomials in S over Z[z][D].
  auto bp = [](const char* s) { return parse_bipolynomial(s, 'z', 'D'); };
  TriPolynomial ternary(std::vector<BiPolynomial>{bp("-z^3D^6"), bp("1 - 3z^3D^6"), bp("-3z^3D^6"), bp("-z^3D^6")});
  TriPolynomial core(std::vector<BiPolynomial>{bp("D - z^2D^5 - 1"), bp("-z^2D^5")});
  BiPolynomial r = resultant(ternary, core);

  // D = B/z: the coefficient of D^j becomes that of B^j times z^(d-j).
  const unsigned d = static_cast<unsigned>(r.degree());
  std::vector<IntPolynomial> out(d + 1);
  for (unsigned j = 0; j <= d; ++j) out[j] = r[j] * IntPolynomial::monomial(d - j, Integer(1));
  BiPolynomial pb(std::move(out));

  // Remove the largest power of z dividing every coefficient.
  unsigned low = ~0u;
  for (const auto& c : pb.coeffs()) {
    for (unsigned i = 0; i < c.coeffs().size(); ++i) {
      if (!is_zero(c.coeffs()[i])) {
        low = std::min(low, i);
        break;
      }
    }
  }
  if (low > 0 && low != ~0u) pb = exact_div_scalar(pb, IntPolynomial::monomial(low, Integer(1)));
  return primitive_part(pb);
}

BiPolynomial derive_M_annihilator(const BiPolynomial& pb) {
  const BiPolynomial one_plus_m = BiPolynomial(1) + BiPolynomial::x();
  const BiPolynomial q = one_plus_m * one_plus_m;
  BiPolynomial out;
  for (const auto& [i, j, c] : terms(pb)) {
    BiPolynomial t = BiPolynomial::monomial(j, IntPolynomial::monomial(i, c));
    out += t * power(q, i);
  }
  return primitive_part(out);
}

std::optional<BiPolynomial> divide_exact(const BiPolynomial& a, const BiPolynomial& b) {
  try {
    return exact_div(a, b);
  } catch (const PolyError&) {
    return std::nullopt;
  }
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  try {
    return exact_div(a, b);
  } catch (const PolyError&) {
    return std::nullopt;
  }
}

}  // namespace chordal
