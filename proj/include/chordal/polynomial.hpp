#pragma once

// Dense polynomials over Z and over polynomial rings built on Z.
//
// Poly<R> is univariate over a coefficient ring R; nesting gives
// multivariate polynomials. BiPolynomial = Poly<IntPolynomial> is read as a
// polynomial in w whose coefficients are polynomials in z.

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "chordal/numeric_types.hpp"
#include "chordal/series.hpp"

namespace chordal {

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  Poly(const R& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(R(c)) {}  // NOLINT
  explicit Poly(std::vector<R> coeffs);

  static Poly monomial(unsigned degree, const R& c);
  static Poly x() { return monomial(1, R(1)); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const R& lc() const;
  const R& operator[](std::size_t k) const;
  const std::vector<R>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const;
  /// Horner evaluation in the coefficient ring.
  R operator()(const R& x) const;

 private:
  static Poly multiply(const Poly& a, const Poly& b);
  void trim();
  std::vector<R> c_;
};

using IntPolynomial = Poly<Integer>;
using BiPolynomial = Poly<IntPolynomial>;
using TriPolynomial = Poly<BiPolynomial>;

bool is_zero(const Integer& a);
template <class R>
bool is_zero(const Poly<R>& a) { return a.is_zero(); }

/// a / b, throwing PolyError unless the division is exact.
Integer exact_div(const Integer& a, const Integer& b);
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b);
/// Coefficient-wise exact division by a ring element.
template <class R>
Poly<R> exact_div_scalar(const Poly<R>& a, const R& b);

template <class R>
R power(const R& a, unsigned k);

/// lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b);

/// Resultant by the subresultant PRS. Both arguments must be nonzero.
template <class R>
R resultant(const Poly<R>& a, const Poly<R>& b);

/// (-1)^(d(d-1)/2) res(p, p') / lc(p); requires degree >= 2.
template <class R>
R discriminant(const Poly<R>& p);

// Integer polynomials.
Integer content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial squarefree_part(const IntPolynomial& p);
/// Exact sign of p(x).
int sign_at(const IntPolynomial& p, const Rational& x);
Rational evaluate(const IntPolynomial& p, const Rational& x);
HPReal evaluate(const IntPolynomial& p, const HPReal& x);
std::string to_string(const IntPolynomial& p, char var = 'z');

// Bivariate polynomials in (z, w); w is the outer variable.
Integer coeff(const BiPolynomial& p, unsigned z_exp, unsigned w_exp);
int z_degree(const BiPolynomial& p);
/// Lists nonzero terms as (z exponent, w exponent, coefficient).
std::vector<std::tuple<unsigned, unsigned, Integer>> terms(const BiPolynomial& p);
BiPolynomial from_terms(const std::vector<std::tuple<unsigned, unsigned, Integer>>& t);
/// Gcd of all integer coefficients, with the sign of the leading term.
Integer content(const BiPolynomial& p);
BiPolynomial primitive_part(const BiPolynomial& p);
/// p(z, q(z)) for a series q.
TruncatedSeries substitute_series(const BiPolynomial& p, const TruncatedSeries& q);
std::string to_string(const BiPolynomial& p, char z = 'z', char w = 'w');

/// Parses an integer polynomial expression in the variables `z` and `w`
/// (digits, + - * ^, parentheses, implicit multiplication).
BiPolynomial parse_bipolynomial(const std::string& text, char z = 'z', char w = 'w');
IntPolynomial parse_polynomial(const std::string& text, char var = 'z');

struct AnnihilatorResult {
  bool ok;
  /// First order at which p(z, s(z)) has a nonzero coefficient.
  std::optional<std::size_t> first_failing_order;
};

/// Tests p(z, s(z)) = 0 to the order of s.
AnnihilatorResult annihilator_check(const BiPolynomial& p, const TruncatedSeries& s);

// Transcribed data for the map annihilators and their discriminant factors.
BiPolynomial transcribed_PB();   // in (z, B)
BiPolynomial transcribed_PM();   // in (z, M)
IntPolynomial transcribed_disc_B_factor();
IntPolynomial transcribed_disc_M_factor();

/// Eliminates S between S = z^3 D^6 (1+S)^3 and D (1 - z^2 D^4 (1+S)) = 1 and
/// substitutes D = B/z, clearing the powers of z. Result is in (z, B).
BiPolynomial eliminate_B_annihilator();

/// Substitutes z -> z (1+M)^2, B -> M into P_B and normalizes: content
/// removed, positive leading coefficient.
BiPolynomial derive_M_annihilator(const BiPolynomial& pb);

/// q such that a = q * b exactly, or nullopt.
std::optional<BiPolynomial> divide_exact(const BiPolynomial& a, const BiPolynomial& b);
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

extern template class Poly<Integer>;
extern template class Poly<IntPolynomial>;
extern template class Poly<BiPolynomial>;

}  // namespace chordal
