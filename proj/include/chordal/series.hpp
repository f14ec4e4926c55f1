#pragma once

// Truncated formal power series with exact rational coefficients.
//
// BasicSeries<C> holds the coefficients c_0..c_N of a series in x truncated
// at order N (inclusive). Two coefficient rings are used:
//   Rational -> TruncatedSeries, univariate series in x (or z)
//   YPoly    -> BivariateSeries, series in x whose coefficients are
//               polynomials in a second variable y
// Whether a series is read as an OGF or an EGF is a convention of the caller;
// the arithmetic is the same.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordal/numeric_types.hpp"

namespace chordal {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense polynomial in y with rational coefficients, ascending degree,
/// trimmed so the top stored coefficient is nonzero.
class YPoly {
 public:
  YPoly() = default;
  YPoly(const Rational& c);  // NOLINT: constants convert implicitly
  YPoly(long c) : YPoly(Rational(c)) {}  // NOLINT
  explicit YPoly(std::vector<Rational> coeffs);

  static YPoly y() { return monomial(1, 1); }
  static YPoly monomial(std::size_t degree, const Rational& c);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& operator[](std::size_t k) const;
  std::span<const Rational> coeffs() const { return c_; }

  YPoly& operator+=(const YPoly& o);
  YPoly& operator-=(const YPoly& o);
  YPoly& operator*=(const YPoly& o);
  YPoly& operator*=(const Rational& k);
  YPoly operator-() const;

  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  friend YPoly operator*(YPoly a, const Rational& k) { return a *= k; }
  friend YPoly operator*(const Rational& k, YPoly a) { return a *= k; }
  friend bool operator==(const YPoly& a, const YPoly& b) { return a.c_ == b.c_; }

  Rational operator()(const Rational& y) const;

  YPoly partial_y() const;
  /// Antiderivative with zero constant term.
  YPoly integrate_y() const;
  /// Exact division by y; throws if the constant term is nonzero.
  YPoly divide_by_y() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

template <class C>
class BasicSeries {
 public:
  using coefficient_type = C;

  BasicSeries() : c_(1) {}
  explicit BasicSeries(std::size_t order) : c_(order + 1) {}
  explicit BasicSeries(std::vector<C> coeffs);

  static BasicSeries variable(std::size_t order);
  static BasicSeries constant(const C& value, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t n) const { return c_.at(n); }
  C& operator[](std::size_t n) { return c_.at(n); }
  std::span<const C> coeffs() const { return c_; }

  /// Index of the first nonzero coefficient, or order()+1 for zero.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > order(); }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<C> c_;
};

using TruncatedSeries = BasicSeries<Rational>;
using BivariateSeries = BasicSeries<YPoly>;

template <class C>
BasicSeries<C> operator+(const BasicSeries<C>& a, const BasicSeries<C>& b);
template <class C>
BasicSeries<C> operator-(const BasicSeries<C>& a, const BasicSeries<C>& b);
template <class C>
BasicSeries<C> operator-(const BasicSeries<C>& a);
template <class C>
BasicSeries<C> operator*(const BasicSeries<C>& a, const Rational& k);
template <class C>
BasicSeries<C> operator*(const Rational& k, const BasicSeries<C>& a) { return a * k; }

/// Cauchy product truncated at the common order. Orders must match.
template <class C>
BasicSeries<C> mul(const BasicSeries<C>& a, const BasicSeries<C>& b);
template <class C>
BasicSeries<C> operator*(const BasicSeries<C>& a, const BasicSeries<C>& b) { return mul(a, b); }

/// Multiply every coefficient by the same ring element (e.g. y).
template <class C>
BasicSeries<C> scale(const BasicSeries<C>& a, const C& k);

template <class C>
BasicSeries<C> pow(const BasicSeries<C>& a, unsigned k);

/// outer(inner(x)) truncated at inner's order. inner must have zero
/// constant term. Outer coefficients may be Rational (for either kind of
/// inner) or YPoly (bivariate inner only).
template <class Outer, class C>
BasicSeries<C> compose(const BasicSeries<Outer>& outer, const BasicSeries<C>& inner);

/// exp(a), a(0) must be zero.
template <class C>
BasicSeries<C> exp(const BasicSeries<C>& a);

/// 1/a; a(0) must be a unit (nonzero rational, or nonzero constant in y).
template <class C>
BasicSeries<C> reciprocal(const BasicSeries<C>& a);

/// Termwise d/dx. The result has order N-1 (order 0 input gives zero of order 0).
template <class C>
BasicSeries<C> derivative(const BasicSeries<C>& a);

/// Termwise antiderivative with zero constant term. The result has order N+1.
template <class C>
BasicSeries<C> integrate(const BasicSeries<C>& a);

/// x^m * a, keeping the order.
template <class C>
BasicSeries<C> shift(const BasicSeries<C>& a, std::size_t m);

/// a / x^m; the first m coefficients must vanish. Order drops by m.
template <class C>
BasicSeries<C> divide_by_x_power(const BasicSeries<C>& a, std::size_t m);

template <class C>
BasicSeries<C> truncate(const BasicSeries<C>& a, std::size_t order);

/// Solves X = phi(X) by repeated substitution: N+1 full passes starting from
/// `seed`. phi must gain one order per pass (the coefficient of x^n of
/// phi(X) may only read coefficients of X below n, apart from the forced
/// constant term carried by the seed). Throws if a coefficient that should
/// have stabilised changes, or if the final result is not a fixed point.
template <class C>
BasicSeries<C> solve_fixed_point(const std::function<BasicSeries<C>(const BasicSeries<C>&)>& phi,
                                 std::size_t order, const C& seed = C(0));

// Bivariate-only operations, acting on the y-polynomial coefficients.
BivariateSeries partial_y(const BivariateSeries& a);
BivariateSeries integrate_y(const BivariateSeries& a);
BivariateSeries divide_by_y(const BivariateSeries& a);
TruncatedSeries at_y(const BivariateSeries& a, const Rational& y);
BivariateSeries to_bivariate(const TruncatedSeries& a);

/// n! * a_n for n = 0..N. Throws SeriesError if some value is not an integer.
std::vector<Integer> egf_counts(const TruncatedSeries& a);
/// Coefficients a_n as integers. Throws SeriesError if some are not integral.
std::vector<Integer> ogf_counts(const TruncatedSeries& a);

HPReal evaluate(const TruncatedSeries& a, const HPReal& x);

extern template class BasicSeries<Rational>;
extern template class BasicSeries<YPoly>;

}  // namespace chordal
