#pragma once

// Coefficient-by-coefficient solver for systems of series equations.
//
// A RecurrenceSystem is a small expression graph over series: known series,
// unknowns, sums, products, shifts by x^m, exp and reciprocal. Unknowns are
// bound to right-hand sides with define(). solve(N) then produces the
// coefficients of every node in increasing order of n, each coefficient
// computed exactly once. This is equivalent to iterating X = phi(X) to a
// fixed point, but costs one online product per node instead of N+1 passes.
//
// A system is well-posed when, at every n, the coefficient n of each
// unknown can be computed from coefficients already known. Every cycle in
// the graph must therefore pass through a shift or through a product with a
// factor of positive valuation. Violations are reported as SeriesError.
//
// With Scaling::exponential, coefficients are stored internally as
// n! * a_n and products use binomial convolution; for labelled (EGF)
// systems this keeps the arithmetic on integers. Inputs and outputs are
// always plain coefficients.

#include <cstddef>
#include <string>
#include <vector>

#include "chordal/series.hpp"

namespace chordal {

enum class Scaling { ordinary, exponential };

template <class C>
class RecurrenceSystem {
 public:
  using Node = std::size_t;

  explicit RecurrenceSystem(Scaling scaling = Scaling::ordinary) : scaling_(scaling) {}

  Node constant(const BasicSeries<C>& s);
  Node constant(const C& c);
  Node unknown(std::string name, std::size_t valuation);
  void define(Node unknown, Node rhs);

  Node add(Node a, Node b);
  Node sub(Node a, Node b);
  Node scale(Node a, const C& k);
  Node mul(Node a, Node b);
  Node power(Node a, unsigned k);
  /// x^m * a.
  Node shift(Node a, std::size_t m);
  Node exp(Node a);
  Node reciprocal(Node a);

  /// Computes all coefficients up to `order`. May be called once.
  void solve(std::size_t order);

  BasicSeries<C> series(Node n) const;
  std::size_t size() const { return nodes_.size(); }

 private:
  enum class Kind { constant, unknown, add, sub, scale, mul, shift, exp, reciprocal };

  struct Entry {
    Kind kind;
    Node a = 0, b = 0;
    std::size_t m = 0;        // shift amount
    std::size_t val = 0;      // valuation lower bound
    C k{};                    // scale factor, or 1/a_0 for reciprocal
    BasicSeries<C> input;     // constant input (plain)
    std::string name;
    bool defined = false;
    std::vector<C> coeff;     // stored (possibly scaled) coefficients
    long busy = -1;           // n currently being computed
  };

  Node push(Entry e);
  const C& get(Node id, std::size_t n);
  C compute(Node id, std::size_t n);
  const Rational& binom(std::size_t n, std::size_t k) const { return binom_[n][k]; }

  Scaling scaling_;
  std::vector<Entry> nodes_;
  std::vector<std::vector<Rational>> binom_;
  std::vector<Rational> factorial_;
  std::size_t order_ = 0;
  bool solved_ = false;
};

extern template class RecurrenceSystem<Rational>;
extern template class RecurrenceSystem<YPoly>;

}  // namespace chordal
