#pragma once

// Real root isolation (Sturm sequences, exact) and simultaneous complex root
// approximation (Aberth-Ehrlich, multiprecision) for integer polynomials.

#include <optional>
#include <string>
#include <vector>

#include "chordal/numeric_types.hpp"
#include "chordal/polynomial.hpp"

namespace chordal {

class RootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exactly one root of the squarefree part lies in [lo, hi]; p(lo), p(hi)
/// have opposite signs unless lo == hi, in which case lo is the root.
struct IsolatingInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  HPReal midpoint() const { return to_hp(Rational((lo + hi) / 2)); }
};

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);
/// Number of distinct real roots in (a, b].
int count_real_roots(const std::vector<IntPolynomial>& sturm, const Rational& a, const Rational& b);

/// Isolating intervals for all distinct real roots, in increasing order.
std::vector<IsolatingInterval> isolate_real_roots(const IntPolynomial& p);
/// Bisects until the width is at most `width`.
IsolatingInterval refine(const IntPolynomial& p, IsolatingInterval iv, const Rational& width);

struct HPComplex {
  HPReal re, im;
  HPReal abs() const;
};

struct ComplexRoot {
  HPComplex z;
  /// Radius of a disc around z that contains a root; disjoint discs
  /// contain exactly one root each.
  HPReal radius;
};

struct RootSet {
  std::vector<ComplexRoot> roots;  // of the squarefree part
  unsigned precision_bits = 0;
  unsigned iterations = 0;
  bool discs_disjoint = false;
};

/// All complex roots of the squarefree part of p.
RootSet all_roots(const IntPolynomial& p, unsigned precision_bits = 256, unsigned max_iterations = 500);

struct DominanceCheck {
  bool unique_on_circle = false;  // no other root with the same modulus
  bool strictly_minimal = false;  // no other root with smaller or equal modulus
  std::size_t index = 0;          // index of the target root in the RootSet
  HPReal modulus;
  HPReal gap;    // min over other roots of | |psi| - |target| |
  HPReal bound;  // error bound the gap is compared against (already x10)
};

/// Locates the root closest to `target` and compares the other moduli with it.
/// The gap must exceed 10 times the sum of the inclusion radii.
DominanceCheck check_modulus_dominance(const RootSet& roots, const HPReal& target);

}  // namespace chordal
