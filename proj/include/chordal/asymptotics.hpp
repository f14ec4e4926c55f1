#pragma once

// Transfer of singular expansions to coefficient asymptotics, empirical
// fits from exact coefficients, and their reconciliation with printed values.

#include <optional>
#include <string>
#include <vector>

#include "chordal/numeric_types.hpp"
#include "chordal/recurrence.hpp"

namespace chordal {

class AsymptoticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f(z) ~ amplitude (1 - z/rho)^(-alpha), so that
/// [z^n] f ~ amplitude / Gamma(alpha) n^(alpha-1) rho^(-n).
struct AsymptoticLaw {
  HPReal amplitude;
  Rational alpha;
  HPReal rho;
  Scaling scaling = Scaling::ordinary;

  /// amplitude / Gamma(alpha)
  HPReal leading_constant() const;
};

/// Leading-order estimate of the n-th coefficient; times n! for egf scaling.
HPReal transfer_predict(const AsymptoticLaw& law, unsigned n);

struct FitRow {
  unsigned n;
  HPReal rho, exponent, constant;
};

/// a_n ~ constant * n^exponent * rho^(-n), where a_n is the coefficient
/// (count / n! for egf input).
struct FitResult {
  HPReal rho, exponent, constant;
  /// exponent rounded to the nearest half-integer; used for `constant`
  Rational structural_exponent;
  std::vector<FitRow> table;
  bool stable = false;
  unsigned terms = 0;
  unsigned depth = 0;  // deepest Richardson depth selected
};

inline constexpr unsigned kMinFitTerms = 50;

/// `counts[n]` for n = 0..N (counts as integers; divided by n! when scaling
/// is egf). Uses the trailing run of positive terms, which must have at
/// least kMinFitTerms entries.
FitResult empirical_fit(const std::vector<Integer>& counts, Scaling scaling, unsigned depth = 4,
                        unsigned bits = 256);

/// Symmetric relative difference |a - b| / max(|a|, |b|).
HPReal relative_difference(const HPReal& a, const HPReal& b);

struct Reconciliation {
  std::string name;
  HPReal analytic;
  HPReal empirical;
  std::optional<HPReal> printed;
  HPReal analytic_vs_empirical;
  std::optional<HPReal> analytic_vs_printed;
  /// printed / analytic
  std::optional<HPReal> factor;
  /// Recognised closed form of the factor ("1", "2", "3*sqrt(pi)", ...), empty if none.
  std::string factor_form;
  bool discrepancy = false;  // printed and analytic differ beyond 1e-3
};

Reconciliation reconcile(const std::string& name, const AsymptoticLaw& law, const FitResult& fit,
                         std::optional<HPReal> printed = std::nullopt);

/// Identifies x as q, q*sqrt(pi) or q/sqrt(pi) with q = a/b, a, b <= 12, to
/// relative tolerance `tol`. Returns an empty string if none fits.
std::string recognise_factor(const HPReal& x, double tol = 2e-4);

/// Leading constants of one theorem: analytic (transfer), empirical (from
/// `order` exact coefficients) and printed.
struct TheoremReconciliation {
  int theorem = 0;
  unsigned order = 0;
  std::vector<Reconciliation> constants;
  std::vector<Reconciliation> growth;  // 1/rho against the fitted ratio limit
};

TheoremReconciliation reconcile_theorem(int theorem, std::size_t order = 256, unsigned bits = 256);

}  // namespace chordal
