#pragma once

// Singular analysis: characteristic systems, square-root branch expansions
// and the constants of the asymptotic estimates for graphs and maps.
//
// Every routine takes the working precision in bits and returns values
// computed at that precision. Residual tolerances scale with the precision.

#include <optional>
#include <string>
#include <vector>

#include "chordal/numeric_types.hpp"
#include "chordal/polynomial.hpp"
#include "chordal/series.hpp"

namespace chordal {

class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Solution of F = Phi(x,S,F), S = Psi(x,S,F), det(I - J) = 0 with
/// Phi = exp(x(1+F)^2 (1 + S/2)) - 1 and Psi = x(1+F)^3 (1+S)^3.
struct CharacteristicSolution {
  HPReal rho_b, F0, S0;
  HPReal E0() const { return 1 + F0; }
  HPReal residual;
  unsigned iterations = 0;
};

struct CharacteristicSeed {
  double x, S, F;
};

/// Seeds default to a coefficient-ratio estimate from the exact series.
CharacteristicSolution solve_characteristic_system(unsigned bits = kDefaultPrecisionBits,
                                                   std::optional<CharacteristicSeed> seed = std::nullopt);

/// Theta(x,F) = Phi(x, S(x,F), F) with S(x,F) the small root of the S equation.
struct ThetaDerivatives {
  HPReal theta, theta_x, theta_F, theta_FF;
};
ThetaDerivatives theta_derivatives_fd(const HPReal& x, const HPReal& F, unsigned bits = kDefaultPrecisionBits);
ThetaDerivatives theta_derivatives_implicit(const HPReal& x, const HPReal& F,
                                            unsigned bits = kDefaultPrecisionBits);

struct NetworkAmplitude {
  HPReal E1;
  ThetaDerivatives fd, implicit;
  /// max relative difference between the two routes over theta_x, theta_F, theta_FF
  HPReal route_difference;
};

/// E1 = sqrt(2 rho_b Theta_x / Theta_FF). Throws unless Theta_F = 1 at the
/// point (the branch condition for F = Theta(x,F)) and the routes agree to 6 digits.
NetworkAmplitude network_amplitude(const CharacteristicSolution& cs, unsigned bits = kDefaultPrecisionBits);

/// a_0 + a_1 X + a_2 X^2 + ... with X = sqrt(1 - z/rho).
struct BranchExpansion {
  HPReal rho;
  std::vector<HPReal> a;
  HPReal operator()(const HPReal& z) const;
};

struct TwoConnectedExpansion {
  BranchExpansion E, Sigma, B;
  /// B = B0 - B2 X^2 + B3 X^3 + O(X^4)
  HPReal B0, B2, B3;
  HPReal B1_residual;  // the X^1 coefficient, which must vanish
  HPReal b;            // 3 B3 / (4 sqrt(pi))
};

TwoConnectedExpansion two_connected_expansion(const CharacteristicSolution& cs,
                                              unsigned bits = kDefaultPrecisionBits, unsigned terms = 6);

/// Values and derivatives E^(k)(x0), Sigma^(k)(x0), B^(k)(x0) for k <= order,
/// where Sigma = S(x E^3) and B is the 2-connected series at y = 1.
struct LocalDerivatives {
  HPReal x0;
  std::vector<HPReal> E, Sigma, B;
};
LocalDerivatives implicit_derivatives_E(const HPReal& x0, unsigned order = 3,
                                        unsigned bits = kDefaultPrecisionBits);

struct ConnectedConstants {
  HPReal tau, E_tau, rho, gamma;
  HPReal B_tau, Bp_tau, Bpp_tau, Bppp_tau;
  HPReal kappa;               // C*(x) = tau - kappa X + O(X^2)
  HPReal C0, C2, C3;          // C = C0 - C2 X^2 + C3 X^3 + ..., C3 = 2 kappa / 3
  HPReal C3_printed_formula;  // (3/2) sqrt(2 rho e^B' / (tau B''' - tau B''^2 + 2 B''))
  HPReal G0, G2, G3;
  HPReal c, g;                // 3 C3 / (4 sqrt(pi)), 3 G3 / (4 sqrt(pi))
};

ConnectedConstants connected_constants(const CharacteristicSolution& cs, const TwoConnectedExpansion& ex,
                                       unsigned bits = kDefaultPrecisionBits);

/// Square-root branch y = y0 + a1 X + O(X^2) of p(z, y) = 0 at z = sigma.
struct AlgebraicBranch {
  HPReal sigma, y0;
  HPReal a1;      // signed; negative when the branch increases towards sigma
  HPReal abs_a1;  // sqrt(2 sigma |p_z| / |p_yy|)
  HPReal sigma_from_newton;  // z-coordinate of the refined double point
};

/// `counting` is the Taylor series of the branch at 0 (positive radius);
/// the branch is followed from z = sigma/2 towards sigma.
AlgebraicBranch algebraic_branch_expansion(const BiPolynomial& p, const HPReal& sigma,
                                           const TruncatedSeries& counting, unsigned bits = kDefaultPrecisionBits);

/// Smallest positive real root of `p`, refined exactly to 2^-(bits+8).
HPReal positive_root(const IntPolynomial& p, std::size_t index, unsigned bits = kDefaultPrecisionBits);

struct ConstantEntry {
  std::string name;
  HPReal value;
  std::string formula;
};

struct ConstantsReport {
  int theorem = 0;
  unsigned precision_bits = 0;
  std::vector<ConstantEntry> entries;
  const ConstantEntry* find(const std::string& name) const;
  const HPReal& at(const std::string& name) const;
};

ConstantsReport theorem1_constants(unsigned bits = kDefaultPrecisionBits);
ConstantsReport theorem2_constants(unsigned bits = kDefaultPrecisionBits);

}  // namespace chordal
