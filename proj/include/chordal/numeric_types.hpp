#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

namespace chordal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Variable-precision binary float. The working precision of new values is
/// the process-wide default set by PrecisionScope.
using HPReal = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

/// Sets the working precision for HPReal on construction and
/// restores the previous value on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits)
      : saved_(HPReal::default_precision()), bits_(bits) {
    HPReal::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { HPReal::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned bits() const { return bits_; }

 private:
  unsigned saved_;
  unsigned bits_;
};

/// n/d in lowest terms (gmpxx does not canonicalize on construction).
inline Rational frac(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline HPReal to_hp(const Integer& z) {
  HPReal r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

inline HPReal to_hp(const Rational& q) {
  HPReal r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

/// Exact conversion of a finite HPReal to a Rational.
inline Rational to_rational(const HPReal& x) {
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x.backend().data());
  Rational r(mant);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

/// Decimal rendering with `digits` significant digits (scientific if needed).
inline std::string to_string(const HPReal& x, int digits = 20) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

inline HPReal hp_pi() {
  HPReal r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace chordal
