#include "doctest.h"

#include "chordal/series.hpp"

using namespace chordal;

namespace {

TruncatedSeries from(std::vector<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return TruncatedSeries(std::move(c));
}

Integer binom(unsigned n, unsigned k) { return binomial(n, k); }

// Independent ternary-tree numbers: (1/(2n+1)) binom(3n, n).
Rational ternary(unsigned n) { return frac(binom(3 * n, n), 2 * n + 1); }

}  // namespace

TEST_CASE("mul") {
  CHECK(mul(from({1, 1, 0}), from({1, 1, 0})) == from({1, 2, 1}));
  TruncatedSeries s = from({0, 1, 3, 12, 0, 0});
  TruncatedSeries sq = s * s;
  // (z + 3z^2 + 12z^3)^2 = z^2 + 6z^3 + 33z^4 + 72z^5 + ...
  CHECK(sq == from({0, 0, 1, 6, 33, 72}));
  CHECK((s * TruncatedSeries(5)).is_zero());
  CHECK_THROWS_AS(mul(from({1, 1}), from({1, 1, 1})), SeriesError);
}

TEST_CASE("compose") {
  TruncatedSeries geo = from({1, 1, 1, 1});
  CHECK(compose(geo, TruncatedSeries::variable(3)) == from({1, 1, 1, 1}));
  CHECK(compose(from({0, 0, 1, 0, 0}), from({0, 1, 1, 0, 0})) == from({0, 0, 1, 2, 1}));

  TruncatedSeries s(6);
  for (unsigned n = 1; n <= 6; ++n) s[n] = ternary(n);
  TruncatedSeries z3 = from({0, 0, 0, 1, 0, 0, 0});
  CHECK(compose(s, z3) == from({0, 0, 0, 1, 0, 0, 3}));

  CHECK_THROWS_AS(compose(geo, from({1, 1, 0, 0})), SeriesError);
}

TEST_CASE("exp") {
  CHECK(exp(TruncatedSeries(4)) == TruncatedSeries::constant(1, 4));
  TruncatedSeries e = exp(TruncatedSeries::variable(4));
  CHECK(e == TruncatedSeries(std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
  CHECK_THROWS_AS(exp(from({1, 1})), SeriesError);

  // exp via composition with the exponential series agrees with the recurrence.
  TruncatedSeries a = from({0, 2, -1, 3, 5, 0, 7, 1});
  TruncatedSeries expser(7);
  for (unsigned n = 0; n <= 7; ++n) expser[n] = Rational(1) / Rational(factorial(n));
  CHECK(compose(expser, a) == exp(a));
}

TEST_CASE("reciprocal") {
  TruncatedSeries one_minus_z = from({1, -1, 0, 0, 0});
  CHECK(reciprocal(one_minus_z) == from({1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(reciprocal(from({0, 1})), SeriesError);
  TruncatedSeries a = from({3, 1, -4, 1, 5});
  CHECK(a * reciprocal(a) == TruncatedSeries::constant(1, 4));
}

TEST_CASE("derivative and integrate") {
  CHECK(derivative(from({0, 0, 1})) == from({0, 2}));
  TruncatedSeries a = from({7, 1, 2, 3, 4});
  TruncatedSeries back = integrate(derivative(a));
  CHECK(back == from({0, 1, 2, 3, 4}));
}

TEST_CASE("fixed point") {
  const std::size_t N = 12;
  auto phi = [&](const TruncatedSeries& x) {
    TruncatedSeries one_plus = x + TruncatedSeries::constant(1, N);
    return TruncatedSeries::variable(N) * pow(one_plus, 3);
  };
  TruncatedSeries s = solve_fixed_point<Rational>(phi, N);
  CHECK(s[0] == 0);
  for (unsigned n = 1; n <= N; ++n) CHECK(s[n] == ternary(n));
  CHECK(phi(s) == s);

  auto ident = [&](const TruncatedSeries&) { return TruncatedSeries::variable(N); };
  CHECK(solve_fixed_point<Rational>(ident, N) == TruncatedSeries::variable(N));

  // X = X + z never stabilises.
  auto bad = [&](const TruncatedSeries& x) { return x + TruncatedSeries::variable(N); };
  CHECK_THROWS_AS(solve_fixed_point<Rational>(bad, N), SeriesError);
}

TEST_CASE("fixed point for the map dissection equation") {
  const std::size_t N = 8;
  TruncatedSeries S(N);
  for (unsigned n = 1; n <= N; ++n) S[n] = ternary(n);
  auto phi = [&](const TruncatedSeries& d) {
    TruncatedSeries z = TruncatedSeries::variable(N);
    TruncatedSeries d2 = d * d, d4 = d2 * d2;
    TruncatedSeries inner = pow(z, 3) * d4 * d2;
    TruncatedSeries one = TruncatedSeries::constant(1, N);
    return reciprocal(one - z * z * d4 * (one + compose(S, inner)));
  };
  TruncatedSeries D = solve_fixed_point<Rational>(phi, N, Rational(1));
  CHECK(D[0] == 1);
  CHECK(D[1] == 0);
  CHECK(D[2] == 1);
  CHECK(D[3] == 0);
  CHECK(D[4] == 5);
  CHECK(D[5] == 1);
  CHECK(D[6] == 35);
}

TEST_CASE("ypoly") {
  YPoly y = YPoly::y();
  YPoly p = y * y * Rational(1, 2) + y * Rational(5, 2);
  CHECK(p.degree() == 2);
  CHECK(p(Rational(1)) == 3);
  CHECK(p.partial_y() == y + YPoly(Rational(5, 2)));
  CHECK(p.partial_y().integrate_y() == p);
  CHECK(p.divide_by_y() == y * Rational(1, 2) + YPoly(Rational(5, 2)));
  CHECK_THROWS_AS((p + YPoly(1)).divide_by_y(), SeriesError);
  CHECK((p - p).is_zero());
}

TEST_CASE("bivariate helpers") {
  BivariateSeries a(3);
  a[2] = YPoly::y() * Rational(1, 2);
  BivariateSeries d = partial_y(a);
  CHECK(d[2] == YPoly(Rational(1, 2)));
  CHECK(at_y(a, Rational(1))[2] == Rational(1, 2));
  BivariateSeries e(2);
  e[0] = YPoly::y();
  e[1] = YPoly::monomial(3, 1);
  CHECK(divide_by_y(e)[1] == YPoly::monomial(2, 1));
  e[2] = YPoly(1);
  CHECK_THROWS_AS(divide_by_y(e), SeriesError);
}

TEST_CASE("egf counts") {
  TruncatedSeries e = exp(TruncatedSeries::variable(6));
  auto c = egf_counts(e);
  for (auto& v : c) CHECK(v == 1);
  TruncatedSeries half(2);
  half[1] = Rational(1, 3);
  CHECK_THROWS_AS(egf_counts(half), SeriesError);
}
