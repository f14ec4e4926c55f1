#include "doctest.h"

#include <random>

#include "chordal/maps.hpp"
#include "chordal/polynomial.hpp"

using namespace chordal;

namespace {

// Resultant as the determinant of the Sylvester matrix (fraction-free Bareiss).
Integer sylvester_resultant(const IntPolynomial& p, const IntPolynomial& q) {
  const int m = p.degree(), n = q.degree();
  const int size = m + n;
  std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[i][i + k] = p[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) a[n + i][i + k] = q[n - k];
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < size && a[r][k] == 0) ++r;
      if (r == size) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

IntPolynomial random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(c);
}

BiPolynomial bp(const char* s) { return parse_bipolynomial(s); }

}  // namespace

TEST_CASE("parser and printing") {
  IntPolynomial p = parse_polynomial("3z^2 - 2(z + 1) + 7");
  CHECK(p == IntPolynomial(std::vector<Integer>{5, -2, 3}));
  CHECK(to_string(p) == "3*z^2 - 2*z + 5");
  BiPolynomial q = bp("z w^2 - (z - 1)^2");
  CHECK(coeff(q, 1, 2) == 1);
  CHECK(coeff(q, 2, 0) == -1);
  CHECK(coeff(q, 1, 0) == 2);
  CHECK(from_terms(terms(q)) == q);
  CHECK_THROWS_AS(parse_polynomial("z +* 2"), PolyError);
}

TEST_CASE("resultant examples") {
  // res_u(u - z, u^2 - w) = z^2 - w, variables: u outer, (z, w) in the inner ring.
  // Here the inner ring is Z[z][w] written as BiPolynomial with z inner.
  TriPolynomial a(std::vector<BiPolynomial>{bp("-z"), bp("1")});
  TriPolynomial b(std::vector<BiPolynomial>{bp("-w"), bp("0"), bp("1")});
  CHECK(resultant(a, b) == bp("z^2 - w"));
  BiPolynomial p = bp("w^2 - z");
  CHECK(resultant(p, p) == IntPolynomial());
  CHECK_THROWS_AS(resultant(p, BiPolynomial()), PolyError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    IntPolynomial p = random_poly(rng, 1 + trial % 6);
    IntPolynomial q = random_poly(rng, 1 + (trial / 6) % 5);
    CHECK(resultant(p, q) == sylvester_resultant(p, q));
  }
}

TEST_CASE("resultant properties") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    IntPolynomial p = random_poly(rng, 1 + trial % 5);
    IntPolynomial q = random_poly(rng, 1 + trial % 4);
    IntPolynomial r = random_poly(rng, 1 + trial % 3);
    const int sign = (p.degree() * q.degree()) % 2 ? -1 : 1;
    CHECK(resultant(p, q) == sign * resultant(q, p));
    CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
  }
}

TEST_CASE("discriminants") {
  CHECK(discriminant(bp("w^2 - z")) == parse_polynomial("4z"));
  CHECK(discriminant(parse_polynomial("z^2 - 5z + 6")) == 1);
  CHECK(discriminant(parse_polynomial("z^3 + 2z + 1")) == -4 * 8 - 27);
  CHECK_THROWS_AS(discriminant(bp("w - z")), PolyError);

  IntPolynomial db = discriminant(transcribed_PB());
  auto qb = divide_exact(db, transcribed_disc_B_factor());
  REQUIRE(qb);
  CHECK(qb->coeffs().size() == static_cast<std::size_t>(qb->degree() + 1));
  CHECK(terms(BiPolynomial(*qb)).size() == 1);  // a single monomial c z^k

  IntPolynomial dm = discriminant(transcribed_PM());
  auto qm = divide_exact(dm, transcribed_disc_M_factor());
  REQUIRE(qm);
  CHECK(terms(BiPolynomial(*qm)).size() == 1);
}

TEST_CASE("integer polynomial helpers") {
  IntPolynomial p = parse_polynomial("(z - 1)^2 (z + 2)");
  CHECK(squarefree_part(p) == parse_polynomial("(z - 1)(z + 2)"));
  CHECK(gcd(p, parse_polynomial("z^2 - 1")) == parse_polynomial("z - 1"));
  CHECK(content(parse_polynomial("6z^2 - 4")) == 2);
  CHECK(sign_at(parse_polynomial("z^2 - 2"), Rational(141, 100)) < 0);
  CHECK(sign_at(parse_polynomial("z^2 - 2"), Rational(142, 100)) > 0);
  CHECK(evaluate(parse_polynomial("z^3 - z"), Rational(1, 2)) == Rational(-3, 8));
}

TEST_CASE("annihilators") {
  const std::size_t N = 64;
  TruncatedSeries b = two_connected_maps_series(N);
  TruncatedSeries m = all_maps_series(N);
  CHECK(annihilator_check(transcribed_PB(), b).ok);
  CHECK(annihilator_check(transcribed_PM(), m).ok);
  auto bad = annihilator_check(bp("w - z^2"), TruncatedSeries::variable(4));
  CHECK_FALSE(bad.ok);
  CHECK(bad.first_failing_order == 1u);

  BiPolynomial derived = derive_M_annihilator(transcribed_PB());
  CHECK(derived.degree() >= 12);
  CHECK(annihilator_check(derived, m).ok);
  CHECK(divide_exact(derived, transcribed_PM()));

  BiPolynomial eliminated = eliminate_B_annihilator();
  CHECK(annihilator_check(eliminated, b).ok);
  CHECK(divide_exact(eliminated, transcribed_PB()));
}
