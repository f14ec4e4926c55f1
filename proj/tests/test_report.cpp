#include "doctest.h"

#include "chordal/verify.hpp"

using namespace chordal;

TEST_CASE("formatting") {
  PrecisionScope scope(256);
  CHECK(format_real(HPReal(1) / 8, 5) == "1.2500e-01");
  CountTable t{"all", {{1, Integer(1)}, {2, Integer(2)}}};
  CHECK(to_csv(t) == "n,all\n1,1\n2,2\n");
  Json j = to_json(t);
  CHECK(j["rows"][1]["count"] == "2");
  CountTable shorter{"connected", {{1, Integer(1)}}};
  CHECK_THROWS_AS(to_csv(std::vector<CountTable>{t, shorter}), std::invalid_argument);

  TruncatedSeries s(std::vector<Rational>{Rational(0), Rational(1), Rational(1, 2)});
  CHECK(series_csv(s) == "n,coefficient\n0,0\n1,1\n2,1/2\n");
  CHECK(series_json("x", s)["coefficients"][2] == "1/2");
}

TEST_CASE("census tables mirror count tables") {
  std::vector<oracle::Census> rows{{1, 1, 1, 0, 0, 0}, {2, 2, 1, 1, 0, 0}};
  auto t = census_tables(rows);
  REQUIRE(t.size() == 5);
  CHECK(t[2].family == to_string(GraphFamily::two_connected));
  CHECK(t[2].rows[1].second == 1);
  CHECK(to_csv(t) == "n,all,connected,2conn,3conn,triangulations\n1,1,1,0,0,0\n2,2,1,1,0,0\n");
}

TEST_CASE("failure descriptions name module, invariant and order") {
  CheckResult c;
  c.module = "labelled-graphs";
  c.invariant = "dissymmetry";
  c.first_failing_order = 12;
  c.detail = "mismatch";
  CHECK(describe(c) == "FAIL labelled-graphs: dissymmetry (first failing order 12): mismatch");
  VerifyReport r{{c}};
  CHECK_FALSE(r.ok());
  CHECK(r.first_failure() == &r.checks[0]);
  Json j = to_json(r);
  CHECK(j["checks"][0]["first_failing_order"] == 12);
  CHECK(j["ok"] == false);
}

TEST_CASE("verify battery without fits") {
  VerifyOptions opt;
  opt.include_fits = false;
  opt.order = 32;
  VerifyReport r = run_verify(opt);
  for (const auto& c : r.checks) {
    CAPTURE(describe(c));
    CHECK(c.ok);
  }
  CHECK(r.checks.size() >= 18);
}
