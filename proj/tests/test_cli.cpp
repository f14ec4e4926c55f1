#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

#include "chordal/reference_tables.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + CHORDAL_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::string find_value(const nlohmann::json& report, const std::string& name) {
  for (const auto& e : report["constants"])
    if (e["name"] == name) return e["value"];
  return "";
}

}  // namespace

TEST_CASE("count reproduces the graph table") {
  Run r = run("count --family all --n-max 20 --format csv");
  CHECK(r.code == 0);
  std::string expected = "n,all\n";
  for (const auto& row : chordal::reference::graph_table)
    expected += std::to_string(row.n) + "," + row.g + "\n";
  CHECK(r.out == expected);

  Run j = run("count --family 2conn-maps --n-max 20 --json");
  CHECK(j.code == 0);
  auto rows = parse(j)["rows"];
  REQUIRE(rows.size() == 20);
  CHECK(rows[19]["count"] == chordal::reference::map_table[19].b);
}

TEST_CASE("constants") {
  Run r = run("constants --theorem 2");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["theorem"] == 2);
  CHECK(j["precision_bits"] == 256);
  CHECK(find_value(j, "1/sigma").rfind("6.40375", 0) == 0);
  // Deterministic output.
  CHECK(run("constants --theorem 2").out == r.out);

  Run low = run("constants --theorem 1", "CHORDAL_PRECISION_BITS=128");
  CHECK(low.code == 0);
  CHECK(parse(low)["precision_bits"] == 128);
  CHECK(find_value(parse(low), "gamma").rfind("1.189234", 0) == 0);
  // The flag overrides the environment.
  CHECK(parse(run("constants --precision-bits 192", "CHORDAL_PRECISION_BITS=128"))["precision_bits"] == 192);
}

TEST_CASE("verify on a pristine build") {
  Run r = run("verify");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["ok"] == true);
  CHECK(j["checks"].size() >= 20);
  for (const auto& c : j["checks"]) CHECK(c["ok"] == true);
}

TEST_CASE("series, fit, reconcile, oracle") {
  Run s = run("series --family ternary --order 10 --format csv");
  CHECK(s.code == 0);
  CHECK(s.out.find("\n3,12\n") != std::string::npos);

  Run f = run("fit --family ternary --order 120");
  CHECK(f.code == 0);
  CHECK(parse(f)["inverse_rho"].get<std::string>().rfind("6.7499", 0) == 0);

  Run rc = run("reconcile --theorem 2");
  CHECK(rc.code == 0);
  for (const auto& c : parse(rc)["constants"]) CHECK(c["factor_form"] == "2");

  Run o = run("oracle --n 6 --json");
  CHECK(o.code == 0);
  auto tables = parse(o);
  REQUIRE(tables.size() == 5);
  CHECK(tables[0]["family"] == "all");
  CHECK(tables[0]["rows"][5]["count"] == "17962");
  CHECK(tables[1]["rows"][5]["count"] == "13116");
  CHECK(tables[2]["rows"][5]["count"] == "2880");
}

TEST_CASE("output file") {
  auto path = std::filesystem::temp_directory_path() / "chordal_cli_test.csv";
  Run r = run("count --family connected --n-max 5 --format csv -o " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "n,connected\n1,1\n2,1\n3,4\n4,35\n5,540\n");
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("count --unknown-flag").code == 2);
  CHECK(run("nosuchcommand").code == 2);
  CHECK(run("count --family widgets").code == 2);
  CHECK(run("count --format xml").code == 2);
  CHECK(run("count --format csv --json").code == 2);
  CHECK(run("oracle --n 7").code == 2);
  CHECK(run("fit --order 20").code == 2);
  CHECK(run("reconcile --order 100").code == 2);
  CHECK(run("constants --theorem 3").code == 2);
  CHECK(run("constants", "CHORDAL_PRECISION_BITS=lots").code == 2);
  CHECK(run("--help").code == 0);
}
