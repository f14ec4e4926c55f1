// chordal: counting tables, series, constants, fits and verification.
//
// Exit codes: 0 success, 1 verification or computation failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "chordal/maps.hpp"
#include "chordal/report.hpp"
#include "chordal/verify.hpp"

using namespace chordal;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "json";
  bool json = false;
  std::string output;
  std::size_t order = 64;
  unsigned precision_bits = 256;
  std::string family = "all";
  unsigned n_max = 20;
  unsigned n = 6;
  int theorem = 1;
  bool no_fits = false;
  bool keep_going = false;
};

unsigned default_precision() {
  const char* env = std::getenv("CHORDAL_PRECISION_BITS");
  if (!env || !*env) return 256;
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("CHORDAL_PRECISION_BITS is not an integer: ") + env);
  }
}

void validate(RunConfig& cfg) {
  if (cfg.json) {
    if (cfg.format != "json") throw UsageError("--json conflicts with --format " + cfg.format);
  }
  if (cfg.precision_bits < 64 || cfg.precision_bits > 16384)
    throw UsageError("precision must be between 64 and 16384 bits");
  if (cfg.order < 1) throw UsageError("--order must be positive");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw UsageError("cannot open " + cfg.output);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool is_map_family(const std::string& f) { return f == "maps" || f == "2conn-maps"; }

const std::vector<std::string> kSeriesFamilies = {"all",      "connected", "2conn",     "triangulations",
                                                  "networks", "ternary",   "maps",      "2conn-maps"};

TruncatedSeries select_series(const std::string& family, std::size_t order) {
  if (family == "maps") return all_maps_series(order);
  if (family == "2conn-maps") return two_connected_maps_series(order);
  if (family == "ternary") return ternary_series(order);
  if (family == "triangulations") return unrooted_triangulation_series(order);
  if (family == "2conn") return two_connected_series_closed(order);
  if (family == "networks") return network_series_y1(order);
  GraphSeriesY1 s = graph_series_y1(order);
  if (family == "connected") return s.connected;
  if (family == "all") return s.all;
  throw UsageError("no series for family '" + family + "'");
}

int cmd_count(const RunConfig& cfg) {
  std::vector<CountTable> tables;
  const std::size_t order = std::max<std::size_t>(cfg.order, cfg.n_max);
  if (is_map_family(cfg.family))
    tables.push_back(map_count_table(parse_map_family(cfg.family), cfg.n_max, order));
  else
    tables.push_back(count_table(parse_graph_family(cfg.family), cfg.n_max, order));
  emit(cfg, cfg.format == "csv" ? to_csv(tables) : dump(to_json(tables[0])));
  return 0;
}

int cmd_series(const RunConfig& cfg) {
  TruncatedSeries s = select_series(cfg.family, cfg.order);
  emit(cfg, cfg.format == "csv" ? series_csv(s) : dump(series_json(cfg.family, s)));
  return 0;
}

int cmd_constants(const RunConfig& cfg) {
  ConstantsReport r = cfg.theorem == 1 ? theorem1_constants(cfg.precision_bits) : theorem2_constants(cfg.precision_bits);
  emit(cfg, cfg.format == "csv" ? to_csv(r) : dump(to_json(r)));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.order = cfg.order;
  opt.precision_bits = cfg.precision_bits;
  opt.include_fits = !cfg.no_fits;
  opt.fail_fast = !cfg.keep_going;
  VerifyReport r = run_verify(opt);
  if (cfg.format == "json") {
    emit(cfg, dump(to_json(r)));
  } else {
    std::string text;
    for (const auto& c : r.checks) text += describe(c) + "\n";
    emit(cfg, text);
  }
  if (const CheckResult* f = r.first_failure()) {
    std::cerr << describe(*f) << "\n";
    return 1;
  }
  return 0;
}

int cmd_fit(const RunConfig& cfg) {
  if (cfg.order < kMinFitTerms) throw UsageError("fit needs --order >= " + std::to_string(kMinFitTerms));
  TruncatedSeries s = select_series(cfg.family, cfg.order);
  bool ordinary = is_map_family(cfg.family) || cfg.family == "ternary";
  FitResult f = empirical_fit(ordinary ? ogf_counts(s) : egf_counts(s),
                              ordinary ? Scaling::ordinary : Scaling::exponential, 4, cfg.precision_bits);
  Json j = to_json(f);
  j["family"] = cfg.family;
  emit(cfg, dump(j));
  return 0;
}

int cmd_reconcile(const RunConfig& cfg) {
  if (cfg.order < 200) throw UsageError("reconcile needs --order >= 200");
  emit(cfg, dump(to_json(reconcile_theorem(cfg.theorem, cfg.order, cfg.precision_bits))));
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > oracle::kMaxCensus)
    throw UsageError("--n must be in 1.." + std::to_string(oracle::kMaxCensus));
  std::vector<CountTable> tables = census_tables(oracle::census_table(cfg.n));
  if (cfg.format == "csv") {
    emit(cfg, to_csv(tables));
  } else {
    Json j = Json::array();
    for (const auto& t : tables) j.push_back(to_json(t));
    emit(cfg, dump(j));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic enumeration of chordal planar graphs and maps"};
  app.require_subcommand(1);
  RunConfig cfg;
  try {
    cfg.precision_bits = default_precision();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto common = [&](CLI::App* sub, bool with_format = true) {
    if (with_format) {
      sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
      sub->add_flag("--json", cfg.json, "Same as --format json");
    }
    sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
    sub->add_option("--precision-bits", cfg.precision_bits, "Working precision (default 256 or $CHORDAL_PRECISION_BITS)");
  };
  std::vector<std::string> count_families = {"all", "connected", "2conn", "3conn", "triangulations",
                                             "networks", "maps", "2conn-maps"};

  auto* count = app.add_subcommand("count", "Counting sequence of one family");
  common(count);
  count->add_option("--family", cfg.family, "Family")->check(CLI::IsMember(count_families));
  count->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::Range(1u, 100000u));
  count->add_option("--order", cfg.order, "Series truncation order");

  auto* series = app.add_subcommand("series", "Coefficients of a generating function");
  common(series);
  series->add_option("--family", cfg.family, "Family")->check(CLI::IsMember(kSeriesFamilies));
  series->add_option("--order", cfg.order, "Truncation order");

  auto* constants = app.add_subcommand("constants", "Singular constants of one theorem");
  common(constants);
  constants->add_option("--theorem", cfg.theorem, "1 (graphs) or 2 (maps)")->check(CLI::IsMember({1, 2}));

  auto* verify = app.add_subcommand("verify", "Run the invariant battery");
  common(verify);
  verify->add_option("--order", cfg.order, "Series order for exact checks");
  verify->add_flag("--no-fits", cfg.no_fits, "Skip the coefficient fits");
  verify->add_flag("--keep-going", cfg.keep_going, "Do not stop at the first failure");

  auto* fit = app.add_subcommand("fit", "Empirical growth and constant from exact coefficients");
  common(fit, false);
  fit->add_option("--family", cfg.family, "Family")->check(CLI::IsMember(kSeriesFamilies));
  fit->add_option("--order", cfg.order, "Number of coefficients (at least 50)");

  auto* reconcile = app.add_subcommand("reconcile", "Analytic, fitted and printed leading constants");
  common(reconcile, false);
  reconcile->add_option("--theorem", cfg.theorem, "1 (graphs) or 2 (maps)")->check(CLI::IsMember({1, 2}));
  reconcile->add_option("--order", cfg.order, "Number of coefficients (at least 200, default 256)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force census of small labelled graphs");
  common(oracle_cmd);
  oracle_cmd->add_option("--n", cfg.n, "Largest number of vertices (at most 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // fit and reconcile produce JSON only.
  if (*fit || *reconcile) cfg.format = "json";
  if (*reconcile && reconcile->count("--order") == 0) cfg.order = 256;

  try {
    validate(cfg);
    if (*count) return cmd_count(cfg);
    if (*series) return cmd_series(cfg);
    if (*constants) return cmd_constants(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*fit) return cmd_fit(cfg);
    if (*reconcile) return cmd_reconcile(cfg);
    if (*oracle_cmd) return cmd_oracle(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
