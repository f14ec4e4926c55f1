#pragma once

// The invariant battery behind `chordal verify`: exact tables, closed forms,
// dissymmetry, annihilators, discriminants, root certificates, the
// brute-force census, subcriticality and fit consistency.

#include <optional>
#include <string>
#include <vector>

#include "chordal/report.hpp"

namespace chordal {

struct CheckResult {
  std::string module;
  std::string invariant;
  bool ok = false;
  /// Smallest n (or series order) at which the invariant fails, when it is indexed by one.
  std::optional<std::size_t> first_failing_order;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::size_t order = 64;
  unsigned precision_bits = 256;
  unsigned oracle_n = 6;
  bool fail_fast = true;
  bool include_fits = true;  // the coefficient fits take a few seconds
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult* first_failure() const;
};

VerifyReport run_verify(const VerifyOptions& opt = {});

/// "FAIL labelled-graphs: <invariant> (first failing order 12): <detail>"
std::string describe(const CheckResult& c);

Json to_json(const VerifyReport& r);

}  // namespace chordal
