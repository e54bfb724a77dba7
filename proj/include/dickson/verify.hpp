#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

inline const std::vector<std::string> kVerifySuites = {"field", "strategies", "identities", "perm",
                                                       "moments"};

struct VerifyOptions {
  std::set<std::string> skip;
  bool allow_large = false;
  std::size_t jobs = 1;
  Exponent strategy_n_max = 200;
  Exponent series_degree = 50;
  Exponent aux_n_max = 100;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Failing witness, or a short summary on success.
  std::string detail;
  double seconds = 0.0;

  std::string id() const { return suite + "/" + name; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Suites not run and why.
  std::vector<std::string> notes;

  bool all_passed() const;
  const CheckResult* find(const std::string& id) const;
};

/// Runs every check of the non-skipped suites. Checks never throw; exceptions become failures.
VerifyReport run_verification(const FieldCtx& ctx, const VerifyOptions& options);

/// A known defect in the reference derivation together with how it is resolved here
/// and which checks exercise the resolution.
struct Erratum {
  std::string id;
  std::string issue;
  std::string resolution;
  std::vector<std::string> checks;
};

const std::vector<Erratum>& errata();

enum class ErratumState { Validated, Failed, NotRun };

ErratumState erratum_state(const Erratum& item, const VerifyReport& report);

}  // namespace dickson
