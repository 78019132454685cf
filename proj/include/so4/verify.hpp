#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "so4/catalog.hpp"

namespace so4 {

struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few only; see failure_count

  std::size_t failure_count = 0;
  bool passed() const { return failure_count == 0; }
};

struct VerifyOptions {
  /// Random conjugates per catalog entry; 0 skips the randomized checks.
  int trials = 200;
  std::uint64_t seed = 0;
  int complexity = 3;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Family keys found per dimension ("J8", "L3^1", ...).
  std::map<int, std::set<std::string>> families_by_dim;

  bool passed() const;
};

/// Family keys per dimension that the classification must produce.
const std::map<int, std::set<std::string>>& expected_families_by_dim();

/// Runs self-classification, family counts, conjugation round-trips,
/// pairwise separation, swap pairing and the non-existence guards.
VerifyReport verify_tables(const std::vector<Representative>& catalog, const VerifyOptions& options);

}  // namespace so4
