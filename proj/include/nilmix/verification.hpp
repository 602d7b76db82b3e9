#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nilmix/involution.hpp"

namespace nilmix {

struct VerificationCase {
  std::string id;
  /// Descriptive tag of the claim being checked.
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCase> cases;

  /// Passes iff expected == computed.
  void check(std::string id, std::string claim, std::string expected, std::string computed);
  void check(std::string id, std::string claim, long expected, long computed);
  void check(std::string id, std::string claim, bool expected, bool computed);

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0 && !cases.empty(); }
};

struct SweepOptions {
  /// Largest rank of the classical types swept.
  int max_rank = 8;
  /// Largest natural-module dimension handled by the matrix oracle.
  int oracle_max_n = 9;
};

/// tables, egrids, sweep04, sweep02, regular-g0, kappa, oracle, upsilon, ibn, defect.
const std::vector<std::string>& suite_names();
/// Throws InvalidInput for an unknown suite.
VerificationReport run_suite(std::string_view name, const SweepOptions& opt = {});

/// Classical types up to max_rank (C from rank 3, D from rank 4) followed by the exceptional types.
std::vector<SimpleType> sweep_types(int max_rank);
std::vector<SymmetricPair> sweep_pairs(int max_rank);

nlohmann::ordered_json to_json(const VerificationReport& r);

}  // namespace nilmix
