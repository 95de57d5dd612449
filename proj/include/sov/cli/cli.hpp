#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sov/characters/partition.hpp"

namespace sov::cli {

/// Result of one verification case.
struct CheckRecord {
  std::string check;
  nlohmann::ordered_json params;
  bool pass = false;
  /// lhs - rhs as a polynomial on failure, null otherwise.
  nlohmann::ordered_json witness;
};

nlohmann::ordered_json record_to_json(const CheckRecord& r);

/// Sweep selection. Unset bounds fall back to the suite defaults.
struct SweepBounds {
  std::optional<std::size_t> L_max;
  std::optional<int> lambda_max;
  /// Restrict to a single partition.
  std::optional<Partition> lambda;
  std::optional<std::size_t> k;
  std::optional<std::size_t> j;
  bool aam_L3 = false;
  /// inverse-sk with the alternative sign convention instead of (-1)^{k(k-1)/2}.
  bool printed_sign = false;
};

struct Case {
  std::string check;
  nlohmann::ordered_json params;
  std::function<CheckRecord()> run;
};

const std::vector<std::string>& suite_names();
/// Cases of one suite in deterministic order. Throws std::invalid_argument on an unknown suite.
std::vector<Case> suite_cases(const std::string& suite, const SweepBounds& bounds);

/// Runs cases on `jobs` worker threads; results come back in case order.
std::vector<CheckRecord> run_cases(const std::vector<Case>& cases, unsigned jobs);

/// --jobs if given, else SOV_JOBS, else 1.
unsigned resolve_jobs(std::optional<unsigned> flag);

/// Entry point of the `sov` executable. Returns the process exit code:
/// 0 all pass, 1 verification failure, 2 usage error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sov::cli
