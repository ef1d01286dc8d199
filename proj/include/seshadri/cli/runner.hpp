#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seshadri/cli/instance.hpp"

namespace seshadri::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kHypothesis = 2,
  kInput = 3,
  kInconsistency = 4,
};

struct RunOptions {
  std::string command;  // bound, fano, dp, classify, curve, sharpness, oracle
  std::string file;     // instance path; unused by sharpness
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<std::uint32_t>> primes;
  std::optional<unsigned> max_m;
  bool validate = false;
  unsigned retries = 5;
  unsigned n = 2;  // sharpness family
  unsigned d = 3;
  unsigned budget = 200;  // conic draws per prime
  unsigned threads = 0;
};

struct RunResult {
  int exit_code = kSuccess;
  /// Deterministic machine-readable report; exact numbers are strings.
  nlohmann::json report;
};

/// Runs one command. Errors are caught and mapped to exit codes; the report
/// then carries an "error" object.
RunResult run(const RunOptions& options);

/// Same, on an already parsed instance.
RunResult run(const RunOptions& options, const Instance& instance);

/// Human-readable rendering of a report: one "path: value" line per leaf.
std::string render_text(const nlohmann::json& report);

}  // namespace seshadri::cli
