#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tropkap/lifts.hpp"
#include "tropkap/puiseux.hpp"
#include "tropkap/tropical.hpp"

namespace tropkap::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitPass;
  std::string human_report;
  /// Serialized JSON document; empty on usage errors.
  std::string machine_report;
  /// Diagnostics for stderr.
  std::string error;
  /// Set by --json; selects which report goes to stdout.
  bool json = false;

  const std::string& stdout_text() const {
    return json && !machine_report.empty() ? machine_report : human_report;
  }
};

/// Runs one invocation; `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

/// The end-to-end check behind `verify-example`, parameterized so that
/// tests can feed it corrupted data.
CommandResult verify_example(const TropicalMatrix& a, const PuiseuxMatrix& m0,
                             std::size_t threshold = kDefaultEnumerationThreshold);

struct FuzzOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t max_extra_terms = 3;
  Rational exponent_step = Rational(1);
  std::size_t threads = 1;
  std::size_t threshold = kDefaultEnumerationThreshold;
};

/// Seed of trial `index` in a run seeded with `base`.
std::uint64_t trial_seed(std::uint64_t base, std::size_t index);

CommandResult fuzz_lifts(const FuzzOptions& options);

}  // namespace tropkap::cli
