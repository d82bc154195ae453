#pragma once

// Seeded property suites behind the `verify` command.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace anscombe {

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Description of the first failure; for matrix properties it ends with the
  /// offending matrix in file format.
  std::optional<std::string> counterexample;

  bool passed() const noexcept { return failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 20220509;
  /// Random matrices per randomized property.
  std::size_t samples = 10000;
};

/// skl, identity, mdtight, r3, rule34, pairs, floor, half.
const std::vector<std::string>& suite_names();

/// Throws ParameterError for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

}  // namespace anscombe
