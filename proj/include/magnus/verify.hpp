#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magnus/johnson.hpp"

namespace magnus {

struct SuiteOptions {
  int rank = 3;
  int genus = 2;
  int truncation = 5;
  int trials = 200;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::optional<CheckReport> counterexample;
};

/// Leaf suite names, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one leaf suite. Throws std::invalid_argument on unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// Expands meta names ("johnson", "cochain", "all") to leaf suites;
/// a leaf name expands to itself.
std::vector<std::string> expand_suite_selector(const std::string& selector);

}  // namespace magnus
