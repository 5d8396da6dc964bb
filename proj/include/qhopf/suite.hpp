#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/serialize.hpp"

namespace qhopf {

struct SuiteOptions {
  bool extended = false;  // also run the book-64 dual cohomology job
  std::uint64_t prime_seed = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  json details;
};

/// Runs criterion `id` (1..8).
CriterionResult run_criterion(int id, const SuiteOptions& opts);
/// All criteria in order; no timings, so the output is reproducible.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);
json suite_to_json(const std::vector<CriterionResult>& results, const SuiteOptions& opts);

/// The instances exercised by the axiom criterion.
std::vector<std::string> axiom_suite_instances();

}  // namespace qhopf
