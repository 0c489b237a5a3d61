#pragma once

// Acceptance suites. Each returns one result line; the CLI selftest and the
// acceptance test binary both run them.

#include <string>
#include <vector>

#include "cl33/algebra.hpp"

namespace cl33::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  long checks = 0;
  double seconds = 0;
};

struct SuiteOptions {
  const CayleyTable* table = &kCayley33;
  std::string fixtures_dir;  // empty: compiled-in default
  int trials = 1000;
};

// Cl(3,3) with e1+ squaring to -1. Used to show the relations suite can fail.
const CayleyTable& perturbed_table();

CriterionResult algebra_axioms(const SuiteOptions& o);
CriterionResult theorem_suite(const SuiteOptions& o);
CriterionResult hodge_star_suite(const SuiteOptions& o);
CriterionResult perspective_suite(const SuiteOptions& o);
CriterionResult hodge_equivalence_suite(const SuiteOptions& o);
CriterionResult translation_incompatibility_suite(const SuiteOptions& o);
CriterionResult classification_suite(const SuiteOptions& o);
CriterionResult matrix_suite(const SuiteOptions& o);
CriterionResult sector_suite(const SuiteOptions& o);
CriterionResult cli_suite(const SuiteOptions& o);

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const SuiteOptions& o);
std::vector<CriterionResult> run_all(const SuiteOptions& o);

std::string format_result(const CriterionResult& r);
std::string default_fixtures_dir();

}  // namespace cl33::verify
