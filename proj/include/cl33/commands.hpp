#pragma once

// The CLI commands as library functions over in-memory text, so they can be
// driven both from the executable and from tests.

#include <iosfwd>
#include <string>

namespace cl33::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitDegenerate = 3,
  kExitResidue = 4,
  kExitConditionFailure = 5,
};

enum class WeightMode { Keep, Normalize };

int run_apply(const std::string& pipeline_text, const std::string& points_text, WeightMode mode,
              std::ostream& out, std::ostream& err);

int run_matrix(const std::string& pipeline_text, std::ostream& out, std::ostream& err);

int run_check(const std::string& pipeline_text, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  bool perturb_signature = false;
  std::string fixtures_dir;  // empty: the directory compiled into the library
};

int run_selftest(const SelftestOptions& opts, std::ostream& out);

// Throws cl33::Error if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace cl33::cli
