// cl33: apply, inspect and check transform pipelines.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cl33/commands.hpp"
#include "cl33/errors.hpp"

namespace {

// "-" reads standard input.
std::string slurp(const std::string& path) {
  if (path == "-") {
    std::string all, line;
    while (std::getline(std::cin, line)) all += line + '\n';
    return all;
  }
  return cl33::cli::read_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cl33::cli;
  CLI::App app{"Projective transforms in Cl(3,3)"};
  app.require_subcommand(1);

  std::string pipeline_path, points_path = "-", fixtures;
  bool normalize = false, keep = false, perturb = false;

  auto* apply = app.add_subcommand("apply", "transform points (w x y z per line)");
  apply->add_option("-p,--pipeline", pipeline_path, "pipeline file")->required();
  apply->add_option("-i,--points", points_path, "points file, '-' for stdin");
  auto* norm_flag = apply->add_flag("--normalize", normalize, "print (1, p/w)");
  apply->add_flag("--keep-weights", keep, "print weighted points (default)")->excludes(norm_flag);

  auto* matrix = app.add_subcommand("matrix", "print the 4x4 matrix in (w, x, y, z) order");
  matrix->add_option("-p,--pipeline", pipeline_path, "pipeline file")->required();

  auto* check = app.add_subcommand("check", "evaluate the paravector conditions per stage");
  check->add_option("-p,--pipeline", pipeline_path, "pipeline file")->required();

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suites");
  selftest->add_flag("--perturb-signature", perturb, "flip the square of e1+ to show failures");
  selftest->add_option("--fixtures", fixtures, "fixture directory for the CLI suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*selftest) return run_selftest({perturb, fixtures}, std::cout);
    const std::string text = slurp(pipeline_path);
    if (*apply) {
      return run_apply(text, slurp(points_path), normalize ? WeightMode::Normalize : WeightMode::Keep,
                       std::cout, std::cerr);
    }
    if (*matrix) return run_matrix(text, std::cout, std::cerr);
    return run_check(text, std::cout, std::cerr);
  } catch (const cl33::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
