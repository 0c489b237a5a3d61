#include "cl33/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include "cl33/pipeline.hpp"
#include "cl33/projective.hpp"
#include "cl33/verify.hpp"

namespace cl33::cli {

namespace {

using pipeline::ParseError;

// Maps library errors to exit codes; anything else is a plain failure.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DegenerateConfiguration& e) {
    err << "degenerate geometry: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const NonParavectorResidue& e) {
    err << "residue: " << e.what() << '\n';
    return kExitResidue;
  } catch (const CovectorResidue& e) {
    err << "residue: " << e.what() << '\n';
    return kExitResidue;
  } catch (const DomainError& e) {
    // Only reachable after parsing, e.g. a Hodge stage leaving Λ(V3).
    err << "residue: " << e.what() << '\n';
    return kExitResidue;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

struct CheckLine {
  std::string name;
  double value = 0;
};

bool report(std::ostream& out, const std::string& prefix, const std::vector<CheckLine>& lines,
            double limit) {
  bool ok = true;
  for (const auto& l : lines) {
    const bool pass = l.value <= limit;
    ok = ok && pass;
    out << prefix << l.name << ' ' << (pass ? "PASS" : "FAIL") << "  max residual "
        << std::setprecision(3) << l.value << '\n';
  }
  return ok;
}

bool check_sandwich(std::ostream& out, const std::string& prefix, const Versord& v) {
  std::vector<CheckLine> lines = {{"cond1", 0}, {"cond2", 0},   {"cond3", 0},  {"cond4", 0},
                                  {"covector", 0}, {"direct4", 0}, {"direct5", 0}};
  double scale = 1;
  for (const auto& p : probe_points()) {
    const auto r = paravector_conditions(v.U, p);
    const double vals[] = {r.r1.max_abs(), r.r2.max_abs(), r.r3.max_abs(),
                           r.r4.max_abs(), r.covector_residual.max_abs(),
                           r.direct4.max_abs(), r.direct5.max_abs()};
    for (std::size_t i = 0; i < lines.size(); ++i) lines[i].value = std::max(lines[i].value, vals[i]);
    scale = std::max(scale, v.U.max_abs() * v.U.max_abs() * std::max(1.0, p.norm()));
  }
  return report(out, prefix, lines, 1e-9 * scale);
}

// Hodge-form stages: the conditions concern sandwiches, so the image of every
// probe is checked directly instead.
bool check_direct(std::ostream& out, const std::string& prefix, const Stage<double>& stage) {
  double worst = 0;
  for (const auto& p : probe_points()) {
    try {
      (void)apply_stage(stage, Paravectord::affine(p));
    } catch (const NonParavectorResidue& e) {
      worst = std::max(worst, e.residual());
    } catch (const CovectorResidue& e) {
      worst = std::max(worst, e.residual());
    } catch (const DomainError&) {
      worst = std::max(worst, 1.0);
    }
  }
  return report(out, prefix, {{"direct", worst}}, 0);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_apply(const std::string& pipeline_text, const std::string& points_text, WeightMode mode,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto transform = pipeline::build_transform(pipeline::parse_pipeline(pipeline_text));
    const auto points = pipeline::parse_points(points_text);
    std::vector<Paravectord> results;
    results.reserve(points.size());
    for (const auto& p : points) {
      Paravectord q = apply(transform, p);
      if (mode == WeightMode::Normalize) q = dehomogenize(q);
      results.push_back(q);
    }
    for (const auto& q : results) out << pipeline::format_point(q) << '\n';
    return int(kExitOk);
  });
}

int run_matrix(const std::string& pipeline_text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto transform = pipeline::build_transform(pipeline::parse_pipeline(pipeline_text));
    const Matrix4d m = projective_matrix_probe(transform);
    out << std::setprecision(17);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) out << (c ? " " : "") << (m(r, c) == 0 ? 0.0 : m(r, c));
      out << '\n';
    }
    return int(kExitOk);
  });
}

int run_check(const std::string& pipeline_text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto transform = pipeline::build_transform(pipeline::parse_pipeline(pipeline_text));
    if (transform.stages.empty()) {
      out << "empty pipeline: identity PASS\n";
      return int(kExitOk);
    }
    bool ok = true;
    int index = 0;
    for (const auto& stage : transform.stages) {
      ++index;
      std::ostringstream prefix;
      prefix << "stage " << index;
      if (const auto* v = std::get_if<Versord>(&stage)) {
        prefix << " sandwich (" << to_string(v->kind) << "): ";
        ok = check_sandwich(out, prefix.str(), *v) && ok;
      } else if (std::holds_alternative<Perspective<double>>(stage)) {
        prefix << " perspective: ";
        ok = check_direct(out, prefix.str(), stage) && ok;
      } else {
        prefix << " hodge sandwich: ";
        ok = check_direct(out, prefix.str(), stage) && ok;
      }
    }
    out << (ok ? "all conditions PASS" : "condition FAILURE") << '\n';
    return int(ok ? kExitOk : kExitConditionFailure);
  });
}

int run_selftest(const SelftestOptions& opts, std::ostream& out) {
  verify::SuiteOptions so;
  if (opts.perturb_signature) so.table = &verify::perturbed_table();
  if (!opts.fixtures_dir.empty()) so.fixtures_dir = opts.fixtures_dir;
  const auto results = verify::run_all(so);
  int passed = 0;
  double seconds = 0;
  for (const auto& r : results) {
    out << verify::format_result(r) << '\n';
    passed += r.pass ? 1 : 0;
    seconds += r.seconds;
  }
  out << passed << "/" << results.size() << " suites passed in " << std::fixed
      << std::setprecision(2) << seconds << " s (budget 60 s)\n";
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitFailure;
}

}  // namespace cl33::cli
