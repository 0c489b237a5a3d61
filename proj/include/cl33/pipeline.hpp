#pragma once

// Line-oriented transform DSL.
//
//   reflect n=(x,y,z)
//   rotate u=(..) v=(..) theta=F
//   hrotate u=(..) v=(..) eta=F
//   shear u=(..) v=(..) t=F
//   scale u=(..) t=F
//   translate v=(..)
//   cotranslate v=(..)
//   perspective eye=(..) n=(..) c=F
//   pseudo n=(..)
//   psi grade=K eps=F seed=N      diagnostic: sandwich by 1 + eps*(random unit grade-K element)
//
// '#' starts a comment. One step per line.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cl33/errors.hpp"
#include "cl33/euclid.hpp"
#include "cl33/transform.hpp"

namespace cl33::pipeline {

enum class StepKind {
  Reflect,
  Rotate,
  HRotate,
  Shear,
  Scale,
  Translate,
  Cotranslate,
  Perspective,
  Pseudo,
  Psi
};

const char* keyword(StepKind k);

using Value = std::variant<double, Vector3d>;

struct Arg {
  std::string key;
  Value value;

  friend bool operator==(const Arg&, const Arg&) = default;
};

struct Step {
  StepKind kind = StepKind::Translate;
  std::vector<Arg> args;  // canonical key order for the kind
  int line = 0;

  const Vector3d& vec(const std::string& key) const;
  double num(const std::string& key) const;

  // Equality ignores the source line.
  friend bool operator==(const Step& a, const Step& b) {
    return a.kind == b.kind && a.args == b.args;
  }
};

struct Pipeline {
  std::vector<Step> steps;

  friend bool operator==(const Pipeline&, const Pipeline&) = default;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Pipeline parse_pipeline(const std::string& text);
std::string format_pipeline(const Pipeline& p);

// Reverse order with negated parameters. Throws DomainError for steps that
// have no inverse (perspective, psi).
Pipeline inverse_pipeline(const Pipeline& p);

// The psi diagnostic element 1 + eps * psi, psi of unit coefficient norm.
Multivectord psi_element(int grade, double eps, std::uint64_t seed);

Stage<double> to_stage(const Step& s);
Transformd build_transform(const Pipeline& p);

// ---------------------------------------------------------------------------
// Point files: "w x y z" per line, '#' comments.

std::vector<Paravectord> parse_points(const std::string& text);
std::string format_number(double x);
std::string format_point(const Paravectord& p);

}  // namespace cl33::pipeline
