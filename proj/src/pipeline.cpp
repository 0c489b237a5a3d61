#include "cl33/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

namespace cl33::pipeline {

namespace {

struct ParamSpec {
  const char* key;
  bool is_vector;
};

struct KindSpec {
  StepKind kind;
  const char* keyword;
  std::vector<ParamSpec> params;
};

const std::vector<KindSpec>& kind_specs() {
  static const std::vector<KindSpec> specs = {
      {StepKind::Reflect, "reflect", {{"n", true}}},
      {StepKind::Rotate, "rotate", {{"u", true}, {"v", true}, {"theta", false}}},
      {StepKind::HRotate, "hrotate", {{"u", true}, {"v", true}, {"eta", false}}},
      {StepKind::Shear, "shear", {{"u", true}, {"v", true}, {"t", false}}},
      {StepKind::Scale, "scale", {{"u", true}, {"t", false}}},
      {StepKind::Translate, "translate", {{"v", true}}},
      {StepKind::Cotranslate, "cotranslate", {{"v", true}}},
      {StepKind::Perspective, "perspective", {{"eye", true}, {"n", true}, {"c", false}}},
      {StepKind::Pseudo, "pseudo", {{"n", true}}},
      {StepKind::Psi, "psi", {{"grade", false}, {"eps", false}, {"seed", false}}},
  };
  return specs;
}

const KindSpec& spec_for(StepKind k) {
  for (const auto& s : kind_specs()) {
    if (s.kind == k) return s;
  }
  throw Error("unknown step kind");
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

// Character cursor over one line; columns are 1-based.
class Cursor {
 public:
  Cursor(const std::string& s, int line) : s_(s), line_(line) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  int column() const { return static_cast<int>(pos_) + 1; }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  double number() {
    std::size_t start = pos_;
    if (peek() == '+') ++start;
    const char* first = s_.data() + start;
    const char* last = s_.data() + s_.size();
    double value = 0;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr == first) fail("expected a number");
    if (!std::isfinite(value)) fail("number is not finite");
    pos_ = static_cast<std::size_t>(res.ptr - s_.data());
    return value;
  }

  Vector3d vector() {
    expect('(');
    Vector3d v;
    for (int i = 0; i < 3; ++i) {
      skip_space();
      v[i] = number();
      skip_space();
      if (i < 2) expect(',');
    }
    expect(')');
    return v;
  }

 private:
  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
};

bool is_integer(double x) { return std::floor(x) == x; }

std::string format_vector(const Vector3d& v) {
  return "(" + format_number(v[0]) + "," + format_number(v[1]) + "," + format_number(v[2]) + ")";
}

Step parse_step(const std::string& raw, int line) {
  Cursor cur(raw, line);
  cur.skip_space();
  const int op_col = cur.column();
  const std::string word = cur.identifier();
  const auto& specs = kind_specs();
  const auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const KindSpec& s) { return word == s.keyword; });
  if (it == specs.end()) throw ParseError(line, op_col, "unknown step '" + word + "'");

  std::vector<std::pair<Arg, int>> found;  // with value column
  while (true) {
    cur.skip_space();
    if (cur.done()) break;
    const int key_col = cur.column();
    const std::string key = cur.identifier();
    const auto ps = std::find_if(it->params.begin(), it->params.end(),
                                 [&](const ParamSpec& p) { return key == p.key; });
    if (ps == it->params.end()) {
      throw ParseError(line, key_col, "unknown parameter '" + key + "' for " + word);
    }
    for (const auto& f : found) {
      if (f.first.key == key) throw ParseError(line, key_col, "duplicate parameter '" + key + "'");
    }
    cur.expect('=');
    const int value_col = cur.column();
    if (ps->is_vector) {
      if (cur.peek() != '(') cur.fail("parameter '" + key + "' expects a vector (x,y,z)");
      found.push_back({Arg{key, cur.vector()}, value_col});
    } else {
      if (cur.peek() == '(') cur.fail("parameter '" + key + "' expects a number");
      found.push_back({Arg{key, cur.number()}, value_col});
    }
    if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek()))) {
      cur.fail("unexpected character after value");
    }
  }

  Step step;
  step.kind = it->kind;
  step.line = line;
  for (const auto& p : it->params) {
    const auto f = std::find_if(found.begin(), found.end(),
                                [&](const auto& a) { return a.first.key == p.key; });
    if (f == found.end()) {
      throw ParseError(line, cur.column(), std::string("missing parameter '") + p.key + "' for " + word);
    }
    step.args.push_back(f->first);
  }

  if (step.kind == StepKind::Psi) {
    const double g = step.num("grade");
    const double seed = step.num("seed");
    if (!is_integer(g) || g < 0 || g > kMaxGrade) {
      throw ParseError(line, op_col, "psi: grade must be an integer in 0..6");
    }
    if (!is_integer(seed) || seed < 0) {
      throw ParseError(line, op_col, "psi: seed must be a non-negative integer");
    }
  }

  try {
    (void)to_stage(step);
  } catch (const DomainError& e) {
    throw ParseError(line, op_col, e.what());
  } catch (const DegenerateConfiguration&) {
    // Reported when the pipeline is built for use, with its own exit code.
  }
  return step;
}

}  // namespace

const char* keyword(StepKind k) { return spec_for(k).keyword; }

const Vector3d& Step::vec(const std::string& key) const {
  for (const auto& a : args) {
    if (a.key == key) return std::get<Vector3d>(a.value);
  }
  throw Error("step has no vector parameter '" + key + "'");
}

double Step::num(const std::string& key) const {
  for (const auto& a : args) {
    if (a.key == key) return std::get<double>(a.value);
  }
  throw Error("step has no numeric parameter '" + key + "'");
}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column) {}

Pipeline parse_pipeline(const std::string& text) {
  Pipeline p;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string body = strip_comment(lines[i]);
    if (std::all_of(body.begin(), body.end(),
                    [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    p.steps.push_back(parse_step(body, static_cast<int>(i) + 1));
  }
  return p;
}

std::string format_pipeline(const Pipeline& p) {
  std::ostringstream out;
  for (const auto& s : p.steps) {
    out << keyword(s.kind);
    for (const auto& a : s.args) {
      out << ' ' << a.key << '=';
      if (const auto* v = std::get_if<Vector3d>(&a.value)) {
        out << format_vector(*v);
      } else {
        out << format_number(std::get<double>(a.value));
      }
    }
    out << '\n';
  }
  return out.str();
}

Pipeline inverse_pipeline(const Pipeline& p) {
  Pipeline inv;
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
    Step s = *it;
    auto negate = [&s](const std::string& key) {
      for (auto& a : s.args) {
        if (a.key != key) continue;
        if (auto* v = std::get_if<Vector3d>(&a.value)) {
          *v = -*v;
        } else {
          a.value = -std::get<double>(a.value);
        }
      }
    };
    switch (s.kind) {
      case StepKind::Reflect: break;
      case StepKind::Rotate: negate("theta"); break;
      case StepKind::HRotate: negate("eta"); break;
      case StepKind::Shear: negate("t"); break;
      case StepKind::Scale: negate("t"); break;
      case StepKind::Translate:
      case StepKind::Cotranslate: negate("v"); break;
      case StepKind::Pseudo: negate("n"); break;
      case StepKind::Perspective:
      case StepKind::Psi:
        throw DomainError(std::string("inverse_pipeline: '") + keyword(s.kind) +
                          "' step has no inverse");
    }
    inv.steps.push_back(std::move(s));
  }
  return inv;
}

Multivectord psi_element(int grade, double eps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Multivectord psi;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (std::popcount(i) == grade) psi.coeffs()[i] = normal(rng);
  }
  return 1.0 + (eps / psi.norm()) * psi;
}

Stage<double> to_stage(const Step& s) {
  switch (s.kind) {
    case StepKind::Reflect: return reflection_versor(s.vec("n"));
    case StepKind::Rotate: return rotation_versor(s.vec("u"), s.vec("v"), s.num("theta"));
    case StepKind::HRotate: return hyperbolic_versor(s.vec("u"), s.vec("v"), s.num("eta"));
    case StepKind::Shear: return shear_versor(s.vec("u"), s.vec("v"), s.num("t"));
    case StepKind::Scale: return scale_versor(s.vec("u"), s.num("t"));
    case StepKind::Translate: return translation_versor(s.vec("v"));
    case StepKind::Cotranslate: return Cotranslation<double>{s.vec("v")};
    case StepKind::Pseudo: {
      detail::require_unit(s.vec("n"), "pseudo", "n");
      return Cotranslation<double>{s.vec("n")};
    }
    case StepKind::Perspective: {
      const Perspective<double> pr{s.vec("eye"), s.vec("n"), s.num("c")};
      if (pr.normal.norm() == 0) throw DomainError("perspective: n must be nonzero");
      if (std::abs(perspective_offset(pr)) <= Tolerance{}.absolute) {
        throw DegenerateConfiguration("perspective: eye lies on the plane x.n = c");
      }
      return pr;
    }
    case StepKind::Psi:
      return Versord{psi_element(static_cast<int>(s.num("grade")), s.num("eps"),
                                 static_cast<std::uint64_t>(s.num("seed"))),
                     1, VersorKind::Composite};
  }
  throw Error("unknown step kind");
}

Transformd build_transform(const Pipeline& p) {
  std::vector<Stage<double>> stages;
  stages.reserve(p.steps.size());
  for (const auto& s : p.steps) stages.push_back(to_stage(s));
  return compose(stages);
}

std::vector<Paravectord> parse_points(const std::string& text) {
  std::vector<Paravectord> pts;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string body = strip_comment(lines[i]);
    const int line = static_cast<int>(i) + 1;
    Cursor cur(body, line);
    cur.skip_space();
    if (cur.done()) continue;
    double v[4];
    for (double& x : v) {
      cur.skip_space();
      if (cur.done()) cur.fail("expected 4 numbers: w x y z");
      x = cur.number();
      if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek()))) {
        cur.fail("unexpected character after number");
      }
    }
    cur.skip_space();
    if (!cur.done()) cur.fail("expected exactly 4 numbers: w x y z");
    pts.emplace_back(v[0], Vector3d(v[1], v[2], v[3]));
  }
  return pts;
}

std::string format_number(double x) {
  if (x == 0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_point(const Paravectord& p) {
  return format_number(p.weight) + " " + format_number(p.vector[0]) + " " +
         format_number(p.vector[1]) + " " + format_number(p.vector[2]);
}

}  // namespace cl33::pipeline
