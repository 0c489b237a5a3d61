#include "helpers.hpp"

#include "cl33/pipeline.hpp"

using namespace testing;
using namespace cl33::pipeline;

TEST_CASE("parse steps") {
  auto p = parse_pipeline("translate v=(1,2,3)");
  REQUIRE(p.steps.size() == 1);
  CHECK(p.steps[0].kind == StepKind::Translate);
  CHECK(p.steps[0].vec("v") == Vector3d(1, 2, 3));

  p = parse_pipeline("# comment\n\nrotate u=(1,0,0) v=(0,1,0) theta=1.5708  # trailing\n");
  REQUIRE(p.steps.size() == 1);
  CHECK(p.steps[0].kind == StepKind::Rotate);
  CHECK(p.steps[0].num("theta") == 1.5708);
  CHECK(p.steps[0].line == 3);

  p = parse_pipeline("  scale   t=+0.5 u=( 0 , 0 , 1 )");
  CHECK(p.steps[0].num("t") == 0.5);
  CHECK(parse_pipeline("").steps.empty());
}

namespace {

void expect_error(const std::string& text, int line, const std::string& fragment) {
  CAPTURE(text);
  try {
    (void)parse_pipeline(text);
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() >= 1);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("parse errors carry a line number") {
  expect_error("rotate u=(1,0,0) v=(1,0,0) theta=1", 1, "orthogonal");
  expect_error("translate v=(1,0,0)\nwobble x=1", 2, "wobble");
  expect_error("translate v=(1,0)", 1, "");
  expect_error("translate v=(1,0,0) v=(1,0,0)", 1, "v");
  expect_error("scale u=(0,0,1)", 1, "t");
  expect_error("translate v=1", 1, "");
  expect_error("reflect n=(0,0,2)", 1, "");
  expect_error("psi grade=7 eps=0.1 seed=1", 1, "grade");
  expect_error("translate v=(nan,0,0)", 1, "");
  expect_error("\n\nscale u=(0,0,1) t=1 w=2", 3, "w");
}

TEST_CASE("degenerate perspective parses") {
  CHECK_NOTHROW(parse_pipeline("perspective eye=(0,0,1) n=(0,0,1) c=1"));
  CHECK_THROWS_AS(build_transform(parse_pipeline("perspective eye=(0,0,1) n=(0,0,1) c=1")),
                  DegenerateConfiguration);
  expect_error("perspective eye=(0,0,0) n=(0,0,0) c=1", 1, "");
}

TEST_CASE("format round trip") {
  const std::string text =
      "reflect n=(0,0.6,0.8)\nrotate u=(1,0,0) v=(0,1,0) theta=0.1\nhrotate u=(1,0,0) v=(0,1,0) eta=-2\n"
      "shear u=(1,0,0) v=(0,0,1) t=1e-05\nscale u=(0,1,0) t=3\ntranslate v=(1,2,3)\n"
      "cotranslate v=(0.1,0.2,0.3)\nperspective eye=(0,0,0) n=(0,0,1) c=1\npseudo n=(1,0,0)\n"
      "psi grade=2 eps=0.01 seed=4\n";
  const Pipeline p = parse_pipeline(text);
  CHECK(parse_pipeline(format_pipeline(p)) == p);
  CHECK(format_pipeline(p) == text);
}

TEST_CASE("inverse pipeline") {
  const Pipeline p = parse_pipeline("rotate u=(1,0,0) v=(0,1,0) theta=0.3\ntranslate v=(1,2,3)\nreflect n=(1,0,0)");
  const Pipeline inv = inverse_pipeline(p);
  CHECK(format_pipeline(inv) ==
        "reflect n=(1,0,0)\ntranslate v=(-1,-2,-3)\nrotate u=(1,0,0) v=(0,1,0) theta=-0.3\n");
  const Transformd fwd = build_transform(p), back = build_transform(inv);
  for (int n = 0; n < 100; ++n) {
    const Paravectord q(uniform(0.5, 2), random_vec(3));
    CHECK(dist(apply(back, apply(fwd, q)), q) < 1e-13);
  }
  CHECK_THROWS_AS(inverse_pipeline(parse_pipeline("perspective eye=(0,0,0) n=(0,0,1) c=1")), DomainError);
}

TEST_CASE("points") {
  const auto pts = parse_points("1 0 0 0\n# c\n\n2 1e-3 -4 +5  # trailing\n");
  REQUIRE(pts.size() == 2);
  CHECK(pts[1] == Paravectord(2, Vector3d(1e-3, -4, 5)));
  CHECK(format_point(pts[1]) == "2 0.001 -4 5");
  CHECK(format_number(-0.0) == "0");
  CHECK_THROWS_AS(parse_points("1 2 3"), ParseError);
  CHECK_THROWS_AS(parse_points("1 2 3 4 5"), ParseError);
  CHECK_THROWS_AS(parse_points("1 2 x 4"), ParseError);
}

TEST_CASE("psi element") {
  const auto a = psi_element(3, 0.01, 9), b = psi_element(3, 0.01, 9);
  CHECK(dist(a, b) == 0);
  CHECK((a - 1.0).norm() == doctest::Approx(0.01));
  CHECK(homogeneous_grade(a - 1.0) == 3);
}
