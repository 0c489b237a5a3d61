#include "cl33/verify.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "cl33.hpp"
#include "cl33/commands.hpp"
#include "cl33/oracles.hpp"
#include "cl33/pipeline.hpp"

#ifndef CL33_FIXTURES_DIR
#define CL33_FIXTURES_DIR "tests/fixtures"
#endif

namespace cl33::verify {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = -1, double hi = 1) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  Vector3d vec(double r = 1) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }
  Vector3d unit() {
    Vector3d v;
    do v = vec(); while (v.norm() < 1e-3);
    return v.normalized();
  }
  // Orthonormal pair.
  std::pair<Vector3d, Vector3d> frame() {
    const Vector3d u = unit();
    Vector3d v;
    do {
      v = vec();
      v -= v.dot(u) * u;
    } while (v.norm() < 1e-3);
    return {u, v.normalized()};
  }
  Paravectord point(double weight_lo = 0.5, double weight_hi = 2) {
    return {uniform(weight_lo, weight_hi), vec(2)};
  }
  Multivectord dense() {
    Multivectord m;
    for (int i = 0; i < kBladeCount; ++i) m.coeffs()[i] = uniform();
    return m;
  }
  Multivectord of_grade(int k) {
    Multivectord m;
    for (unsigned i = 0; i < kBladeCount; ++i) {
      if (std::popcount(i) == k) m.coeffs()[i] = uniform();
    }
    return m;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Counts checks and keeps the first failure message.
struct Tally {
  long checks = 0;
  long failures = 0;
  double worst = 0;
  std::string first_failure;

  bool check(bool ok, const std::string& what, double err = 0) {
    ++checks;
    worst = std::max(worst, err);
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
    return ok;
  }
  bool ok() const { return failures == 0; }
};

double rel_err(const Vector4<double>& got, const Vector4<double>& want) {
  return (got - want).cwiseAbs().maxCoeff() / std::max(1.0, want.cwiseAbs().maxCoeff());
}

double rel_err(const Paravectord& got, const Paravectord& want) {
  return rel_err(to_homogeneous(got), to_homogeneous(want));
}

double rel_err3(const Vector3d& got, const Vector3d& want) {
  return (got - want).cwiseAbs().maxCoeff() / std::max(1.0, want.cwiseAbs().maxCoeff());
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(3) << x;
  return s.str();
}

CriterionResult finish(int id, const char* title, const Tally& t, std::string detail = {}) {
  CriterionResult r;
  r.id = id;
  r.title = title;
  r.pass = t.ok();
  r.checks = t.checks;
  if (detail.empty()) detail = "worst error " + fmt(t.worst);
  if (!t.ok()) detail += "; " + std::to_string(t.failures) + " failed, first: " + t.first_failure;
  r.detail = detail;
  return r;
}

Multivectord gp(const Multivectord& a, const Multivectord& b, const CayleyTable& t) {
  return geometric_product(a, b, t);
}

}  // namespace

const CayleyTable& perturbed_table() {
  static const CayleyTable table(Signature{{-1, 1, 1, -1, -1, -1}});
  return table;
}

std::string default_fixtures_dir() { return CL33_FIXTURES_DIR; }

// ---------------------------------------------------------------------------
// 1

CriterionResult algebra_axioms(const SuiteOptions& o) {
  const CayleyTable& t = *o.table;
  Tally tally;
  using M = Multivectord;

  // Exact relations among the generators.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const M pi = M::blade(positive_generator(i)), pj = M::blade(positive_generator(j));
      const M mi = M::blade(negative_generator(i)), mj = M::blade(negative_generator(j));
      const double d = i == j ? 1.0 : 0.0;
      tally.check((gp(pi, pj, t) + gp(pj, pi, t)).coeffs() == M::scalar(2 * d).coeffs(),
                  "e+e+ anticommutator");
      tally.check((gp(mi, mj, t) + gp(mj, mi, t)).coeffs() == M::scalar(-2 * d).coeffs(),
                  "e-e- anticommutator");
      tally.check((gp(pi, mj, t) + gp(mj, pi, t)).coeffs() == M::zero().coeffs(),
                  "e+e- anticommutator");
    }
  }
  // Every blade pair against the sorted-list oracle with the true signature.
  for (unsigned a = 0; a < kBladeCount; ++a) {
    for (unsigned b = 0; b < kBladeCount; ++b) {
      const auto [sign, mask] = oracle::naive_blade_product(a, b, kSignature33);
      const M prod = gp(M::blade(BladeMask(a)), M::blade(BladeMask(b)), t);
      tally.check(prod.coeffs() == M::blade(BladeMask(mask), sign).coeffs(),
                  "blade product " + std::to_string(a) + "*" + std::to_string(b));
    }
  }

  Rng rng(101);
  for (int n = 0; n < o.trials; ++n) {
    const M a = rng.dense(), b = rng.dense(), c = rng.dense();
    const M left = gp(gp(a, b, t), c, t);
    const M right = gp(a, gp(b, c, t), t);
    const double scale = std::max(left.max_abs(), right.max_abs());
    const double err = (left - right).max_abs();
    tally.check(err <= 1e-12 + 1e-9 * scale, "associativity", err / std::max(1.0, scale));

    const Vector3d u = rng.vec(), v = rng.vec();
    const M eu = embed_vector(u), ev = embed_vector(v);
    const M cu = embed_covector(u), cv = embed_covector(v);
    const double e1 = (gp(eu, ev, t) + gp(ev, eu, t)).max_abs();
    const double e2 = (gp(cu, cv, t) + gp(cv, cu, t)).max_abs();
    const double e3 = (gp(eu, cv, t) + gp(cv, eu, t) - M::scalar(u.dot(v))).max_abs();
    tally.check(e1 <= 1e-12, "u v + v u = 0", e1);
    tally.check(e2 <= 1e-12, "u* v* + v* u* = 0", e2);
    tally.check(e3 <= 1e-12, "u v* + v* u = g(u,v)", e3);
  }
  return finish(1, "algebra axioms", tally);
}

// ---------------------------------------------------------------------------
// 2

CriterionResult theorem_suite(const SuiteOptions& o) {
  Tally tally;
  Rng rng(202);
  const double tol = 1e-9;
  for (int n = 0; n < o.trials; ++n) {
    const Paravectord P = rng.point(-2, 2);
    const Vector3d& p = P.vector;

    {  // reflection
      const Vector3d nn = rng.unit();
      const auto got = apply_sandwich(reflection_versor(nn), P);
      const double e = rel_err(got, {P.weight, oracle::householder(nn) * p});
      tally.check(e <= tol, "reflection vs Householder", e);
    }
    {  // rotation
      const auto [u, v] = rng.frame();
      const double th = rng.uniform(-M_PI, M_PI);
      const Versord R = rotation_versor(u, v, th);
      const Versord Rs{oracle::series_rotor(u, v, th), 1, VersorKind::Rotation};
      const auto got = apply_sandwich(R, P);
      const double e = rel_err(got, apply_sandwich(Rs, P));
      tally.check(e <= tol, "rotation vs series exponential", e);
      const double e2 = rel_err(got, {P.weight, oracle::plane_rotation(u, v, th) * p});
      tally.check(e2 <= tol, "rotation vs plane rotation matrix", e2);
    }
    {  // hyperbolic
      const auto [u, v] = rng.frame();
      const double eta = rng.uniform(-2, 2);
      const double pu = p.dot(u), pv = p.dot(v);
      const Vector3d perp = p - pu * u - pv * v;
      const Vector3d want = u * (pu * std::cosh(eta) + pv * std::sinh(eta)) +
                            v * (pv * std::cosh(eta) + pu * std::sinh(eta)) + perp;
      const double e = rel_err(apply_sandwich(hyperbolic_versor(u, v, eta), P), {P.weight, want});
      tally.check(e <= tol, "hyperbolic rotation formula", e);
    }
    {  // shear
      const auto [u, v] = rng.frame();
      const double t = rng.uniform(-2, 2);
      const double e =
          rel_err(apply_sandwich(shear_versor(u, v, t), P), {P.weight, p + t * p.dot(v) * u});
      tally.check(e <= tol, "shear formula", e);
    }
    {  // scale
      const Vector3d u = rng.unit();
      const double t = rng.uniform(-2, 2);
      const Vector3d par = p.dot(u) * u;
      const double e =
          rel_err(apply_sandwich(scale_versor(u, t), P), {P.weight, p - par + std::exp(t) * par});
      tally.check(e <= tol, "scale formula", e);
    }
    {  // translation: T(w + p)T~ = w + p + w v
      const Vector3d v = rng.vec(2);
      const double e =
          rel_err(apply_sandwich(translation_versor(v), P), {P.weight, p + P.weight * v});
      tally.check(e <= tol, "translation formula", e);
    }
    {  // cotranslation
      const Vector3d v = rng.vec(2);
      const double e = rel_err(apply_cotranslation(v, P), {P.weight + p.dot(v), p});
      tally.check(e <= tol, "cotranslation formula", e);
    }
  }
  return finish(2, "theorem suite (reflection .. cotranslation)", tally);
}

// ---------------------------------------------------------------------------
// 3

CriterionResult hodge_star_suite(const SuiteOptions& o) {
  Tally tally;
  Rng rng(303);
  const auto& tables = HodgeTables<double>::get();
  for (int n = 0; n < o.trials; ++n) {
    Multivectord a;
    for (int b = 0; b < kExteriorDim; ++b) a += rng.uniform() * tables.basis[b];
    const double e = (hodge_star(hodge_star(a)) - a).max_abs();
    tally.check(e <= 1e-12, "star star = id", e);
    const double e2 = (hodge_star(a) - oracle::collected_hodge(a)).max_abs();
    tally.check(e2 <= 1e-12, "star vs collected formula", e2);
  }

  using M = Multivectord;
  const auto& omega = omega_v<double>();
  tally.check((hodge_star(M::scalar(1)) - omega).max_abs() <= 1e-15, "star 1 = Omega_V");

  auto sector = [](int i, int s) {
    return M::blade(s > 0 ? positive_generator(i) : negative_generator(i));
  };
  M e12, e3;
  for (int s1 : {1, -1}) {
    e3 += sector(2, s1);
    for (int s2 : {1, -1}) e12 += sector(0, s1) ^ sector(1, s2);
  }
  const double e = (hodge_star(e12) - 2.0 * e3).max_abs();
  tally.check(e <= 1e-15, "star(sum e1^e2) = 2 sum e3", e);

  for (int n = 0; n < 100; ++n) {
    const Vector3d v = rng.vec(3);
    const M lhs = hodge_star(e12 ^ embed_vector(v));
    const double err = (lhs - M::scalar(4 * v[2])).max_abs();
    tally.check(err <= 1e-14 * std::max(1.0, std::abs(v[2])), "star(sum e1^e2^v) = 4 v3", err);
  }
  return finish(3, "hodge star", tally);
}

// ---------------------------------------------------------------------------
// 4

CriterionResult perspective_suite(const SuiteOptions&) {
  Tally tally;
  Rng rng(404);
  for (int n = 0; n < 100; ++n) {
    Perspective<double> pr;
    do {
      pr.eye = rng.vec(2);
      pr.normal = rng.unit();
      pr.c = rng.uniform(-3, 3);
    } while (std::abs(perspective_offset(pr)) < 0.1);
    // A point on the same side of the eye as the plane, not too close to the
    // plane through the eye parallel to the projection plane.
    Vector3d p;
    double s;
    do {
      p = rng.vec(4);
      const double d = pr.normal.dot(p - pr.eye);
      s = std::abs(d) < 0.05 ? -1 : perspective_offset(pr) / d;
    } while (s <= 0);
    const auto img = perspective_image(pr, Paravectord::affine(p));
    const Vector3d want = oracle::project(oracle::perspective_matrix(pr.eye, pr.normal, pr.c), p);
    const double e = rel_err3(img.point.vector, want);
    tally.check(!img.at_infinity && img.point.weight == 1 && e <= 1e-9, "perspective vs matrix", e);
    tally.check(std::abs(img.point.vector.dot(pr.normal) - pr.c) <= 1e-9 * std::max(1.0, std::abs(pr.c)),
                "image on plane");
  }
  for (int n = 0; n < 100; ++n) {
    Perspective<double> pr{rng.vec(2), rng.unit(), 0};
    pr.c = pr.normal.dot(pr.eye);
    bool raised = false;
    try {
      (void)perspective_project(pr, Paravectord::affine(rng.vec()));
    } catch (const DegenerateConfiguration&) {
      raised = true;
    }
    tally.check(raised, "a = 0 raises DegenerateConfiguration");
  }
  for (int n = 0; n < 100; ++n) {
    const Vector3d nn = rng.unit();
    const auto img = pseudo_perspective(nn, Paravectord(1, -nn));
    const double e = std::max(std::abs(img.weight), (img.vector + nn).cwiseAbs().maxCoeff());
    tally.check(e <= 1e-15, "pseudo-perspective eye to direction -n", e);

    Vector3d p;
    do p = rng.vec(2); while (1 + nn.dot(p) < 0.1);
    const auto q = normalize_point(pseudo_perspective(nn, Paravectord::affine(p)));
    const Vector3d want = oracle::project(oracle::pseudo_perspective_matrix(nn), p);
    const double e2 = rel_err3(q.point.vector, want);
    tally.check(e2 <= 1e-9, "pseudo-perspective vs matrix", e2);
  }
  return finish(4, "perspective and pseudo-perspective", tally);
}

// ---------------------------------------------------------------------------
// 5

CriterionResult hodge_equivalence_suite(const SuiteOptions&) {
  Tally equivalence, lambdas;
  Rng rng(505);
  std::string lambda_note;
  const char* names[] = {"N", "R", "H", "S", "D"};
  for (int row = 0; row < 5; ++row) {
    const auto [u, v] = rng.frame();
    const double t = rng.uniform(0.2, 1.5) * (rng.uniform() < 0 ? -1 : 1);
    Versord V;
    double tabulated = 1;
    switch (row) {
      case 0: V = reflection_versor(u); break;
      case 1: V = rotation_versor(u, v, t); break;
      case 2: V = hyperbolic_versor(u, v, t); break;
      case 3: V = shear_versor(u, v, t); break;
      case 4:
        V = scale_versor(u, t);
        tabulated = std::exp(-t / 2);
        break;
    }
    const HodgeVersord H = hodge_conjugate_versor(V);
    for (int n = 0; n < 100; ++n) {
      const Paravectord P = rng.point(-2, 2);
      const double e = rel_err(apply_hodge_sandwich(H, P), apply_sandwich(V, P));
      equivalence.check(e <= 1e-9, std::string(names[row]) + " sandwich = hodge sandwich", e);
    }
    const double le = std::abs(H.lambda - tabulated);
    if (!lambdas.check(le <= 1e-9, std::string(names[row]) + " lambda", le)) {
      lambda_note = std::string(names[row]) + ": lambda = " + fmt(H.lambda) + " (t = " + fmt(t) +
                    ", e^{t/2} = " + fmt(std::exp(t / 2)) + "), tabulated " + fmt(tabulated);
    }
  }
  Tally all = equivalence;
  all.checks += lambdas.checks;
  all.failures += lambdas.failures;
  std::string detail = "equivalence " + std::string(equivalence.ok() ? "holds" : "FAILS") +
                       " on all rows (worst " + fmt(equivalence.worst) + "); lambda table " +
                       (lambdas.ok() ? "matches" : "does not match: " + lambda_note);
  CriterionResult r = finish(5, "hodge equivalence table", all, detail);
  if (!all.ok() && equivalence.ok()) r.detail = detail;
  return r;
}

// ---------------------------------------------------------------------------
// 6

CriterionResult translation_incompatibility_suite(const SuiteOptions&) {
  Tally tally;
  Rng rng(606);
  double least = 1e300;
  for (int n = 0; n < 100; ++n) {
    Vector3d v;
    do v = rng.vec(2); while (v.norm() < 1e-2);
    double residual = 0;
    bool raised = false;
    try {
      (void)hodge_conjugate_versor(translation_versor(v));
    } catch (const NotHodgeCompatible& e) {
      raised = true;
      residual = e.residual();
    }
    least = std::min(least, residual);
    tally.check(raised && residual > 1e-6, "translation rejected with residual > 1e-6");
  }
  return finish(6, "translation is not Hodge compatible", tally,
                "smallest hodge-condition residual " + fmt(least));
}

// ---------------------------------------------------------------------------
// 7

CriterionResult classification_suite(const SuiteOptions&) {
  Tally tally;
  double appendix_worst = 0;
  for (const auto& e : appendix_fixtures()) {
    appendix_worst = std::max(appendix_worst, e.residual / e.scale);
    tally.check(e.ok, "composed example " + std::to_string(e.example) + " eps " + fmt(e.eps) +
                          " eta " + fmt(e.eta) + " residual " + fmt(e.residual));
  }
  Rng rng(707);
  double least_reject = 1e300;
  auto expect = [&](int k, const Multivectord& psi, Verdict want, const std::string& what) {
    const Classification c = classify_infinitesimal(k, psi);
    if (want == Verdict::Reject) least_reject = std::min(least_reject, c.residual);
    tally.check(c.verdict == want, what + " got " + to_string(c.verdict) + " residual " + fmt(c.residual));
  };
  for (int n = 0; n < 20; ++n) {
    for (int k = 3; k <= 6; ++k) expect(k, rng.of_grade(k), Verdict::Reject, "grade " + std::to_string(k));
    expect(2, embed_covector(rng.vec()) ^ embed_covector(rng.vec()), Verdict::Reject, "e*^e*");
    expect(0, Multivectord::scalar(rng.uniform(0.1, 1)), Verdict::Accept, "grade 0");
    expect(1, embed_vector(rng.vec()), Verdict::Accept, "grade 1 vector");
    expect(2, embed_vector(rng.vec()) ^ embed_covector(rng.vec()), Verdict::Accept, "a^b*");
  }
  expect(2, basis_vector<double>(0) ^ basis_vector<double>(1), Verdict::AcceptNull, "e1^e2");
  return finish(7, "paravector conditions and classification", tally,
                "composed examples worst residual/scale " + fmt(appendix_worst) + ", smallest rejected residual " +
                    fmt(least_reject));
}

// ---------------------------------------------------------------------------
// 8

namespace {

const std::vector<std::string>& probe_pipelines() {
  static const std::vector<std::string> p = {
      "",
      "reflect n=(0,0.6,0.8)",
      "rotate u=(1,0,0) v=(0,1,0) theta=0.7",
      "hrotate u=(0,1,0) v=(0,0,1) eta=-0.4",
      "shear u=(1,0,0) v=(0,0,2) t=1.5",
      "scale u=(0,0,1) t=0.3",
      "translate v=(1,2,3)",
      "cotranslate v=(0.5,-0.25,0.1)",
      "pseudo n=(0,0,1)",
      "perspective eye=(0,0,0) n=(0,0,1) c=1",
      "perspective eye=(1,-2,0.5) n=(0.6,0,0.8) c=3",
      "rotate u=(0,1,0) v=(0,0,1) theta=1.1\ntranslate v=(-1,0.5,2)\ncotranslate v=(0.1,0.2,0.3)\n"
      "scale u=(1,0,0) t=-0.5\nreflect n=(1,0,0)",
      "translate v=(0,0,-2)\nperspective eye=(0,0,0) n=(0,0,1) c=1\ntranslate v=(1,1,0)",
  };
  return p;
}

}  // namespace

CriterionResult matrix_suite(const SuiteOptions& o) {
  Tally tally;
  Rng rng(808);
  const double eps = 1e-4;
  const Tolerance loose{1e-6, 0};
  double worst_affine = 0, worst_cot = 0;
  for (int n = 0; n < 100; ++n) {
    const Vector3d v = rng.vec(), a = rng.vec(), b = rng.vec();
    const Multivectord psi = first_order_psi(v, a, b, eps);
    const Matrix4d A = affine_matrix(v, a, b, eps);
    const Matrix4d C = cotranslation_matrix(v, a, b, eps);
    for (const auto& p : probe_points()) {
      const Paravectord P = Paravectord::affine(p);
      const auto x = to_homogeneous(P);
      const auto direct = extract_paravector(psi * embed_paravector(P) * reversion(psi), loose);
      const double ea = (to_homogeneous(direct) - A * x).cwiseAbs().maxCoeff();
      worst_affine = std::max(worst_affine, ea);
      tally.check(ea <= 1e-6, "affine matrix vs sandwich", ea);
      const auto star_img =
          hodge_star_inverse(psi * hodge_star(embed_paravector(P)) * reversion(psi), loose);
      const double ec = (to_homogeneous(extract_paravector(star_img, loose)) - C * x).cwiseAbs().maxCoeff();
      worst_cot = std::max(worst_cot, ec);
      tally.check(ec <= 1e-6, "cotranslation matrix vs hodge sandwich", ec);
    }
  }

  for (const auto& text : probe_pipelines()) {
    const Transformd t = pipeline::build_transform(pipeline::parse_pipeline(text));
    const Matrix4d M = projective_matrix_probe(t);
    double worst = 0;
    for (int n = 0; n < o.trials; ++n) {
      const Paravectord P = rng.point(-2, 2);
      worst = std::max(worst, rel_err(to_homogeneous(apply(t, P)), M * to_homogeneous(P)));
    }
    tally.check(worst <= 1e-9, "matrix probe for pipeline '" + text + "'", worst);
  }
  return finish(8, "first-order matrices and matrix extraction", tally,
                "affine deviation " + fmt(worst_affine) + ", cotranslation deviation " + fmt(worst_cot) +
                    ", pipelines " + std::to_string(probe_pipelines().size()));
}

// ---------------------------------------------------------------------------
// 9

CriterionResult sector_suite(const SuiteOptions&) {
  Tally tally;
  Rng rng(909);
  double worst_preserve = 0, least_mix = 1e300;
  for (int n = 0; n < 20; ++n) {
    const auto [u, v] = rng.frame();
    const double t = rng.uniform(0.3, 1.5);
    for (const Versord& V : {reflection_versor(u), rotation_versor(u, v, t)}) {
      const auto s = sector_image(V);
      worst_preserve = std::max({worst_preserve, s.positive_off_sector, s.negative_off_sector});
      tally.check(s.preserves_positive && s.preserves_negative,
                  std::string(to_string(V.kind)) + " preserves sectors");
    }
    for (const Versord& V : {hyperbolic_versor(u, v, t), shear_versor(u, v, t), scale_versor(u, t),
                             translation_versor(rng.vec())}) {
      const auto s = sector_image(V);
      const double m = std::min(s.positive_off_sector, s.negative_off_sector);
      least_mix = std::min(least_mix, m);
      tally.check(m > 1e-6, std::string(to_string(V.kind)) + " mixes sectors");
    }
  }
  return finish(9, "sector behaviour", tally,
                "N,R worst off-sector " + fmt(worst_preserve) + "; H,S,D,T least off-sector " +
                    fmt(least_mix));
}

// ---------------------------------------------------------------------------
// 10

namespace {

std::string points_text(Rng& rng, int count) {
  std::ostringstream s;
  for (int i = 0; i < count; ++i) s << pipeline::format_point(rng.point(0.5, 2)) << '\n';
  return s.str();
}

std::vector<Vector4<double>> read_rows(const std::string& text, int width) {
  std::vector<Vector4<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Vector4<double> r = Vector4<double>::Zero();
    for (int i = 0; i < width; ++i) ls >> r[i];
    if (ls) rows.push_back(r);
  }
  return rows;
}

}  // namespace

CriterionResult cli_suite(const SuiteOptions& o) {
  Tally tally;
  const std::string dir = o.fixtures_dir.empty() ? default_fixtures_dir() : o.fixtures_dir;
  std::ifstream manifest(dir + "/exit_codes.txt");
  if (!manifest) {
    tally.check(false, "cannot open " + dir + "/exit_codes.txt");
    return finish(10, "command line", tally);
  }
  Rng rng(1010);
  const std::string pts = points_text(rng, o.trials);
  const auto originals = pipeline::parse_points(pts);
  std::ostringstream sink;

  // Exit codes.
  std::string line;
  int codes = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string cmd, pipe_file, points_file;
    int want = -1;
    ls >> cmd >> pipe_file >> points_file >> want;
    const std::string pipe_text = cli::read_file(dir + "/" + pipe_file);
    int got = -1;
    if (cmd == "apply") {
      got = cli::run_apply(pipe_text, cli::read_file(dir + "/" + points_file), cli::WeightMode::Keep,
                           sink, sink);
    } else if (cmd == "matrix") {
      got = cli::run_matrix(pipe_text, sink, sink);
    } else if (cmd == "check") {
      got = cli::run_check(pipe_text, sink, sink);
    }
    ++codes;
    tally.check(got == want, cmd + " " + pipe_file + " exit " + std::to_string(got) + ", expected " +
                                 std::to_string(want));
  }

  // Round trips and matrix agreement on the invertible fixtures.
  double worst_round = 0, worst_matrix = 0;
  for (const char* name : {"roundtrip_a.pipe", "roundtrip_b.pipe", "perspective.pipe"}) {
    const std::string text = cli::read_file(dir + "/" + name);
    const auto parsed = pipeline::parse_pipeline(text);
    tally.check(pipeline::parse_pipeline(pipeline::format_pipeline(parsed)) == parsed,
                std::string("format/parse round trip ") + name);

    std::ostringstream fwd, err;
    tally.check(cli::run_apply(text, pts, cli::WeightMode::Keep, fwd, err) == 0,
                std::string("apply ") + name + ": " + err.str());
    const auto images = pipeline::parse_points(fwd.str());

    std::ostringstream mat;
    tally.check(cli::run_matrix(text, mat, err) == 0, std::string("matrix ") + name);
    const auto rows = read_rows(mat.str(), 4);
    Matrix4d M = Matrix4d::Zero();
    for (int r = 0; r < 4 && r < static_cast<int>(rows.size()); ++r) M.row(r) = rows[r].transpose();
    double wm = 0;
    for (std::size_t i = 0; i < originals.size() && i < images.size(); ++i) {
      wm = std::max(wm, rel_err(to_homogeneous(images[i]), M * to_homogeneous(originals[i])));
    }
    worst_matrix = std::max(worst_matrix, wm);
    tally.check(images.size() == originals.size() && wm <= 1e-9,
                std::string("matrix vs apply ") + name, wm);

    if (std::string(name) == "perspective.pipe") continue;  // not invertible
    std::ostringstream back;
    const std::string inv = pipeline::format_pipeline(pipeline::inverse_pipeline(parsed));
    tally.check(cli::run_apply(inv, fwd.str(), cli::WeightMode::Keep, back, err) == 0,
                std::string("apply inverse ") + name);
    const auto restored = pipeline::parse_points(back.str());
    double wr = 0;
    for (std::size_t i = 0; i < originals.size() && i < restored.size(); ++i) {
      wr = std::max(wr, rel_err(restored[i], originals[i]));
    }
    worst_round = std::max(worst_round, wr);
    tally.check(restored.size() == originals.size() && wr <= 1e-9,
                std::string("pipeline + inverse ") + name, wr);
  }
  return finish(10, "command line", tally,
                std::to_string(codes) + " exit-code fixtures, round trip " + fmt(worst_round) +
                    ", matrix vs apply " + fmt(worst_matrix));
}

// ---------------------------------------------------------------------------

CriterionResult run_criterion(int id, const SuiteOptions& o) {
  using Fn = CriterionResult (*)(const SuiteOptions&);
  static const Fn fns[kCriterionCount] = {
      algebra_axioms,          theorem_suite,         hodge_star_suite,
      perspective_suite,       hodge_equivalence_suite, translation_incompatibility_suite,
      classification_suite,    matrix_suite,          sector_suite,
      cli_suite};
  if (id < 1 || id > kCriterionCount) throw DomainError("no criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = fns[id - 1](o);
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.pass = false;
    r.detail = std::string("unexpected exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(const SuiteOptions& o) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, o));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " (" << r.checks
    << " checks, " << std::fixed << std::setprecision(2) << r.seconds << " s): " << r.detail;
  return s.str();
}

}  // namespace cl33::verify
