#include "helpers.hpp"

using namespace testing;
using M = Multivectord;

namespace {

const Vector3d X(1, 0, 0), Y(0, 1, 0), Z(0, 0, 1);

Paravectord pt(double x, double y, double z) { return Paravectord::affine(Vector3d(x, y, z)); }

Paravectord random_point() { return {uniform(-2, 2), random_vec(2)}; }

// 3x3 action of a weight-preserving versor.
Eigen::Matrix3d linear_part(const Versord& v) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) m.col(i) = apply_sandwich(v, Paravectord(0, Vector3d::Unit(i))).vector;
  return m;
}

}  // namespace

TEST_CASE("reflection") {
  CHECK(dist(apply_sandwich(reflection_versor(Z), pt(0, 0, 1)), pt(0, 0, -1)) < 1e-15);
  CHECK(dist(apply_sandwich(reflection_versor(Z), pt(1, 0, 0)), pt(1, 0, 0)) < 1e-15);
  CHECK(reflection_versor(Z).epsilon == -1);
  // The weight part alone: -N 1 N~ = 1.
  const Versord N = reflection_versor(random_unit());
  CHECK(dist(-1.0 * sandwich(Versord{N.U, 1, VersorKind::Reflection}, M::scalar(1)), M::scalar(1)) < 1e-15);
  CHECK_THROWS_AS(reflection_versor(Vector3d(1, 1, 0)), DomainError);
}

TEST_CASE("rotation") {
  const double th = 0.83;
  CHECK(dist(apply_sandwich(rotation_versor(X, Y, th), pt(0, 0, 1)), pt(0, 0, 1)) < 1e-15);
  const Paravectord p = random_point();
  CHECK(dist(apply_sandwich(rotation_versor(X, Y, 0.0), p), p) < 1e-15);
  CHECK(dist(apply_sandwich(rotation_versor(X, Y, M_PI), pt(1, 0, 0)), pt(-1, 0, 0)) < 1e-15);
  CHECK_THROWS_AS(rotation_versor(X, X, 1.0), DomainError);
  CHECK_THROWS_AS(rotation_versor(X, Vector3d(0, 2, 0), 1.0), DomainError);
}

TEST_CASE("hyperbolic rotation") {
  const double eta = 0.6;
  CHECK(dist(apply_sandwich(hyperbolic_versor(X, Y, eta), pt(1, 0, 0)),
             pt(std::cosh(eta), std::sinh(eta), 0)) < 1e-15);
  CHECK(dist(apply_sandwich(hyperbolic_versor(X, Y, eta), pt(0, 0, 1)), pt(0, 0, 1)) < 1e-15);
  const Paravectord p = random_point();
  CHECK(dist(apply_sandwich(hyperbolic_versor(X, Y, 0.0), p), p) < 1e-15);
}

TEST_CASE("shear") {
  CHECK(dist(apply_sandwich(shear_versor(X, Y, 2.0), pt(0, 1, 0)), pt(2, 1, 0)) < 1e-15);
  CHECK(dist(apply_sandwich(shear_versor(X, Y, 2.0), pt(0, 0, 1)), pt(0, 0, 1)) < 1e-15);
  const Paravectord p = random_point();
  CHECK(dist(apply_sandwich(shear_versor(X, Y, 0.0), p), p) < 1e-15);
}

TEST_CASE("scale") {
  CHECK(dist(apply_sandwich(scale_versor(X, std::log(2.0)), pt(1, 1, 0)), pt(2, 1, 0)) < 1e-15);
  const Paravectord p = random_point();
  CHECK(dist(apply_sandwich(scale_versor(X, 0.0), p), p) < 1e-15);
  CHECK(dist(apply_sandwich(scale_versor(X, 1.3), pt(0, 2, -1)), pt(0, 2, -1)) < 1e-15);
}

TEST_CASE("translation") {
  CHECK(dist(apply_sandwich(translation_versor(Vector3d(1, 2, 3)), pt(0, 0, 0)), pt(1, 2, 3)) < 1e-15);
  const Paravectord p = random_point();
  CHECK(dist(apply_sandwich(translation_versor(Vector3d(0, 0, 0)), p), p) == 0);
  const Vector3d v = random_vec(3);
  const M T = exponential(0.5 * embed_vector(v));
  CHECK(dist(T * T, 1.0 + embed_vector(v)) < 1e-15);
}

TEST_CASE("cotranslation") {
  CHECK(dist(apply_cotranslation(Vector3d(2, 0, 0), pt(1, 0, 0)), Paravectord(3, X)) < 1e-15);
  const Paravectord p = random_point();
  CHECK(dist(apply_cotranslation(Vector3d(0, 0, 0), p), p) < 1e-15);
  const double t = 0.4;
  CHECK(dist(hodge_star(embed_paravector(Paravectord(1, t * X))), omega_v<double>() + t * (e(1) ^ e(2))) < 1e-15);
}

TEST_CASE("versor normalization") {
  for (int n = 0; n < 100; ++n) {
    const auto [u, v] = random_frame();
    const double t = uniform(-2, 2);
    for (const Versord& V : {reflection_versor(u), rotation_versor(u, v, t), hyperbolic_versor(u, v, t),
                             shear_versor(u, v, t), scale_versor(u, t)}) {
      CHECK(dist(V.epsilon * (V.U * reversion(V.U)), M::scalar(1)) < 1e-13);
    }
    // T is not unit: T T~ = 1 + v. The sandwich still works because v^2 = 0.
    const Vector3d w = random_vec();
    const M T = translation_versor(w).U;
    CHECK(dist(T * reversion(T), 1.0 + embed_vector(w)) < 1e-15);
  }
}

TEST_CASE("closed forms equal series exponentials") {
  for (int n = 0; n < 100; ++n) {
    const auto [u, v] = random_frame();
    const double t = uniform(-2, 2);
    CHECK(dist(rotation_versor(u, v, t).U, oracle::series_rotor(u, v, t)) < 1e-13);
    CHECK(dist(hyperbolic_versor(u, v, t).U, oracle::series_hyperbolic(u, v, t)) < 1e-13);
    CHECK(dist(shear_versor(u, v, t).U, oracle::series_shear(u, v, t)) < 1e-13);
    CHECK(dist(scale_versor(u, t).U, oracle::series_scale(u, t)) < 1e-13);
    const Vector3d w = random_vec(2);
    CHECK(dist(translation_versor(w).U, oracle::series_translation(w)) < 1e-13);
  }
}

TEST_CASE("invariants") {
  for (int n = 0; n < 200; ++n) {
    const auto [u, v] = random_frame();
    const double t = uniform(-2, 2);
    const Paravectord P = random_point();
    const Vector3d& p = P.vector;
    const auto R = apply_sandwich(rotation_versor(u, v, t), P);
    const auto H = apply_sandwich(hyperbolic_versor(u, v, t), P);
    const auto S = apply_sandwich(shear_versor(u, v, t), P);
    const auto D = apply_sandwich(scale_versor(u, t), P);
    for (const auto& q : {R, H, S, D}) CHECK(q.weight == doctest::Approx(P.weight).epsilon(1e-12));
    CHECK(R.vector.norm() == doctest::Approx(p.norm()).epsilon(1e-12));
    const double before = p.dot(u) * p.dot(u) - p.dot(v) * p.dot(v);
    const double after = H.vector.dot(u) * H.vector.dot(u) - H.vector.dot(v) * H.vector.dot(v);
    CHECK(std::abs(after - before) < 1e-10 * std::max(1.0, std::cosh(2 * t) * p.squaredNorm()));
    CHECK(S.vector.dot(v) == doctest::Approx(p.dot(v)).epsilon(1e-12));
    const Vector3d perp = p - p.dot(u) * u;
    CHECK((D.vector - D.vector.dot(u) * u - perp).norm() < 1e-12);
  }
}

TEST_CASE("even versors do not mix grades") {
  for (int n = 0; n < 50; ++n) {
    const auto [u, v] = random_frame();
    const double t = uniform(-2, 2);
    const M p = embed_vector(random_vec());
    for (const Versord& V : {rotation_versor(u, v, t), hyperbolic_versor(u, v, t), shear_versor(u, v, t),
                             scale_versor(u, t)}) {
      CHECK(grade_project(V.U * p * reversion(V.U), 0).max_abs() < 1e-14);
      CHECK(grade_project(V.U * reversion(V.U), 1).max_abs() < 1e-14);
    }
  }
}

TEST_CASE("two reflections make a rotation by twice the angle") {
  for (int n = 0; n < 50; ++n) {
    const Vector3d n1 = random_unit(), n2 = random_unit();
    const Versord V = compose_versors(reflection_versor(n1), reflection_versor(n2));
    CHECK(V.epsilon == 1);
    Vector3d w = n2 - n2.dot(n1) * n1;
    w.normalize();
    const double phi = std::atan2(n2.dot(w), n2.dot(n1));
    const Eigen::Matrix3d want = oracle::plane_rotation(n1, w, -2 * phi);
    CHECK((linear_part(V) - want).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((linear_part(V) - linear_part(rotation_versor(n1, w, -2 * phi))).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hodge conjugates") {
  const auto [u, v] = random_frame();
  const double t = 0.7;
  const Versord N = reflection_versor(u);
  const HodgeVersord hn = hodge_conjugate_versor(N);
  CHECK(dist(hn.Uprime, -N.U) < 1e-15);
  CHECK(hn.lambda == doctest::Approx(1));
  CHECK(dist(star_conjugate(shear_versor(u, v, t).U), shear_versor(v, u, -t).U) < 1e-15);
  CHECK(dist(star_conjugate(rotation_versor(u, v, t).U), rotation_versor(u, v, t).U) < 1e-15);
  CHECK(dist(star_conjugate(hyperbolic_versor(u, v, t).U), hyperbolic_versor(u, v, -t).U) < 1e-15);

  // rev(U*) Omega U* = lambda^2 Omega forces lambda^2 = e^t for the scale versor.
  const HodgeVersord hd = hodge_conjugate_versor(scale_versor(u, t));
  CHECK(hd.lambda == doctest::Approx(std::exp(t / 2)));
  CHECK(dist(hd.Uprime, std::exp(t / 2) * scale_versor(u, -t).U) < 1e-14);

  CHECK_THROWS_AS(hodge_conjugate_versor(translation_versor(Vector3d(1, 0, 0))), NotHodgeCompatible);
}

TEST_CASE("hodge form agrees with the sandwich") {
  const auto [u, v] = random_frame();
  for (const Versord& V : {reflection_versor(u), rotation_versor(u, v, 1.1), hyperbolic_versor(u, v, -0.5),
                           shear_versor(u, v, 0.8), scale_versor(u, 0.9)}) {
    const HodgeVersord H = hodge_conjugate_versor(V);
    for (int n = 0; n < 10; ++n) {
      const Paravectord P = random_point();
      CHECK(dist(apply_hodge_sandwich(H, P), apply_sandwich(V, P)) < 1e-13);
    }
  }
}

TEST_CASE("perspective") {
  const Perspective<double> pr{Vector3d::Zero(), Z, 1.0};
  const auto raw = perspective_project(pr, pt(2, 4, 2));
  CHECK(raw.weight == doctest::Approx(2));
  CHECK(dist(perspective_image(pr, pt(2, 4, 2)).point, pt(1, 2, 1)) < 1e-15);
  CHECK(dist(perspective_image(pr, pt(3, -1, 1)).point, pt(3, -1, 1)) < 1e-15);
  // Same projection through the eye-paravector overload.
  CHECK(dist(perspective_project(Paravectord::affine(Vector3d::Zero()), Z, 1.0, pt(2, 4, 2)), raw) < 1e-15);
  // Eye on the plane.
  CHECK_THROWS_AS(perspective_project(Perspective<double>{Vector3d(0, 0, 1), Z, 1.0}, pt(1, 1, 1)),
                  DegenerateConfiguration);
  CHECK_THROWS_AS(perspective_project(Perspective<double>{Vector3d::Zero(), Vector3d::Zero(), 1.0}, pt(1, 1, 1)),
                  DomainError);
  // Behind the eye the weight is negative; the image still lies on the plane.
  const auto behind = perspective_image(pr, pt(1, 1, -2));
  CHECK(behind.point.vector.z() == doctest::Approx(1));
}

TEST_CASE("pseudo-perspective") {
  CHECK(dist(pseudo_perspective(Z, pt(0, 0, -1)), Paravectord(0, Vector3d(0, 0, -1))) < 1e-15);
  const Vector3d p = random_vec(2);
  CHECK(dist(pseudo_perspective(Z, Paravectord::affine(p)), Paravectord(1 + p.z(), p)) < 1e-15);
  CHECK(dist(normalize_point(pseudo_perspective(Z, pt(1, 1, 1))).point, pt(0.5, 0.5, 0.5)) < 1e-15);
  CHECK_THROWS_AS(pseudo_perspective(Vector3d(0, 0, 2), pt(1, 1, 1)), DomainError);
}

TEST_CASE("composition") {
  const Vector3d v1(1, 0, 2), v2(0, -1, 1);
  const Transformd t = compose<double>({translation_versor(v1), translation_versor(v2)});
  REQUIRE(t.stages.size() == 1);
  const auto& V = std::get<Versord>(t.stages[0]);
  CHECK(V.kind == VersorKind::Translation);
  CHECK(dist(V.U, oracle::series_translation(v2) * oracle::series_translation(v1)) < 1e-15);

  const Transformd mixed = compose<double>({rotation_versor(X, Y, 0.3), Cotranslation<double>{v1}});
  CHECK(mixed.stages.size() == 2);
  CHECK(compose<double>({}).is_identity());
  const Paravectord p = random_point();
  CHECK(dist(apply(compose<double>({}), p), p) == 0);

  const Transformd co = compose<double>({Cotranslation<double>{v1}, Cotranslation<double>{v2}});
  REQUIRE(co.stages.size() == 1);
  CHECK(dist(apply(co, p), apply_cotranslation(Vector3d(v1 + v2), p)) < 1e-14);
}

TEST_CASE("sectors") {
  const auto [u, v] = random_frame();
  for (const Versord& V : {reflection_versor(u), rotation_versor(u, v, 0.4), Versord::identity()}) {
    const auto s = sector_image(V);
    CHECK(s.preserves_positive);
    CHECK(s.preserves_negative);
  }
  for (const Versord& V : {hyperbolic_versor(u, v, 0.4), shear_versor(u, v, 0.4), scale_versor(u, 0.4),
                           translation_versor(v)}) {
    const auto s = sector_image(V);
    CHECK_FALSE(s.preserves_positive);
    CHECK_FALSE(s.preserves_negative);
  }
}
