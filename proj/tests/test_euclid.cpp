#include "helpers.hpp"

using namespace testing;
using M = Multivectord;

TEST_CASE("embedding") {
  CHECK(dist(embed_vector(Vector3d(1, 0, 0)), 0.5 * (ep(0) + em(0))) == 0);
  CHECK(dist(embed_vector(Vector3d(0, 0, 0)), M()) == 0);
  const M v = embed_vector(Vector3d(3, -2, 5));
  CHECK(dist(v * v, M()) == 0);
}

TEST_CASE("pseudoscalars") {
  const auto& u = PseudoUnits<double>::get();
  CHECK(dist(u.i_plus * u.i_plus, M::scalar(-1)) == 0);
  CHECK(dist(u.i_minus * u.i_minus, M::scalar(1)) == 0);
  for (int n = 0; n < 1000; ++n) {
    const M v = embed_vector(random_vec());
    CHECK(dist(u.i_full * v, -(v * u.i_full)) < 1e-15);
  }
}

TEST_CASE("star conjugate") {
  const auto& u = PseudoUnits<double>::get();
  CHECK(dist(star_conjugate(e(0)), basis_covector<double>(0)) == 0);
  // I- is its own inverse.
  CHECK(dist(u.i_minus * e(0) * u.i_minus, -basis_covector<double>(0)) == 0);
  CHECK(dist(star_conjugate(M::scalar(1)), M::scalar(1)) == 0);
  for (int n = 0; n < 100; ++n) {
    const M v = embed_vector(random_vec());
    CHECK(dist(star_conjugate(star_conjugate(v)), v) < 1e-15);
  }
}

TEST_CASE("omega_v") {
  const M& omega = omega_v<double>();
  for (int i = 0; i < 3; ++i) {
    CHECK(dist(e(i) * omega, M()) == 0);
    CHECK(dist(omega * e(i), M()) == 0);
  }
  for (unsigned b = 0; b < kBladeCount; ++b) {
    const bool term = std::popcount(b) == 3 && ((b | (b >> 3)) & 7u) == 7u;
    CHECK(std::abs(omega.coeffs()[b]) == doctest::Approx(term ? 0.125 : 0.0));
  }
}

TEST_CASE("paravector round trip") {
  const M a = embed_paravector(Paravectord(1, Vector3d(2, 0, 0)));
  CHECK(dist(a, 1.0 + ep(0) + em(0)) == 0);
  CHECK_THROWS_AS(extract_paravector(1.0 + basis_covector<double>(0)), CovectorResidue);
  CHECK_THROWS_AS(extract_paravector(1.0 + (e(0) ^ e(1))), NonParavectorResidue);
  const Paravectord p(2, Vector3d(1, 1, 1));
  CHECK(extract_paravector(embed_paravector(p)) == p);
  for (int n = 0; n < 1000; ++n) {
    const Paravectord q(uniform(-3, 3), random_vec(5));
    CHECK(dist(extract_paravector(embed_paravector(q)), q) == 0);
  }
}

TEST_CASE("normalization") {
  auto n = normalize_point(Paravectord(3, Vector3d(3, 6, 9)));
  CHECK(n.point == Paravectord(1, Vector3d(1, 2, 3)));
  CHECK_FALSE(n.at_infinity);
  const Paravectord p(1, Vector3d(0.1, 0.2, 0.3));
  CHECK(normalize_point(p).point == p);
  n = normalize_point(Paravectord(0, Vector3d(0, 0, -1)));
  CHECK(n.at_infinity);
  CHECK(n.point.vector == Vector3d(0, 0, -1));
  CHECK(normalize_point(Paravectord(-2, Vector3d(2, 0, 0))).point == Paravectord(-1, Vector3d(1, 0, 0)));
  CHECK(dehomogenize(Paravectord(-2, Vector3d(2, 0, 0))) == Paravectord(1, Vector3d(-1, 0, 0)));
}

TEST_CASE("paravector difference") {
  const Vector3d p(1, 2, 3), q(-1, 0, 4);
  CHECK(paravector_sub(Paravectord::affine(p), Paravectord::affine(q)) == Paravectord(0, p - q));
  CHECK(paravector_sub(Paravectord::affine(p), Paravectord::affine(p)) == Paravectord(0, Vector3d::Zero()));
  CHECK(paravector_sub(Paravectord(2, p), Paravectord(1, q)) == Paravectord(1, p - q));
}
