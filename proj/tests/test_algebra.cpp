#include "helpers.hpp"

using namespace testing;
using M = Multivectord;

TEST_CASE("blade products") {
  auto p = blade_geometric_product(positive_generator(0), positive_generator(0), kSignature33);
  CHECK(p.sign == 1);
  CHECK(p.blade.value == 0u);
  p = blade_geometric_product(negative_generator(0), negative_generator(0), kSignature33);
  CHECK(p.sign == -1);
  CHECK(p.blade.value == 0u);
  p = blade_geometric_product(positive_generator(1), positive_generator(0), kSignature33);
  CHECK(p.sign == -1);
  CHECK(p.blade.value == 0b11u);
}

TEST_CASE("table agrees with sorted factor lists") {
  for (unsigned a = 0; a < kBladeCount; ++a) {
    for (unsigned b = 0; b < kBladeCount; ++b) {
      const auto [sign, mask] = oracle::naive_blade_product(a, b, kSignature33);
      CHECK(kCayley33.sign(a, b) == sign);
      CHECK((a ^ b) == mask);
    }
  }
}

TEST_CASE("geometric product examples") {
  CHECK(dist(e(0) * e(0), M()) == 0);
  const M v = e(0), vs = basis_covector<double>(0);
  CHECK(dist(v * vs + vs * v, M::scalar(1)) == 0);
  const M a = random_mv();
  CHECK(dist(M::scalar(1) * a, a) == 0);
}

TEST_CASE("grade projection") {
  const M b = ep(0) * ep(1);
  CHECK(dist(grade_project(1.0 + b, 2), b) == 0);
  CHECK(dist(grade_project(ep(0), 0), M()) == 0);
  CHECK(dist(grade_project(e(0) * e(0), 0), M()) == 0);
  CHECK_THROWS_AS(grade_project(b, 7), DomainError);
}

TEST_CASE("vector contraction") {
  CHECK(dist(vector_contract(basis_covector<double>(0), e(0)), M::scalar(0.5)) < 1e-15);
  CHECK(dist(vector_contract(e(0), e(1)), M()) == 0);
  CHECK(dist(vector_contract(ep(0), ep(0) ^ ep(1)), ep(1)) == 0);
}

TEST_CASE("outer product") {
  const M& omega = omega_v<double>();
  CHECK(dist(e(0) ^ e(1) ^ e(2), omega) < 1e-15);
  M sum;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        sum += (s1 > 0 ? ep(0) : em(0)) * (s2 > 0 ? ep(1) : em(1)) * (s3 > 0 ? ep(2) : em(2));
  CHECK(dist(omega, sum / 8.0) < 1e-15);
  CHECK(dist(e(0) ^ e(0), M()) == 0);
  const M quarter = 0.25 * ((ep(0) ^ ep(1)) + (em(0) ^ em(1)) + (ep(0) ^ em(1)) + (em(0) ^ ep(1)));
  CHECK(dist(e(0) ^ e(1), quarter) == 0);
}

TEST_CASE("involutions") {
  const M b = ep(0) * ep(1);
  CHECK(dist(reversion(b), -b) == 0);
  CHECK(dist(grade_involution(M::scalar(3)), M::scalar(3)) == 0);
  const M para = 1.0 + e(0);
  CHECK(dist(reversion(para), para) == 0);
  for (int n = 0; n < 200; ++n) {
    const M a = random_mv(), c = random_mv();
    CHECK(dist(reversion(a * c), reversion(c) * reversion(a)) < 1e-12);
    CHECK(dist(grade_involution(a * c), grade_involution(a) * grade_involution(c)) < 1e-12);
    CHECK(dist(conjugation(a), reversion(grade_involution(a))) == 0);
  }
}

TEST_CASE("inner and outer parts of a vector product") {
  for (int n = 0; n < 200; ++n) {
    const M v = random_grade(1);
    for (int k = 0; k <= kMaxGrade; ++k) {
      const M a = random_grade(k);
      CHECK(dist(v * a, vector_contract(v, a) + (v ^ a)) < 1e-12);
    }
  }
}

TEST_CASE("contraction obeys the Leibniz rule") {
  for (int n = 0; n < 100; ++n) {
    const M v = random_grade(1);
    const int k = n % 4, j = (n / 4) % 3;
    const M a = random_grade(k), b = random_grade(j);
    const double sign = k % 2 ? -1 : 1;
    const M rhs = (vector_contract(v, a) ^ b) + sign * (a ^ vector_contract(v, b));
    CHECK(dist(vector_contract(v, a ^ b), rhs) < 1e-12);
  }
}

TEST_CASE("exponential") {
  const Vector3d v(1, -2, 0.5);
  CHECK(dist(exponential(0.5 * embed_vector(v)), 1.0 + 0.5 * embed_vector(v)) < 1e-15);
  const Vector3d u = Vector3d(1, 2, 2) / 3;
  const double t = 0.8;
  const M gen = negative_sector(u) * positive_sector(u);
  CHECK(dist(exponential(0.5 * t * gen), std::cosh(t / 2) + std::sinh(t / 2) * gen) < 1e-14);
  CHECK(dist(exponential(M()), M::scalar(1)) == 0);
}

TEST_CASE("approx_eq tolerance") {
  const M a = M::scalar(1e6);
  CHECK(approx_eq(a, a + 1e-4));
  CHECK_FALSE(approx_eq(a, a + 1e-2));
  CHECK(approx_eq(M(), M::scalar(1e-13)));
}
