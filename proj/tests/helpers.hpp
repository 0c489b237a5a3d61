#pragma once

#include <random>

#include <doctest.h>

#include "cl33.hpp"
#include "cl33/oracles.hpp"

namespace testing {

using namespace cl33;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(12345);
  return gen;
}

inline double uniform(double lo = -1, double hi = 1) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Vector3d random_vec(double r = 1) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }

inline Vector3d random_unit() {
  Vector3d v;
  do v = random_vec(); while (v.norm() < 1e-3);
  return v.normalized();
}

inline std::pair<Vector3d, Vector3d> random_frame() {
  const Vector3d u = random_unit();
  Vector3d v;
  do {
    v = random_vec();
    v -= v.dot(u) * u;
  } while (v.norm() < 1e-3);
  return {u, v.normalized()};
}

inline Multivectord random_mv() {
  Multivectord m;
  for (int i = 0; i < kBladeCount; ++i) m.coeffs()[i] = uniform();
  return m;
}

inline Multivectord random_grade(int k) { return grade_project(random_mv(), k); }

inline Multivectord e(int i) { return basis_vector<double>(i); }
inline Multivectord ep(int i) { return Multivectord::blade(positive_generator(i)); }
inline Multivectord em(int i) { return Multivectord::blade(negative_generator(i)); }

inline double dist(const Multivectord& a, const Multivectord& b) { return (a - b).max_abs(); }

inline double dist(const Paravectord& a, const Paravectord& b) {
  return std::max(std::abs(a.weight - b.weight), (a.vector - b.vector).cwiseAbs().maxCoeff());
}

}  // namespace testing
