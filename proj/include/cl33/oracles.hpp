#pragma once

// Reference implementations that do not go through the versor code paths.
// They back the acceptance suites and the unit tests.

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cl33/algebra.hpp"
#include "cl33/euclid.hpp"

namespace cl33::oracle {

using Matrix3d = Eigen::Matrix3d;
using Matrix4d = Eigen::Matrix4d;

// Reflection in the plane through the origin with unit normal n.
inline Matrix3d householder(const Vector3d& n) {
  return Matrix3d::Identity() - 2.0 * n * n.transpose();
}

// Rotation in the u-v plane taking u to cos(t) u - sin(t) v.
inline Matrix3d plane_rotation(const Vector3d& u, const Vector3d& v, double theta) {
  return Matrix3d::Identity() + (std::cos(theta) - 1.0) * (u * u.transpose() + v * v.transpose()) +
         std::sin(theta) * (u * v.transpose() - v * u.transpose());
}

// Series exponential of the rotation generator θ(u+v+ - u-v-)/2.
inline Multivectord series_rotor(const Vector3d& u, const Vector3d& v, double theta) {
  const auto gen = positive_sector(u) * positive_sector(v) - negative_sector(u) * negative_sector(v);
  return exponential(Multivectord((theta / 2) * gen.coeffs()));
}

inline Multivectord series_hyperbolic(const Vector3d& u, const Vector3d& v, double eta) {
  const auto gen = negative_sector(u) * positive_sector(v) + negative_sector(v) * positive_sector(u);
  return exponential(Multivectord((eta / 2) * gen.coeffs()));
}

inline Multivectord series_shear(const Vector3d& u, const Vector3d& v, double t) {
  const auto gen = (positive_sector(u) + negative_sector(u)) * (positive_sector(v) - negative_sector(v));
  return exponential(Multivectord((t / 4) * gen.coeffs()));
}

inline Multivectord series_scale(const Vector3d& u, double t) {
  return exponential(Multivectord((t / 2) * (negative_sector(u) * positive_sector(u)).coeffs()));
}

inline Multivectord series_translation(const Vector3d& v) {
  return exponential(Multivectord(0.5 * embed_vector(v).coeffs()));
}

// Central projection from `eye` onto the plane x·n = c, textbook form
// M = (π·E) I - E πᵀ in (x, y, z, w) coordinates with π = (n, -c).
inline Matrix4d perspective_matrix(const Vector3d& eye, const Vector3d& n, double c) {
  Eigen::Vector4d E(eye[0], eye[1], eye[2], 1.0);
  Eigen::Vector4d pi(n[0], n[1], n[2], -c);
  return pi.dot(E) * Matrix4d::Identity() - E * pi.transpose();
}

// Frustum-to-box map w' = w + n·x in (x, y, z, w) coordinates.
inline Matrix4d pseudo_perspective_matrix(const Vector3d& n) {
  Matrix4d m = Matrix4d::Identity();
  m.block<1, 3>(3, 0) = n.transpose();
  return m;
}

// Applies an (x, y, z, w) matrix and divides by w.
inline Vector3d project(const Matrix4d& m, const Vector3d& p) {
  const Eigen::Vector4d x = m * Eigen::Vector4d(p[0], p[1], p[2], 1.0);
  return x.head<3>() / x[3];
}

// The collected formula <reversion(A_k*) Ω_V>_{3-k}, scaled by 2^k so that it
// matches the sector-by-sector definition of the star.
inline Multivectord collected_hodge(const Multivectord& a) {
  const auto& omega = PseudoUnits<double>::get().omega_v;
  Multivectord out;
  for (int k = 0; k <= 3; ++k) {
    const auto ak = grade_project(a, k);
    if (ak.max_abs() == 0) continue;
    out += double(1 << k) * grade_project(reversion(star_conjugate(ak)) * omega, 3 - k);
  }
  return out;
}

// Sign of a blade product from explicit sorted factor lists (bubble sort with
// annihilation), for cross-checking the bit-parity rule.
inline std::pair<int, unsigned> naive_blade_product(unsigned a, unsigned b, const Signature& sig) {
  std::vector<int> f;
  for (int i = 0; i < kGenerators; ++i) {
    if (a & (1u << i)) f.push_back(i);
  }
  for (int i = 0; i < kGenerators; ++i) {
    if (b & (1u << i)) f.push_back(i);
  }
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (f[i] > f[i + 1]) {
        std::swap(f[i], f[i + 1]);
        sign = -sign;
        changed = true;
      } else if (f[i] == f[i + 1]) {
        sign *= sig.squares[f[i]];
        f.erase(f.begin() + static_cast<long>(i), f.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  unsigned mask = 0;
  for (int g : f) mask |= 1u << g;
  return {sign, mask};
}

}  // namespace cl33::oracle
