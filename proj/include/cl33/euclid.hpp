#pragma once

// The Euclidean model inside Cl(3,3).
//
// A Euclidean vector v = v^i e_i is embedded with e_i = (e_i+ + e_i-)/2 and a
// covector with e_i* = (e_i+ - e_i-)/2. Embedded vectors are null; points are
// paravectors w + p.

#include <cmath>
#include <sstream>

#include <Eigen/Core>

#include "cl33/algebra.hpp"

namespace cl33 {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

using Vector3d = Vector3<double>;

template <typename Scalar>
struct Paravector {
  Scalar weight = Scalar(1);
  Vector3<Scalar> vector = Vector3<Scalar>::Zero();

  Paravector() = default;
  Paravector(Scalar w, const Vector3<Scalar>& p) : weight(w), vector(p) {}

  static Paravector affine(const Vector3<Scalar>& p) { return Paravector(Scalar(1), p); }

  friend bool operator==(const Paravector& a, const Paravector& b) {
    return a.weight == b.weight && a.vector == b.vector;
  }
};

using Paravectord = Paravector<double>;

template <typename Scalar>
Paravector<Scalar> paravector_sub(const Paravector<Scalar>& a, const Paravector<Scalar>& b) {
  return {a.weight - b.weight, a.vector - b.vector};
}

/// Clifford conjugate of a paravector, w - p.
template <typename Scalar>
Paravector<Scalar> paravector_conjugate(const Paravector<Scalar>& a) {
  return {a.weight, -a.vector};
}

// ---------------------------------------------------------------------------
// Basis elements

template <typename Scalar>
Multivector<Scalar> basis_vector(int i) {
  return Scalar(0.5) * (Multivector<Scalar>::blade(positive_generator(i)) +
                        Multivector<Scalar>::blade(negative_generator(i)));
}

template <typename Scalar>
Multivector<Scalar> basis_covector(int i) {
  return Scalar(0.5) * (Multivector<Scalar>::blade(positive_generator(i)) -
                        Multivector<Scalar>::blade(negative_generator(i)));
}

/// v+ = v^i e_i+ (the Cl(3,0) sector image of v).
template <typename Scalar>
Multivector<Scalar> positive_sector(const Vector3<Scalar>& v) {
  Multivector<Scalar> m;
  for (int i = 0; i < 3; ++i) m[positive_generator(i)] = v[i];
  return m;
}

/// v- = v^i e_i- (the Cl(0,3) sector image of v).
template <typename Scalar>
Multivector<Scalar> negative_sector(const Vector3<Scalar>& v) {
  Multivector<Scalar> m;
  for (int i = 0; i < 3; ++i) m[negative_generator(i)] = v[i];
  return m;
}

template <typename Scalar>
Multivector<Scalar> embed_vector(const Vector3<Scalar>& v) {
  return Scalar(0.5) * (positive_sector(v) + negative_sector(v));
}

template <typename Scalar>
Multivector<Scalar> embed_covector(const Vector3<Scalar>& v) {
  return Scalar(0.5) * (positive_sector(v) - negative_sector(v));
}

// ---------------------------------------------------------------------------
// Pseudoscalars and the volume element of V3

template <typename Scalar>
struct PseudoUnits {
  Multivector<Scalar> i_plus;   // e1+ e2+ e3+, squares to -1
  Multivector<Scalar> i_minus;  // e1- e2- e3-, squares to +1
  Multivector<Scalar> i_full;   // I+ I-
  Multivector<Scalar> omega_v;  // e1 e2 e3
  Multivector<Scalar> omega_v_star;  // e1* e2* e3*

  static const PseudoUnits& get() {
    static const PseudoUnits units = make();
    return units;
  }

 private:
  static PseudoUnits make() {
    using M = Multivector<Scalar>;
    PseudoUnits u;
    u.i_plus = M::blade(BladeMask(0b000111u));
    u.i_minus = M::blade(BladeMask(0b111000u));
    u.i_full = u.i_plus * u.i_minus;
    u.omega_v = basis_vector<Scalar>(0) * basis_vector<Scalar>(1) * basis_vector<Scalar>(2);
    u.omega_v_star =
        basis_covector<Scalar>(0) * basis_covector<Scalar>(1) * basis_covector<Scalar>(2);
    return u;
  }
};

template <typename Scalar = double>
const Multivector<Scalar>& omega_v() {
  return PseudoUnits<Scalar>::get().omega_v;
}

// I+ A (I+)^{-1}. On embedded vectors this is v -> v*.
template <typename Scalar>
Multivector<Scalar> star_conjugate(const Multivector<Scalar>& a) {
  const auto& ip = PseudoUnits<Scalar>::get().i_plus;
  // (I+)^{-1} = -I+
  return -(ip * a * ip);
}

// ---------------------------------------------------------------------------
// Paravector embedding / extraction

template <typename Scalar>
Multivector<Scalar> embed_paravector(const Paravector<Scalar>& p) {
  return Multivector<Scalar>::scalar(p.weight) + embed_vector(p.vector);
}

template <typename Scalar>
struct ParavectorResidues {
  Scalar higher_grades = Scalar(0);  // max |coeff| over grades 2..6
  Scalar covector = Scalar(0);       // max |c(e_i+) - c(e_i-)|
};

template <typename Scalar>
ParavectorResidues<Scalar> paravector_residues(const Multivector<Scalar>& a) {
  using std::abs;
  using std::max;
  ParavectorResidues<Scalar> r;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (std::popcount(i) >= 2) r.higher_grades = max(r.higher_grades, abs(a.coeffs()[i]));
  }
  for (int i = 0; i < 3; ++i) {
    r.covector = max(r.covector, abs(a[positive_generator(i)] - a[negative_generator(i)]));
  }
  return r;
}

// Residues are judged against absolute + relative * (largest coefficient of A).
template <typename Scalar>
Paravector<Scalar> extract_paravector(const Multivector<Scalar>& a, const Tolerance& tol = {}) {
  const ParavectorResidues<Scalar> r = paravector_residues(a);
  const double limit = tol.absolute + tol.relative * static_cast<double>(a.max_abs());
  if (static_cast<double>(r.higher_grades) > limit) {
    std::ostringstream msg;
    msg << "extract_paravector: grade 2..6 residue " << r.higher_grades;
    throw NonParavectorResidue(msg.str(), static_cast<double>(r.higher_grades));
  }
  if (static_cast<double>(r.covector) > limit) {
    std::ostringstream msg;
    msg << "extract_paravector: covector residue " << r.covector;
    throw CovectorResidue(msg.str(), static_cast<double>(r.covector));
  }
  Paravector<Scalar> p;
  p.weight = a.scalar_part();
  for (int i = 0; i < 3; ++i) p.vector[i] = Scalar(2) * a[positive_generator(i)];
  return p;
}

// ---------------------------------------------------------------------------
// Normalization

template <typename Scalar>
struct NormalizedPoint {
  Paravector<Scalar> point;
  bool at_infinity = false;
};

// (sign(w), p/|w|) for w != 0. A zero weight is a direction: the point is
// returned unchanged and flagged.
template <typename Scalar>
NormalizedPoint<Scalar> normalize_point(const Paravector<Scalar>& p) {
  using std::abs;
  if (p.weight == Scalar(0)) return {p, true};
  const Scalar sign = p.weight > Scalar(0) ? Scalar(1) : Scalar(-1);
  return {Paravector<Scalar>(sign, p.vector / abs(p.weight)), false};
}

/// Projective division (1, p/w); weight-0 points are returned unchanged.
template <typename Scalar>
Paravector<Scalar> dehomogenize(const Paravector<Scalar>& p) {
  if (p.weight == Scalar(0)) return p;
  return {Scalar(1), p.vector / p.weight};
}

}  // namespace cl33
