#pragma once

// Hodge duality on the Euclidean exterior subalgebra Λ(V3) ⊂ Cl(3,3).
//
// The star is defined on sector blades:
//   ⋆1                         = Ω_V
//   ⋆v^σ                       = 2 σ v^σ · Ω_V
//   ⋆(u^σ ∧ v^σ')              = 2² σσ' v^σ' · (u^σ · Ω_V)
//   ⋆(u^σ ∧ v^σ' ∧ w^σ'')      = 2³ σσ'σ'' w^σ'' · (v^σ' · (u^σ · Ω_V))
// and extended linearly. Embedded k-blades e_{i1}∧…∧e_{ik} expand into 2^k
// sector blades with weight 2^{-k}, so each of the 8 basis elements of Λ(V3)
// has a fixed image, precomputed once per scalar type.

#include <array>
#include <sstream>
#include <vector>

#include "cl33/algebra.hpp"
#include "cl33/euclid.hpp"

namespace cl33 {

inline constexpr int kExteriorDim = 8;

/// Index lists of the Λ(V3) basis {1, e1, e2, e3, e12, e13, e23, e123}.
inline const std::array<std::vector<int>, kExteriorDim>& exterior_basis_indices() {
  static const std::array<std::vector<int>, kExteriorDim> indices{
      std::vector<int>{},     std::vector<int>{0},    std::vector<int>{1},
      std::vector<int>{2},    std::vector<int>{0, 1}, std::vector<int>{0, 2},
      std::vector<int>{1, 2}, std::vector<int>{0, 1, 2}};
  return indices;
}

template <typename Scalar>
struct HodgeTables {
  std::array<Multivector<Scalar>, kExteriorDim> basis;
  std::array<Multivector<Scalar>, kExteriorDim> images;
  std::array<Scalar, kExteriorDim> basis_norm2;

  static const HodgeTables& get() {
    static const HodgeTables tables = make();
    return tables;
  }

 private:
  static Multivector<Scalar> sector_generator(int i, int sigma) {
    return Multivector<Scalar>::blade(sigma > 0 ? positive_generator(i) : negative_generator(i));
  }

  // Sum over the 2^k sector choices of σ1…σk · e_ik^σk · (… (e_i1^σ1 · Ω_V)).
  // The 2^{-k} of the expansion cancels the 2^k of the definition.
  static Multivector<Scalar> itemized_image(const std::vector<int>& idx) {
    const auto& omega = PseudoUnits<Scalar>::get().omega_v;
    const int k = static_cast<int>(idx.size());
    if (k == 0) return omega;
    Multivector<Scalar> image;
    for (unsigned choice = 0; choice < (1u << k); ++choice) {
      Multivector<Scalar> chain = omega;
      Scalar sign = Scalar(1);
      for (int j = 0; j < k; ++j) {
        const int sigma = (choice >> j) & 1u ? -1 : 1;
        chain = vector_contract(sector_generator(idx[j], sigma), chain);
        sign *= Scalar(sigma);
      }
      image += sign * chain;
    }
    return image;
  }

  static HodgeTables make() {
    HodgeTables t;
    const auto& indices = exterior_basis_indices();
    for (int b = 0; b < kExteriorDim; ++b) {
      Multivector<Scalar> blade = Multivector<Scalar>::scalar(Scalar(1));
      for (int i : indices[b]) blade = outer_product(blade, basis_vector<Scalar>(i));
      t.basis[b] = blade;
      t.basis_norm2[b] = blade.coeffs().squaredNorm();
      t.images[b] = itemized_image(indices[b]);
    }
    return t;
  }
};

/// Coordinates of A over the Λ(V3) basis {1, e1, e2, e3, e12, e13, e23, e123}.
/// Throws DomainError if A has a component outside that span.
template <typename Scalar>
std::array<Scalar, kExteriorDim> exterior_coordinates(const Multivector<Scalar>& a,
                                                      const Tolerance& tol = {}) {
  const auto& t = HodgeTables<Scalar>::get();
  std::array<Scalar, kExteriorDim> coords{};
  Multivector<Scalar> residual = a;
  // The basis elements have disjoint blade supports, so projection is exact.
  for (int b = 0; b < kExteriorDim; ++b) {
    coords[b] = a.coeffs().dot(t.basis[b].coeffs()) / t.basis_norm2[b];
    residual -= coords[b] * t.basis[b];
  }
  const double limit = tol.absolute + tol.relative * static_cast<double>(a.max_abs());
  const double res = static_cast<double>(residual.max_abs());
  if (res > limit) {
    std::ostringstream msg;
    msg << "hodge_star: input has a component of size " << res << " outside Λ(V3)";
    throw DomainError(msg.str());
  }
  return coords;
}

template <typename Scalar>
Multivector<Scalar> hodge_star(const Multivector<Scalar>& a, const Tolerance& tol = {}) {
  const auto& t = HodgeTables<Scalar>::get();
  const auto coords = exterior_coordinates(a, tol);
  Multivector<Scalar> out;
  for (int b = 0; b < kExteriorDim; ++b) {
    if (coords[b] != Scalar(0)) out += coords[b] * t.images[b];
  }
  return out;
}

// ⋆⁻¹ = (-1)^{k(3-k)} ⋆ = ⋆ for every grade in three dimensions.
template <typename Scalar>
Multivector<Scalar> hodge_star_inverse(const Multivector<Scalar>& a, const Tolerance& tol = {}) {
  return hodge_star(a, tol);
}

// ✠A_k = <reversion(A_k) I>_{6-k}.
template <typename Scalar>
Multivector<Scalar> maltese_dual(const Multivector<Scalar>& a) {
  const int k = homogeneous_grade(a);
  if (k < 0) {
    if (a.max_abs() == Scalar(0)) return a;
    throw DomainError("maltese_dual: input is not homogeneous");
  }
  return grade_project(reversion(a) * PseudoUnits<Scalar>::get().i_full, kMaxGrade - k);
}

}  // namespace cl33
