#pragma once

// Versor constructors and the two ways of applying them to points:
//   sandwich        P' = ε U P reversion(U)
//   Hodge sandwich  P' = ⋆⁻¹[U' (⋆P) reversion(U')]
// Cotranslation is the Hodge sandwich with U' = 1 + v/2.

#include <cmath>
#include <sstream>
#include <string>

#include "cl33/algebra.hpp"
#include "cl33/euclid.hpp"
#include "cl33/hodge.hpp"

namespace cl33 {

enum class VersorKind { Reflection, Rotation, Hyperbolic, Shear, Scale, Translation, Composite };

inline const char* to_string(VersorKind k) {
  switch (k) {
    case VersorKind::Reflection: return "reflection";
    case VersorKind::Rotation: return "rotation";
    case VersorKind::Hyperbolic: return "hyperbolic";
    case VersorKind::Shear: return "shear";
    case VersorKind::Scale: return "scale";
    case VersorKind::Translation: return "translation";
    case VersorKind::Composite: return "composite";
  }
  return "?";
}

template <typename Scalar>
struct Versor {
  Multivector<Scalar> U = Multivector<Scalar>::scalar(Scalar(1));
  int epsilon = 1;
  VersorKind kind = VersorKind::Composite;

  static Versor identity() { return {}; }
};

using Versord = Versor<double>;

inline constexpr double kOrthonormalTolerance = 1e-9;

namespace detail {

template <typename Scalar>
void require_unit(const Vector3<Scalar>& v, const char* who, const char* name) {
  using std::abs;
  if (abs(v.norm() - Scalar(1)) > Scalar(kOrthonormalTolerance)) {
    std::ostringstream msg;
    msg << who << ": " << name << " must be a unit vector (|" << name << "| = " << v.norm() << ")";
    throw DomainError(msg.str());
  }
}

template <typename Scalar>
void require_orthogonal(const Vector3<Scalar>& u, const Vector3<Scalar>& v, const char* who) {
  using std::abs;
  if (abs(u.dot(v)) > Scalar(kOrthonormalTolerance)) {
    std::ostringstream msg;
    msg << who << ": u and v must be orthogonal (g(u,v) = " << u.dot(v) << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace detail

// N = n+ n-, applied with ε = -1. Reflects in the plane through the origin
// with unit normal n.
template <typename Scalar>
Versor<Scalar> reflection_versor(const Vector3<Scalar>& n) {
  detail::require_unit(n, "reflection_versor", "n");
  return {positive_sector(n) * negative_sector(n), -1, VersorKind::Reflection};
}

// exp(θ(u+v+ - u-v-)/2), written as the product of the two commuting sector
// exponentials. Maps u to cosθ u - sinθ v.
template <typename Scalar>
Versor<Scalar> rotation_versor(const Vector3<Scalar>& u, const Vector3<Scalar>& v, Scalar theta) {
  using std::cos;
  using std::sin;
  detail::require_unit(u, "rotation_versor", "u");
  detail::require_unit(v, "rotation_versor", "v");
  detail::require_orthogonal(u, v, "rotation_versor");
  const Scalar c = cos(theta / 2), s = sin(theta / 2);
  const auto plus = c + s * (positive_sector(u) * positive_sector(v));
  const auto minus = c - s * (negative_sector(u) * negative_sector(v));
  return {plus * minus, 1, VersorKind::Rotation};
}

// exp(η(u-v+ + v-u+)/2). The two generator terms commute and each squares to 1.
template <typename Scalar>
Versor<Scalar> hyperbolic_versor(const Vector3<Scalar>& u, const Vector3<Scalar>& v, Scalar eta) {
  using std::cosh;
  using std::sinh;
  detail::require_unit(u, "hyperbolic_versor", "u");
  detail::require_unit(v, "hyperbolic_versor", "v");
  detail::require_orthogonal(u, v, "hyperbolic_versor");
  const Scalar c = cosh(eta / 2), s = sinh(eta / 2);
  const auto a = c + s * (negative_sector(u) * positive_sector(v));
  const auto b = c + s * (negative_sector(v) * positive_sector(u));
  return {a * b, 1, VersorKind::Hyperbolic};
}

// The generator (u+ + u-)(v+ - v-) is nilpotent, so the series stops at 1 + X.
template <typename Scalar>
Versor<Scalar> shear_versor(const Vector3<Scalar>& u, const Vector3<Scalar>& v, Scalar t) {
  detail::require_orthogonal(u, v, "shear_versor");
  const auto gen = (positive_sector(u) + negative_sector(u)) * (positive_sector(v) - negative_sector(v));
  return {Scalar(1) + (t / Scalar(4)) * gen, 1, VersorKind::Shear};
}

// exp(t u-u+/2); (u-u+)^2 = 1 for unit u. Scales the u component by e^t.
template <typename Scalar>
Versor<Scalar> scale_versor(const Vector3<Scalar>& u, Scalar t) {
  using std::cosh;
  using std::sinh;
  detail::require_unit(u, "scale_versor", "u");
  return {cosh(t / 2) + sinh(t / 2) * (negative_sector(u) * positive_sector(u)), 1,
          VersorKind::Scale};
}

// exp(v/2) = 1 + v/2 since v is null.
template <typename Scalar>
Versor<Scalar> translation_versor(const Vector3<Scalar>& v) {
  return {Scalar(1) + embed_vector(Vector3<Scalar>(v / Scalar(2))), 1, VersorKind::Translation};
}

/// `second` after `first`: U = U2 U1, ε = ε2 ε1.
template <typename Scalar>
Versor<Scalar> compose_versors(const Versor<Scalar>& first, const Versor<Scalar>& second) {
  const bool both_translations =
      first.kind == VersorKind::Translation && second.kind == VersorKind::Translation;
  return {second.U * first.U, first.epsilon * second.epsilon,
          both_translations ? VersorKind::Translation : VersorKind::Composite};
}

template <typename Scalar>
Multivector<Scalar> sandwich(const Versor<Scalar>& v, const Multivector<Scalar>& a) {
  return Scalar(v.epsilon) * (v.U * a * reversion(v.U));
}

template <typename Scalar>
Paravector<Scalar> apply_sandwich(const Versor<Scalar>& v, const Paravector<Scalar>& p,
                                  const Tolerance& tol = {}) {
  return extract_paravector(sandwich(v, embed_paravector(p)), tol);
}

// ---------------------------------------------------------------------------
// Hodge form

template <typename Scalar>
struct HodgeVersor {
  Multivector<Scalar> Uprime = Multivector<Scalar>::scalar(Scalar(1));
  Scalar lambda = Scalar(1);
};

using HodgeVersord = HodgeVersor<double>;

/// `second` after `first` in Hodge form.
template <typename Scalar>
HodgeVersor<Scalar> compose_hodge(const HodgeVersor<Scalar>& first,
                                  const HodgeVersor<Scalar>& second) {
  return {second.Uprime * first.Uprime, first.lambda * second.lambda};
}

template <typename Scalar>
HodgeVersor<Scalar> cotranslation_versor(const Vector3<Scalar>& v) {
  return {translation_versor(v).U, Scalar(1)};
}

template <typename Scalar>
Multivector<Scalar> hodge_sandwich(const HodgeVersor<Scalar>& h, const Multivector<Scalar>& a,
                                   const Tolerance& tol = {}) {
  return hodge_star_inverse(h.Uprime * hodge_star(a) * reversion(h.Uprime), tol);
}

template <typename Scalar>
Paravector<Scalar> apply_hodge_sandwich(const HodgeVersor<Scalar>& h, const Paravector<Scalar>& p,
                                        const Tolerance& tol = {}) {
  return extract_paravector(hodge_sandwich(h, embed_paravector(p), tol), tol);
}

// ⋆⁻¹[T (⋆P) reversion(T)] with T = 1 + v/2; adds g(p, v) to the weight.
template <typename Scalar>
Paravector<Scalar> apply_cotranslation(const Vector3<Scalar>& v, const Paravector<Scalar>& p,
                                       const Tolerance& tol = {}) {
  return apply_hodge_sandwich(cotranslation_versor(v), p, tol);
}

struct HodgeCompatibility {
  double lambda_squared = 0;
  double residual = 0;  // max |reversion(U*) Ω U* - λ² Ω|
};

template <typename Scalar>
HodgeCompatibility hodge_condition(const Multivector<Scalar>& u_star) {
  const auto& omega = PseudoUnits<Scalar>::get().omega_v;
  const auto m = reversion(u_star) * omega * u_star;
  const Scalar l2 = m.coeffs().dot(omega.coeffs()) / omega.coeffs().squaredNorm();
  return {static_cast<double>(l2), static_cast<double>((m - l2 * omega).max_abs())};
}

// U' = λ U* with U* = I+ U (I+)^{-1} and λ > 0 from
// reversion(U*) Ω_V U* = λ² Ω_V.
template <typename Scalar>
HodgeVersor<Scalar> hodge_conjugate_versor(const Versor<Scalar>& v, double tolerance = 1e-9) {
  using std::sqrt;
  const auto u_star = star_conjugate(v.U);
  const HodgeCompatibility c = hodge_condition(u_star);
  const double scale = std::max(1.0, std::abs(c.lambda_squared));
  if (c.residual > tolerance * scale || c.lambda_squared <= 0) {
    std::ostringstream msg;
    msg << "hodge_conjugate_versor: " << to_string(v.kind)
        << " versor is not Hodge compatible (residual " << c.residual << ", lambda^2 "
        << c.lambda_squared << ")";
    throw NotHodgeCompatible(msg.str(), c.residual);
  }
  const Scalar lambda = sqrt(Scalar(c.lambda_squared));
  return {lambda * u_star, lambda};
}

// ---------------------------------------------------------------------------
// Perspective

template <typename Scalar>
struct Perspective {
  Vector3<Scalar> eye = Vector3<Scalar>::Zero();
  Vector3<Scalar> normal = Vector3<Scalar>::UnitZ();
  Scalar c = Scalar(1);
};

// Offset of the plane x·n = c as seen from the eye.
template <typename Scalar>
Scalar perspective_offset(const Perspective<Scalar>& pr) {
  return pr.c - pr.normal.dot(pr.eye);
}

// T_e ∘ W_{n/a} ∘ T_e⁻¹ applied to P - w E, with a = c - n·e. The result is
// a weighted point on the plane; the eye itself goes to zero.
template <typename Scalar>
Paravector<Scalar> perspective_project(const Perspective<Scalar>& pr, const Paravector<Scalar>& p,
                                       const Tolerance& tol = {}) {
  using std::abs;
  if (pr.normal.norm() == Scalar(0)) throw DomainError("perspective_project: zero plane normal");
  const Scalar a = perspective_offset(pr);
  if (abs(a) <= Scalar(tol.absolute)) {
    throw DegenerateConfiguration("perspective_project: eye lies on the projection plane");
  }
  const Paravector<Scalar> rel = paravector_sub(p, Paravector<Scalar>(p.weight, p.weight * pr.eye));
  auto q = apply_sandwich(translation_versor(Vector3<Scalar>(-pr.eye)), rel, tol);
  q = apply_cotranslation(Vector3<Scalar>(pr.normal / a), q, tol);
  return apply_sandwich(translation_versor(pr.eye), q, tol);
}

template <typename Scalar>
Paravector<Scalar> perspective_project(const Paravector<Scalar>& eye, const Vector3<Scalar>& n,
                                       Scalar c, const Paravector<Scalar>& p) {
  return perspective_project(Perspective<Scalar>{dehomogenize(eye).vector, n, c}, p);
}

// Points behind the eye come out with negative weight; their location is
// that of the conjugate w - p.
template <typename Scalar>
NormalizedPoint<Scalar> perspective_image(const Perspective<Scalar>& pr,
                                          const Paravector<Scalar>& p) {
  Paravector<Scalar> q = perspective_project(pr, p);
  if (q.weight < Scalar(0)) q = paravector_conjugate(q);
  return normalize_point(q);
}

template <typename Scalar>
Paravector<Scalar> pseudo_perspective(const Vector3<Scalar>& n, const Paravector<Scalar>& p) {
  detail::require_unit(n, "pseudo_perspective", "n");
  return apply_cotranslation(n, p);
}

// ---------------------------------------------------------------------------
// Sector behaviour

struct SectorReport {
  double positive_off_sector = 0;  // largest coefficient of images of 1 + p+ outside span{1, e_i+}
  double negative_off_sector = 0;
  bool preserves_positive = false;
  bool preserves_negative = false;
};

template <typename Scalar>
SectorReport sector_image(const Versor<Scalar>& v, double threshold = 1e-12) {
  using std::abs;
  using std::max;
  static const double probes[4][3] = {
      {0.3, -0.7, 0.5}, {-0.9, 0.2, 0.4}, {0.6, 0.8, -0.1}, {1.0, -0.3, -0.8}};
  SectorReport r;
  for (const auto& pr : probes) {
    const Vector3<Scalar> p{Scalar(pr[0]), Scalar(pr[1]), Scalar(pr[2])};
    const auto plus = sandwich(v, Scalar(1) + positive_sector(p));
    const auto minus = sandwich(v, Scalar(1) + negative_sector(p));
    for (unsigned i = 1; i < kBladeCount; ++i) {
      const BladeMask m(i);
      const bool in_plus = m.grade() == 1 && i < 8;
      const bool in_minus = m.grade() == 1 && i >= 8;
      if (!in_plus) r.positive_off_sector = max(r.positive_off_sector, double(abs(plus.coeffs()[i])));
      if (!in_minus) r.negative_off_sector = max(r.negative_off_sector, double(abs(minus.coeffs()[i])));
    }
  }
  r.preserves_positive = r.positive_off_sector <= threshold;
  r.preserves_negative = r.negative_off_sector <= threshold;
  return r;
}

}  // namespace cl33
