#pragma once

// Paravector preservation for a general element Ψ: the four grade conditions,
// classification of infinitesimal generators 1 + εψ, the first-order 4x4
// matrices, and matrix extraction from any linear point map.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cl33/algebra.hpp"
#include "cl33/euclid.hpp"
#include "cl33/hodge.hpp"
#include "cl33/transform.hpp"
#include "cl33/versors.hpp"

namespace cl33 {

template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
using Matrix4d = Matrix4<double>;

template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

template <typename Scalar>
Vector4<Scalar> to_homogeneous(const Paravector<Scalar>& p) {
  return {p.weight, p.vector[0], p.vector[1], p.vector[2]};
}

template <typename Scalar>
Paravector<Scalar> from_homogeneous(const Vector4<Scalar>& x) {
  return {x[0], Vector3<Scalar>(x[1], x[2], x[3])};
}

// ---------------------------------------------------------------------------
// Grade parts and the conditions

template <typename Scalar>
struct GradeParts {
  std::array<Multivector<Scalar>, kMaxGrade + 1> part;

  const Multivector<Scalar>& operator[](int k) const { return part[k]; }

  Multivector<Scalar> sum() const {
    Multivector<Scalar> s;
    for (const auto& p : part) s += p;
    return s;
  }
};

template <typename Scalar>
GradeParts<Scalar> grade_parts(const Multivector<Scalar>& psi) {
  GradeParts<Scalar> g;
  for (int k = 0; k <= kMaxGrade; ++k) g.part[k] = grade_project(psi, k);
  return g;
}

template <typename Scalar>
struct DeltaTerms {
  Multivector<Scalar> d1, d2, d3, d4;
};

template <typename Scalar>
DeltaTerms<Scalar> delta_terms(const GradeParts<Scalar>& g, const Multivector<Scalar>& p) {
  const auto& P1 = g[1];
  const auto& P2 = g[2];
  const auto& P3 = g[3];
  const auto& P4 = g[4];
  const auto& P5 = g[5];
  const auto& P6 = g[6];
  const auto P46 = P4 - P6;
  const auto P35 = P5 - P3;
  const auto P335 = Scalar(2) * P5 - P3;
  auto gp = [](const Multivector<Scalar>& x, int k) { return grade_project(x, k); };
  DeltaTerms<Scalar> d;
  d.d1 = Scalar(2) * gp(P1 * P5, 4) + Scalar(2) * gp(P2 * P46, 4) + gp(P3 * P335, 4) +
         gp(P4 * P4, 4);
  d.d2 = Scalar(2) * gp(P1 * P46, 5) + Scalar(2) * gp(P2 * P35, 5) + Scalar(2) * gp(P3 * P4, 5);
  d.d3 = Scalar(2) * gp(P1 * p * P46, 4) + Scalar(2) * gp(P2 * p * P35, 4) +
         Scalar(2) * gp(P3 * p * P46, 4) + Scalar(2) * gp(P4 * p * P5, 4);
  d.d4 = Scalar(2) * gp(P1 * p * P5, 5) + Scalar(2) * gp(P2 * p * P46, 5) + gp(P3 * p * P335, 5) +
         gp(P4 * p * P4, 5);
  return d;
}

template <typename Scalar>
struct ConditionReport {
  Multivector<Scalar> r1, r2, r3, r4;
  Multivector<Scalar> covector_residual;  // covector part of <Ψ P Ψ~>_1
  Multivector<Scalar> direct4, direct5;   // <Ψ P Ψ~>_4, <Ψ P Ψ~>_5

  Scalar condition_max() const {
    return std::max({r1.max_abs(), r2.max_abs(), r3.max_abs(), r4.max_abs(),
                     covector_residual.max_abs()});
  }
  Scalar direct_max() const {
    return std::max({direct4.max_abs(), direct5.max_abs(), covector_residual.max_abs()});
  }
  Scalar max_residual() const { return std::max(condition_max(), direct_max()); }
};

// Covector component of the grade-1 part: sum_i (c(e_i+) - c(e_i-)) e_i*.
template <typename Scalar>
Multivector<Scalar> covector_part(const Multivector<Scalar>& a) {
  Multivector<Scalar> out;
  for (int i = 0; i < 3; ++i) {
    out += (a[positive_generator(i)] - a[negative_generator(i)]) * basis_covector<Scalar>(i);
  }
  return out;
}

template <typename Scalar>
ConditionReport<Scalar> paravector_conditions(const Multivector<Scalar>& psi,
                                              const Vector3<Scalar>& pvec) {
  const GradeParts<Scalar> g = grade_parts(psi);
  const Multivector<Scalar> p = embed_vector(pvec);
  const DeltaTerms<Scalar> d = delta_terms(g, p);
  const Scalar s = g[0].scalar_part();
  const auto& P1 = g[1];
  const auto& P2 = g[2];
  const auto& P3 = g[3];
  const auto& P4 = g[4];
  const auto& P5 = g[5];
  const auto& P6 = g[6];
  const auto p2p2 = P2 ^ P2;
  const auto p1p3 = P1 ^ P3;

  ConditionReport<Scalar> r;
  r.r1 = Scalar(2) * s * P4 - p2p2 - Scalar(2) * p1p3 + d.d1;
  r.r2 = Scalar(2) * s * P5 + d.d2;
  // The (0,5) cross term 2Ψ0 (p·Ψ5) belongs to <Ψ p Ψ~>_4 as well; without it
  // r3 does not vanish for finite odd versors such as R T.
  r.r3 = Scalar(2) * s * (P3 ^ p) + Scalar(2) * s * vector_contract(p, P5) -
         Scalar(2) * ((P1 ^ P2) ^ p) + d.d3;
  r.r4 = Scalar(2) * s * (P4 ^ p) - (p2p2 ^ p) + Scalar(2) * (p1p3 ^ p) -
         Scalar(2) * s * vector_contract(p, P6) + d.d4;

  const auto image = psi * (Scalar(1) + p) * reversion(psi);
  r.covector_residual = covector_part(image);
  r.direct4 = grade_project(image, 4);
  r.direct5 = grade_project(image, 5);
  return r;
}

// 8 seeded points in [-1,1]^3 followed by 0, e1, e2, e3.
inline const std::vector<Vector3d>& probe_points() {
  static const std::vector<Vector3d> pts = [] {
    std::vector<Vector3d> out;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int i = 0; i < 8; ++i) out.emplace_back(uni(rng), uni(rng), uni(rng));
    out.push_back(Vector3d::Zero());
    for (int i = 0; i < 3; ++i) out.push_back(Vector3d::Unit(i));
    return out;
  }();
  return pts;
}

// ---------------------------------------------------------------------------
// Infinitesimal generators

enum class Verdict { Accept, AcceptNull, Reject, Indeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Accept: return "ACCEPT";
    case Verdict::AcceptNull: return "ACCEPT-NULL";
    case Verdict::Reject: return "REJECT";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::Indeterminate;
  double residual = 0;          // largest condition or direct residual over the probes
  double identity_deviation = 0;  // largest |Ψ P Ψ~ - P| over the probes
};

struct ClassifyOptions {
  double eps = 1e-2;
  double accept = 1e-12;
  double reject = 1e-6;
};

// ψ is scaled to unit coefficient norm, so both thresholds are scale free.
inline Classification classify_infinitesimal(int k, const Multivectord& psi,
                                             const ClassifyOptions& opts = {}) {
  const double n = psi.norm();
  if (n == 0) throw DomainError("classify_infinitesimal: psi is zero");
  if (homogeneous_grade(psi) != k) {
    throw DomainError("classify_infinitesimal: psi is not homogeneous of grade " +
                      std::to_string(k));
  }
  const Multivectord Psi = 1.0 + (opts.eps / n) * psi;
  Classification c;
  for (const auto& p : probe_points()) {
    const auto rep = paravector_conditions(Psi, p);
    c.residual = std::max(c.residual, rep.max_residual());
    const auto P = embed_paravector(Paravectord::affine(p));
    c.identity_deviation =
        std::max(c.identity_deviation, (Psi * P * reversion(Psi) - P).max_abs());
  }
  if (c.residual > opts.reject) {
    c.verdict = Verdict::Reject;
  } else if (c.residual <= opts.accept) {
    c.verdict = c.identity_deviation <= opts.accept ? Verdict::AcceptNull : Verdict::Accept;
  } else {
    c.verdict = Verdict::Indeterminate;
  }
  return c;
}

// ---------------------------------------------------------------------------
// First-order matrices

// Ψ = (1 + εv)(1 + ε a∧b*) acting by sandwich: P' = P + ε(2w v + g(p,b) a).
template <typename Scalar>
Matrix4<Scalar> affine_matrix(const Vector3<Scalar>& v, const Vector3<Scalar>& a,
                              const Vector3<Scalar>& b, Scalar eps) {
  Matrix4<Scalar> m = Matrix4<Scalar>::Identity();
  m.template block<3, 1>(1, 0) = Scalar(2) * eps * v;
  m.template block<3, 3>(1, 1) += eps * a * b.transpose();
  return m;
}

// Same Ψ acting by ⋆⁻¹[Ψ (⋆P) Ψ~].
template <typename Scalar>
Matrix4<Scalar> cotranslation_matrix(const Vector3<Scalar>& v, const Vector3<Scalar>& a,
                                     const Vector3<Scalar>& b, Scalar eps) {
  Matrix4<Scalar> m = Matrix4<Scalar>::Identity();
  m.template block<1, 3>(0, 1) = Scalar(2) * eps * v.transpose();
  m.template block<3, 3>(1, 1) -= eps * b * a.transpose();
  m += eps * a.dot(b) * Matrix4<Scalar>::Identity();
  return m;
}

template <typename Scalar>
Multivector<Scalar> first_order_psi(const Vector3<Scalar>& v, const Vector3<Scalar>& a,
                                    const Vector3<Scalar>& b, Scalar eps) {
  return (Scalar(1) + eps * embed_vector(v)) *
         (Scalar(1) + eps * (embed_vector(a) ^ embed_covector(b)));
}

// ---------------------------------------------------------------------------
// Matrix extraction

struct ProbeOptions {
  int checks = 10;
  double tolerance = 1e-9;
  std::uint64_t seed = 7;
};

// Columns are the images of (1,0), (0,e1), (0,e2), (0,e3); the result is then
// checked against the map on seeded random points.
template <typename Scalar, typename Map>
Matrix4<Scalar> projective_matrix_probe(Map&& map, const ProbeOptions& opts = {}) {
  Matrix4<Scalar> m;
  m.col(0) = to_homogeneous<Scalar>(map(Paravector<Scalar>(Scalar(1), Vector3<Scalar>::Zero())));
  for (int i = 0; i < 3; ++i) {
    m.col(i + 1) = to_homogeneous<Scalar>(
        map(Paravector<Scalar>(Scalar(0), Vector3<Scalar>::Unit(i))));
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int n = 0; n < opts.checks; ++n) {
    const Vector4<Scalar> x(Scalar(uni(rng)), Scalar(uni(rng)), Scalar(uni(rng)), Scalar(uni(rng)));
    const Vector4<Scalar> got = to_homogeneous<Scalar>(map(from_homogeneous<Scalar>(x)));
    const Vector4<Scalar> want = m * x;
    const double mismatch = static_cast<double>((got - want).cwiseAbs().maxCoeff());
    const double scale = std::max(1.0, static_cast<double>(got.cwiseAbs().maxCoeff()));
    if (mismatch > opts.tolerance * scale) {
      std::ostringstream msg;
      msg << "projective_matrix_probe: map is not linear (mismatch " << mismatch << ")";
      throw NotLinear(msg.str(), mismatch);
    }
  }
  return m;
}

template <typename Scalar>
Matrix4<Scalar> projective_matrix_probe(const Transform<Scalar>& t, const ProbeOptions& opts = {}) {
  return projective_matrix_probe<Scalar>(
      [&t](const Paravector<Scalar>& p) { return apply(t, p); }, opts);
}

// ---------------------------------------------------------------------------
// Composed first-order examples

struct AppendixEntry {
  int example = 0;
  double eps = 0, eta = 0;
  double residual = 0;  // largest condition residual over the probes
  double scale = 0;
  bool ok = false;
};

// Ex. 1: (1 + εv)(1 + ηu)
// Ex. 2: (1 + εv)(1 + η a∧b*)
// Ex. 3: (1 + ε u∧v*)(1 + η a∧b*)
inline Multivectord appendix_psi(int example, const Vector3d& v, const Vector3d& u,
                                 const Vector3d& a, const Vector3d& b, double eps, double eta) {
  const auto mixed = [](const Vector3d& x, const Vector3d& y) {
    return embed_vector(x) ^ embed_covector(y);
  };
  switch (example) {
    case 1: return (1.0 + eps * embed_vector(v)) * (1.0 + eta * embed_vector(u));
    case 2: return (1.0 + eps * embed_vector(v)) * (1.0 + eta * mixed(a, b));
    case 3: return (1.0 + eps * mixed(u, v)) * (1.0 + eta * mixed(a, b));
  }
  throw DomainError("appendix_psi: example must be 1, 2 or 3");
}

inline std::vector<AppendixEntry> appendix_fixtures(std::uint64_t seed = 11, int draws = 4,
                                                    double tolerance = 1e-12) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto rv = [&] { return Vector3d(uni(rng), uni(rng), uni(rng)); };
  std::vector<AppendixEntry> out;
  for (int ex = 1; ex <= 3; ++ex) {
    for (double eps : {1e-1, 1e-2}) {
      for (double eta : {1e-1, 1e-2}) {
        for (int d = 0; d < draws; ++d) {
          const Vector3d v = rv(), u = rv(), a = rv(), b = rv();
          const Multivectord psi = appendix_psi(ex, v, u, a, b, eps, eta);
          AppendixEntry e{ex, eps, eta, 0.0, 0.0, false};
          for (const auto& p : probe_points()) {
            const auto rep = paravector_conditions(psi, p);
            e.residual = std::max(e.residual, rep.max_residual());
            e.scale = std::max(e.scale, psi.max_abs() * psi.max_abs() * std::max(1.0, p.norm()));
          }
          e.ok = e.residual <= tolerance * e.scale;
          out.push_back(e);
        }
      }
    }
  }
  return out;
}

}  // namespace cl33
