#pragma once

// Dense multivector arithmetic in the Clifford algebra Cl(3,3).
//
// Generators are e1+, e2+, e3+ (square +1) and e1-, e2-, e3- (square -1).
// A basis blade is a 6-bit mask: bit i (i = 0,1,2) selects e(i+1)+ and bit
// i+3 selects e(i+1)-. Factors of a blade are always kept in ascending bit
// order, so e1+ < e2+ < e3+ < e1- < e2- < e3-.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "cl33/errors.hpp"

namespace cl33 {

inline constexpr int kGenerators = 6;
inline constexpr int kBladeCount = 64;
inline constexpr int kMaxGrade = 6;

struct BladeMask {
  unsigned value = 0;

  constexpr BladeMask() = default;
  constexpr explicit BladeMask(unsigned v) : value(v & 63u) {}

  constexpr int grade() const { return std::popcount(value); }
  friend constexpr bool operator==(BladeMask, BladeMask) = default;
};

/// e_{i+1}^+ for i in {0,1,2}.
constexpr BladeMask positive_generator(int i) { return BladeMask(1u << i); }
/// e_{i+1}^- for i in {0,1,2}.
constexpr BladeMask negative_generator(int i) { return BladeMask(1u << (i + 3)); }

struct Signature {
  std::array<int, kGenerators> squares;
};

inline constexpr Signature kSignature33{{1, 1, 1, -1, -1, -1}};

struct BladeProduct {
  int sign;
  BladeMask blade;
};

// Parity of the transpositions needed to merge the two sorted factor lists,
// times the squares of the generators that annihilate.
constexpr BladeProduct blade_geometric_product(BladeMask a, BladeMask b,
                                               const Signature& sig = kSignature33) {
  int swaps = 0;
  for (unsigned rest = a.value >> 1; rest != 0; rest >>= 1) {
    swaps += std::popcount(rest & b.value);
  }
  int sign = (swaps & 1) ? -1 : 1;
  const unsigned common = a.value & b.value;
  for (int i = 0; i < kGenerators; ++i) {
    if (common & (1u << i)) sign *= sig.squares[i];
  }
  return {sign, BladeMask(a.value ^ b.value)};
}

// Precomputed blade-product signs for one signature.
class CayleyTable {
 public:
  constexpr explicit CayleyTable(const Signature& sig) : signature_(sig) {
    for (unsigned a = 0; a < kBladeCount; ++a) {
      for (unsigned b = 0; b < kBladeCount; ++b) {
        signs_[a * kBladeCount + b] = static_cast<std::int8_t>(
            blade_geometric_product(BladeMask(a), BladeMask(b), sig).sign);
      }
    }
  }

  constexpr int sign(unsigned a, unsigned b) const { return signs_[a * kBladeCount + b]; }
  constexpr const Signature& signature() const { return signature_; }

 private:
  Signature signature_;
  std::array<std::int8_t, kBladeCount * kBladeCount> signs_{};
};

inline constexpr CayleyTable kCayley33{kSignature33};

// Per-coefficient tolerance: |a - b| <= absolute + relative * max(|a|, |b|).
struct Tolerance {
  double absolute = 1e-12;
  double relative = 1e-9;

  template <typename Scalar>
  bool close(Scalar a, Scalar b) const {
    using std::abs;
    using std::max;
    return abs(a - b) <= absolute + relative * max(abs(a), abs(b));
  }
};

template <typename Scalar>
class Multivector {
 public:
  using Coeffs = Eigen::Matrix<Scalar, kBladeCount, 1>;

  Multivector() : coeffs_(Coeffs::Zero()) {}
  explicit Multivector(const Coeffs& coeffs) : coeffs_(coeffs) {}

  static Multivector scalar(Scalar s) {
    Multivector m;
    m.coeffs_[0] = s;
    return m;
  }
  static Multivector blade(BladeMask mask, Scalar s = Scalar(1)) {
    Multivector m;
    m.coeffs_[mask.value] = s;
    return m;
  }
  static Multivector zero() { return Multivector(); }

  const Coeffs& coeffs() const { return coeffs_; }
  Coeffs& coeffs() { return coeffs_; }

  Scalar operator[](BladeMask m) const { return coeffs_[m.value]; }
  Scalar& operator[](BladeMask m) { return coeffs_[m.value]; }

  Scalar scalar_part() const { return coeffs_[0]; }

  /// Euclidean norm of the coefficient vector (not a Clifford norm).
  Scalar norm() const { return coeffs_.norm(); }
  Scalar max_abs() const { return coeffs_.cwiseAbs().maxCoeff(); }

  Multivector& operator+=(const Multivector& o) {
    coeffs_ += o.coeffs_;
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    coeffs_ -= o.coeffs_;
    return *this;
  }
  Multivector& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }
  Multivector& operator/=(Scalar s) {
    coeffs_ /= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    a.coeffs_ = -a.coeffs_;
    return a;
  }
  friend Multivector operator*(Multivector a, Scalar s) { return a *= s; }
  friend Multivector operator*(Scalar s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, Scalar s) { return a /= s; }

  friend Multivector operator+(Multivector a, Scalar s) {
    a.coeffs_[0] += s;
    return a;
  }
  friend Multivector operator+(Scalar s, Multivector a) { return a + s; }
  friend Multivector operator-(Multivector a, Scalar s) {
    a.coeffs_[0] -= s;
    return a;
  }
  friend Multivector operator-(Scalar s, const Multivector& a) { return -a + s; }

 private:
  Coeffs coeffs_;
};

using Multivectord = Multivector<double>;

// ---------------------------------------------------------------------------
// Products

template <typename Scalar>
Multivector<Scalar> geometric_product(const Multivector<Scalar>& a, const Multivector<Scalar>& b,
                                      const CayleyTable& table = kCayley33) {
  Multivector<Scalar> out;
  auto& c = out.coeffs();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const Scalar ai = ca[i];
    if (ai == Scalar(0)) continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      const Scalar bj = cb[j];
      if (bj == Scalar(0)) continue;
      c[i ^ j] += Scalar(table.sign(i, j)) * ai * bj;
    }
  }
  return out;
}

template <typename Scalar>
Multivector<Scalar> operator*(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  return geometric_product(a, b);
}

// Sum over grade pairs of <A_r B_s>_{r+s}. For orthogonal basis blades this
// keeps exactly the products of blades with no generator in common.
template <typename Scalar>
Multivector<Scalar> outer_product(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  Multivector<Scalar> out;
  auto& c = out.coeffs();
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const Scalar ai = a.coeffs()[i];
    if (ai == Scalar(0)) continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      if ((i & j) != 0) continue;
      const Scalar bj = b.coeffs()[j];
      if (bj == Scalar(0)) continue;
      c[i ^ j] += Scalar(kCayley33.sign(i, j)) * ai * bj;
    }
  }
  return out;
}

template <typename Scalar>
Multivector<Scalar> operator^(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  return outer_product(a, b);
}

// ---------------------------------------------------------------------------
// Grades

template <typename Scalar>
Multivector<Scalar> grade_project(const Multivector<Scalar>& a, int k) {
  if (k < 0 || k > kMaxGrade) {
    throw DomainError("grade_project: grade " + std::to_string(k) + " outside 0..6");
  }
  Multivector<Scalar> out;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (std::popcount(i) == k) out.coeffs()[i] = a.coeffs()[i];
  }
  return out;
}

/// Bit k set iff grade k has a coefficient with magnitude above `threshold`.
template <typename Scalar>
unsigned grades_present(const Multivector<Scalar>& a, Scalar threshold = Scalar(0)) {
  using std::abs;
  unsigned grades = 0;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (abs(a.coeffs()[i]) > threshold) grades |= 1u << std::popcount(i);
  }
  return grades;
}

/// Grade of a homogeneous multivector; -1 if zero or mixed.
template <typename Scalar>
int homogeneous_grade(const Multivector<Scalar>& a, Scalar threshold = Scalar(0)) {
  const unsigned g = grades_present(a, threshold);
  if (g == 0 || std::popcount(g) != 1) return -1;
  return std::countr_zero(g);
}

namespace detail {

template <typename Scalar, typename SignFn>
Multivector<Scalar> apply_grade_signs(Multivector<Scalar> a, SignFn sign_of_grade) {
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (sign_of_grade(std::popcount(i)) < 0) a.coeffs()[i] = -a.coeffs()[i];
  }
  return a;
}

}  // namespace detail

// (-1)^k on grade k.
template <typename Scalar>
Multivector<Scalar> grade_involution(const Multivector<Scalar>& a) {
  return detail::apply_grade_signs(a, [](int k) { return (k % 2) ? -1 : 1; });
}

// (-1)^{k(k-1)/2} on grade k.
template <typename Scalar>
Multivector<Scalar> reversion(const Multivector<Scalar>& a) {
  return detail::apply_grade_signs(a, [](int k) { return ((k * (k - 1) / 2) % 2) ? -1 : 1; });
}

// Composition of the two above.
template <typename Scalar>
Multivector<Scalar> conjugation(const Multivector<Scalar>& a) {
  return detail::apply_grade_signs(a, [](int k) {
    const int s1 = (k % 2) ? -1 : 1;
    const int s2 = ((k * (k - 1) / 2) % 2) ? -1 : 1;
    return s1 * s2;
  });
}

// v . A = sum_k 1/2 (v A_k - (-1)^k A_k v). Only the grade-1 part of v is used.
template <typename Scalar>
Multivector<Scalar> vector_contract(const Multivector<Scalar>& v, const Multivector<Scalar>& a) {
  const Multivector<Scalar> v1 = grade_project(v, 1);
  Multivector<Scalar> out;
  for (int k = 0; k <= kMaxGrade; ++k) {
    const Multivector<Scalar> ak = grade_project(a, k);
    if (ak.max_abs() == Scalar(0)) continue;
    const Scalar s = (k % 2) ? Scalar(-1) : Scalar(1);
    out += Scalar(0.5) * (v1 * ak - s * (ak * v1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Comparison

template <typename Scalar>
bool approx_eq(const Multivector<Scalar>& a, const Multivector<Scalar>& b,
               const Tolerance& tol = {}) {
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (!tol.close(a.coeffs()[i], b.coeffs()[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exponential

struct SeriesOptions {
  double tolerance = 1e-17;
  int max_terms = 200;
};

// Truncated Taylor series sum A^n / n!, stopping once a term's coefficient
// norm drops below the tolerance.
template <typename Scalar>
Multivector<Scalar> exponential(const Multivector<Scalar>& a, const SeriesOptions& opts = {}) {
  Multivector<Scalar> sum = Multivector<Scalar>::scalar(Scalar(1));
  Multivector<Scalar> term = sum;
  for (int n = 1; n <= opts.max_terms; ++n) {
    term = term * a / Scalar(n);
    sum += term;
    if (term.norm() < Scalar(opts.tolerance)) return sum;
  }
  throw ConvergenceError("exponential: series did not converge within " +
                         std::to_string(opts.max_terms) + " terms");
}

}  // namespace cl33
