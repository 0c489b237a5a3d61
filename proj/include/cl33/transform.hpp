#pragma once

// Stage lists. Adjacent stages of the same form fuse into one element; a
// sandwich followed by a Hodge sandwich stays two stages.

#include <type_traits>
#include <variant>
#include <vector>

#include "cl33/versors.hpp"

namespace cl33 {

template <typename Scalar>
struct Cotranslation {
  Vector3<Scalar> v = Vector3<Scalar>::Zero();
};

template <typename Scalar>
using Stage = std::variant<Versor<Scalar>, Cotranslation<Scalar>, HodgeVersor<Scalar>,
                           Perspective<Scalar>>;

template <typename Scalar>
struct Transform {
  std::vector<Stage<Scalar>> stages;  // applied front to back

  bool is_identity() const { return stages.empty(); }
};

using Transformd = Transform<double>;

template <typename Scalar>
Paravector<Scalar> apply_stage(const Stage<Scalar>& stage, const Paravector<Scalar>& p,
                               const Tolerance& tol = {}) {
  return std::visit(
      [&](const auto& s) -> Paravector<Scalar> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Versor<Scalar>>) {
          return apply_sandwich(s, p, tol);
        } else if constexpr (std::is_same_v<T, Cotranslation<Scalar>>) {
          return apply_cotranslation(s.v, p, tol);
        } else if constexpr (std::is_same_v<T, HodgeVersor<Scalar>>) {
          return apply_hodge_sandwich(s, p, tol);
        } else {
          return perspective_project(s, p, tol);
        }
      },
      stage);
}

template <typename Scalar>
Paravector<Scalar> apply(const Transform<Scalar>& t, Paravector<Scalar> p,
                         const Tolerance& tol = {}) {
  for (const auto& s : t.stages) p = apply_stage(s, p, tol);
  return p;
}

namespace detail {

template <typename Scalar>
const HodgeVersor<Scalar>* as_hodge(const Stage<Scalar>& s, HodgeVersor<Scalar>& storage) {
  if (const auto* h = std::get_if<HodgeVersor<Scalar>>(&s)) return h;
  if (const auto* c = std::get_if<Cotranslation<Scalar>>(&s)) {
    storage = cotranslation_versor(c->v);
    return &storage;
  }
  return nullptr;
}

}  // namespace detail

template <typename Scalar>
Transform<Scalar> compose(const std::vector<Stage<Scalar>>& stages) {
  Transform<Scalar> out;
  for (const auto& s : stages) {
    if (out.stages.empty()) {
      out.stages.push_back(s);
      continue;
    }
    auto& last = out.stages.back();
    if (auto* prev = std::get_if<Versor<Scalar>>(&last)) {
      if (const auto* next = std::get_if<Versor<Scalar>>(&s)) {
        *prev = compose_versors(*prev, *next);
        continue;
      }
    }
    HodgeVersor<Scalar> a, b;
    const auto* prev_h = detail::as_hodge(last, a);
    const auto* next_h = detail::as_hodge(s, b);
    if (prev_h && next_h) {
      last = compose_hodge(*prev_h, *next_h);
      continue;
    }
    out.stages.push_back(s);
  }
  return out;
}

}  // namespace cl33
