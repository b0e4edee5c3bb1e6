#pragma once

// Elements of the direct limit of a DirectSystem, stored as germs (level, vector).
// Two germs are equal when they agree after pushing both to a common level;
// with injective steps that level can be the larger of the two.

#include <cstddef>
#include <ostream>
#include <utility>

#include "riesz/error.hpp"
#include "riesz/hom.hpp"
#include "riesz/system.hpp"
#include "riesz/vector.hpp"

namespace riesz {

class ColimElement {
 public:
  ColimElement(DirectSystem system, std::size_t level, FinVector vec)
      : system_(std::move(system)), level_(level), vec_(std::move(vec)) {
    if (level_ == 0) throw PreconditionViolated("levels start at 1");
    const std::size_t d = system_.dim(level_);
    if (vec_.dim() != d) throw DimensionMismatch(d, vec_.dim());
  }

  const DirectSystem& system() const noexcept { return system_; }
  std::size_t level() const noexcept { return level_; }
  const FinVector& vector() const noexcept { return vec_; }

 private:
  DirectSystem system_;
  std::size_t level_;
  FinVector vec_;
};

inline std::ostream& operator<<(std::ostream& os, const ColimElement& a) {
  return os << '<' << a.level() << ',' << a.vector() << '>';
}

/// The germ of (n, u).
inline ColimElement embed(const DirectSystem& s, std::size_t n, FinVector u) {
  return ColimElement(s, n, std::move(u));
}

/// The representative of a at level m >= a.level().
inline ColimElement promote(const ColimElement& a, std::size_t m) {
  if (m < a.level()) throw PreconditionViolated("cannot promote to a lower level");
  return ColimElement(a.system(), m, connecting(a.system(), a.level(), m).apply(a.vector()));
}

namespace detail {

inline void require_same_system(const ColimElement& a, const ColimElement& b) {
  if (!(a.system() == b.system())) throw SystemMismatch();
}

template <class Op>
ColimElement colim_binary(const ColimElement& a, const ColimElement& b, Op op) {
  require_same_system(a, b);
  const std::size_t m = std::max(a.level(), b.level());
  const ColimElement pa = promote(a, m);
  const ColimElement pb = promote(b, m);
  return ColimElement(a.system(), m, op(pa.vector(), pb.vector()));
}

}  // namespace detail

/// Germ equality; needs the steps below the common level to be injective.
inline bool germ_equal(const ColimElement& a, const ColimElement& b) {
  detail::require_same_system(a, b);
  const std::size_t m = std::max(a.level(), b.level());
  require_injective(a.system(), m);
  return promote(a, m).vector() == promote(b, m).vector();
}

/// The representative at the least level that reaches a.
inline ColimElement canonical_form(const ColimElement& a) {
  require_injective(a.system(), a.level());
  for (std::size_t n = 1; n < a.level(); ++n) {
    if (auto u = preimage(connecting(a.system(), n, a.level()), a.vector())) return ColimElement(a.system(), n, *u);
  }
  return a;
}

inline ColimElement join(const ColimElement& a, const ColimElement& b) {
  return detail::colim_binary(a, b, [](const FinVector& u, const FinVector& v) { return join(u, v); });
}

inline ColimElement meet(const ColimElement& a, const ColimElement& b) {
  return detail::colim_binary(a, b, [](const FinVector& u, const FinVector& v) { return meet(u, v); });
}

inline ColimElement operator+(const ColimElement& a, const ColimElement& b) {
  return detail::colim_binary(a, b, [](const FinVector& u, const FinVector& v) { return u + v; });
}

inline ColimElement operator-(const ColimElement& a, const ColimElement& b) {
  return detail::colim_binary(a, b, [](const FinVector& u, const FinVector& v) { return u - v; });
}

inline ColimElement operator*(const Scalar& c, const ColimElement& a) {
  return ColimElement(a.system(), a.level(), c * a.vector());
}

inline ColimElement abs(const ColimElement& a) { return ColimElement(a.system(), a.level(), abs(a.vector())); }

inline ColimElement pos_part(const ColimElement& a) {
  return ColimElement(a.system(), a.level(), pos_part(a.vector()));
}

/// Injective lattice homomorphisms reflect positivity, so any representative decides it.
inline bool is_positive(const ColimElement& a) {
  require_injective(a.system(), a.level());
  return a.vector().is_positive();
}

inline bool is_zero(const ColimElement& a) {
  require_injective(a.system(), a.level());
  return a.vector().is_zero();
}

/// The map between direct limits induced by a system morphism: <n,u> -> <n,T_n u>.
inline ColimElement induced_colimit_map(const DirectMorphism& t, const ColimElement& a) {
  if (!(a.system() == t.source())) throw SystemMismatch();
  return ColimElement(t.target(), a.level(), t.at(a.level()).apply(a.vector()));
}

}  // namespace riesz
