#pragma once

// Functionals on limits in their represented form.
//
// A functional on the direct limit of s is a thread of the dual inverse system
// dual_of_direct(s); it acts on <n,u> by <phi_n, u>. A functional on the inverse
// limit of s (surjective steps) is a germ of dual_of_inverse(s); <n,psi> acts on
// a thread t by <psi, t_n>.
//
// Every positive operator between finite-dimensional coordinate lattices is
// order continuous, so the order dual and the order continuous dual of each
// component coincide; reports record this.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riesz/colimit.hpp"
#include "riesz/error.hpp"
#include "riesz/hom.hpp"
#include "riesz/limit.hpp"
#include "riesz/matrix.hpp"
#include "riesz/system.hpp"

namespace riesz {

class ColimFunctional {
 public:
  ColimFunctional(DirectSystem primal, Thread phi) : primal_(std::move(primal)), phi_(std::move(phi)) {
    if (!(phi_.system() == dual_of_direct(primal_))) throw SystemMismatch();
  }

  const DirectSystem& primal() const noexcept { return primal_; }
  const Thread& thread() const noexcept { return phi_; }

 private:
  DirectSystem primal_;
  Thread phi_;
};

class LimFunctional {
 public:
  LimFunctional(InverseSystem primal, ColimElement psi) : primal_(std::move(primal)), psi_(std::move(psi)) {
    if (!(psi_.system() == dual_of_inverse(primal_))) throw SystemMismatch();
  }

  LimFunctional(const InverseSystem& primal, std::size_t level, FinVector psi)
      : LimFunctional(primal, ColimElement(dual_of_inverse(primal), level, std::move(psi))) {}

  const InverseSystem& primal() const noexcept { return primal_; }
  const ColimElement& germ() const noexcept { return psi_; }
  std::size_t level() const noexcept { return psi_.level(); }
  const FinVector& vector() const noexcept { return psi_.vector(); }

 private:
  InverseSystem primal_;
  ColimElement psi_;
};

inline Scalar eval_colim_functional(const ColimFunctional& f, const ColimElement& a) {
  if (!(a.system() == f.primal())) throw SystemMismatch();
  if (f.thread().verified_depth() < a.level()) throw DepthInsufficient(a.level(), f.thread().verified_depth());
  return dot(f.thread().component(a.level()), a.vector());
}

/// phi_n(j) = f(<n, e_j>); the resulting family is verified to depth.
inline ColimFunctional functional_to_dual_thread(const DirectSystem& s,
                                                 std::function<Scalar(const ColimElement&)> f,
                                                 std::size_t depth) {
  Thread phi(
      dual_of_direct(s),
      [s, f](std::size_t n) {
        FinVector v(s.dim(n));
        for (std::size_t j = 0; j < v.dim(); ++j) v[j] = f(embed(s, n, FinVector::unit(s.dim(n), j)));
        return v;
      },
      {}, "functional sampled on basis germs");
  verify_thread(phi, depth);
  return ColimFunctional(s, std::move(phi));
}

inline Scalar eval_lim_functional(const LimFunctional& psi, const Thread& t) {
  if (!(t.system() == psi.primal())) throw SystemMismatch();
  if (t.verified_depth() < psi.level()) throw DepthInsufficient(psi.level(), t.verified_depth());
  return dot(psi.vector(), t.component(psi.level()));
}

/// Germ equality in the dual direct system; its steps are injective when the primal steps are surjective.
inline bool lim_functional_equal(const LimFunctional& a, const LimFunctional& b) {
  if (!(a.primal() == b.primal())) throw SystemMismatch();
  require_surjective(a.primal(), std::max(a.level(), b.level()));
  return germ_equal(a.germ(), b.germ());
}

/// A dual germ <n, +-e_j> that is nonzero on t, taken at the first level where t is nonzero.
inline LimFunctional separating_dual_germ(const Thread& t, std::size_t depth) {
  if (t.verified_depth() < depth) throw DepthInsufficient(depth, t.verified_depth());
  for (std::size_t n = 1; n <= depth; ++n) {
    const FinVector c = t.component(n);
    for (std::size_t j = 0; j < c.dim(); ++j) {
      if (c[j] == 0) continue;
      FinVector psi = FinVector::unit(c.dim(), j);
      if (c[j] < 0) psi = -psi;
      return LimFunctional(t.system(), n, std::move(psi));
    }
  }
  throw AllZeroUpToDepth(depth);
}

/// A dual thread that is nonzero on a: the section of the dual system through
/// +-e_j at a's level. Needs injective interval preserving steps up to depth.
inline ColimFunctional separating_dual_thread(const ColimElement& a, std::size_t depth) {
  const DirectSystem& s = a.system();
  const std::size_t n = a.level();
  const Classification c = classify(s, std::max(depth, n));
  if (!c.all_injective) throw InjectivityRequired(n);
  if (!c.all_interval_preserving) throw PreconditionViolated("separating dual thread needs interval preserving steps");
  const FinVector& u = a.vector();
  for (std::size_t j = 0; j < u.dim(); ++j) {
    if (u[j] == 0) continue;
    FinVector phi = FinVector::unit(u.dim(), j);
    if (u[j] < 0) phi = -phi;
    Thread t = section_thread(dual_of_direct(s), n, phi);
    verify_thread(t, std::max(depth, n));
    return ColimFunctional(s, std::move(t));
  }
  throw PreconditionViolated("the zero germ has no separating functional");
}

struct SumProductReport {
  std::vector<std::size_t> dims;
  Matrix t_map;  // dual of the sum -> product of duals
  Matrix s_map;  // product of duals -> dual of the sum
  bool s_after_t_identity = false;
  bool t_after_s_identity = false;
  bool both_positive = false;
  bool lattice_homomorphisms = false;
  bool interval_preserving = false;
  std::size_t pairing_checks = 0;
  bool pairing_agrees = true;
  bool order_duals_coincide = true;

  bool passed() const {
    return s_after_t_identity && t_after_s_identity && both_positive && lattice_homomorphisms &&
           interval_preserving && pairing_agrees;
  }
};

/// Checks on the K-fold coordinate model that restricting a functional on the
/// sum to each summand (T) and summing componentwise functionals (S) are mutually
/// inverse lattice isomorphisms. samples gives (phi, u) pairs for the pairing identity.
inline SumProductReport truncated_sum_product_duality(const std::vector<std::size_t>& dims,
                                                      const std::vector<std::pair<FinVector, FinVector>>& samples = {}) {
  SumProductReport r;
  r.dims = dims;
  std::size_t total = 0;
  for (auto d : dims) total += d;
  // Block inclusions iota_k : R^d_k -> R^D and projections pi_k : R^D -> R^d_k.
  std::vector<Matrix> iota;
  std::vector<Matrix> pi;
  std::size_t offset = 0;
  for (auto d : dims) {
    Matrix in(total, d);
    Matrix pr(d, total);
    for (std::size_t i = 0; i < d; ++i) {
      in(offset + i, i) = 1;
      pr(i, offset + i) = 1;
    }
    iota.push_back(std::move(in));
    pi.push_back(std::move(pr));
    offset += d;
  }
  // T phi = (phi o iota_k)_k, stacked; S (phi_k)_k = sum_k phi_k o pi_k.
  Matrix t(total, total);
  Matrix s(total, total);
  offset = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const Matrix restrict_k = iota[k].transpose();
    const Matrix extend_k = pi[k].transpose();
    for (std::size_t i = 0; i < dims[k]; ++i) {
      for (std::size_t j = 0; j < total; ++j) {
        t(offset + i, j) = restrict_k(i, j);
        s(j, offset + i) = extend_k(j, i);
      }
    }
    offset += dims[k];
  }
  r.s_after_t_identity = s * t == Matrix::identity(total);
  r.t_after_s_identity = t * s == Matrix::identity(total);
  r.both_positive = t.is_nonnegative() && s.is_nonnegative();
  try {
    const CanonicalHom th = canonicalize(t);
    const CanonicalHom sh = canonicalize(s);
    r.lattice_homomorphisms = true;
    r.interval_preserving = is_interval_preserving(th) && is_interval_preserving(sh);
  } catch (const NotLatticeHom&) {
    r.lattice_homomorphisms = false;
  }
  for (const auto& [phi, u] : samples) {
    if (phi.dim() != total || u.dim() != total) throw DimensionMismatch(total, phi.dim());
    const FinVector tphi = t.apply(phi);
    Scalar blockwise = 0;
    offset = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const FinVector uk = pi[k].apply(u);
      for (std::size_t i = 0; i < dims[k]; ++i) blockwise += tphi[offset + i] * uk[i];
      offset += dims[k];
    }
    ++r.pairing_checks;
    if (blockwise != dot(phi, u) || dot(s.apply(tphi), u) != dot(phi, u)) r.pairing_agrees = false;
  }
  r.t_map = std::move(t);
  r.s_map = std::move(s);
  return r;
}

}  // namespace riesz
