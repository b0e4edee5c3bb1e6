#pragma once

// Elements of the inverse limit of an InverseSystem: threads, i.e. lazily
// generated families (t_k) with step(k) t_{k+1} = t_k. Components are memoized;
// compatibility is certified up to verified_depth() and never beyond.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>

#include "riesz/error.hpp"
#include "riesz/hom.hpp"
#include "riesz/system.hpp"
#include "riesz/vector.hpp"

namespace riesz {

class Thread {
 public:
  using Rule = std::function<FinVector(std::size_t)>;

  /// rule_name is non-empty only for built-in rules; provenance describes how the thread was made.
  Thread(InverseSystem system, Rule rule, std::string rule_name = {}, std::string provenance = {})
      : st_(std::make_shared<State>(std::move(system), std::move(rule), std::move(rule_name), std::move(provenance))) {}

  const InverseSystem& system() const noexcept { return st_->system; }
  const std::string& rule_name() const noexcept { return st_->rule_name; }
  const std::string& provenance() const noexcept { return st_->provenance; }

  /// Component k; memoized. Concurrent requests may both compute, the first insert wins.
  FinVector component(std::size_t k) const {
    if (k == 0) throw PreconditionViolated("levels start at 1");
    {
      std::lock_guard lock(st_->mu);
      if (auto it = st_->memo.find(k); it != st_->memo.end()) return it->second;
    }
    FinVector v = st_->rule(k);
    const std::size_t d = st_->system.dim(k);
    if (v.dim() != d) throw DimensionMismatch(d, v.dim());
    std::lock_guard lock(st_->mu);
    return st_->memo.emplace(k, std::move(v)).first->second;
  }

  /// Compatibility holds on levels 1..verified_depth().
  std::size_t verified_depth() const noexcept { return st_->verified.load(); }

  void note_verified(std::size_t depth) const {
    std::size_t cur = st_->verified.load();
    while (cur < depth && !st_->verified.compare_exchange_weak(cur, depth)) {
    }
  }

  bool same_as(const Thread& other) const noexcept { return st_ == other.st_; }

 private:
  struct State {
    State(InverseSystem s, Rule r, std::string n, std::string p)
        : system(std::move(s)), rule(std::move(r)), rule_name(std::move(n)), provenance(std::move(p)) {}
    InverseSystem system;
    Rule rule;
    std::string rule_name;
    std::string provenance;
    std::mutex mu;
    std::map<std::size_t, FinVector> memo;
    std::atomic<std::size_t> verified{0};
  };

  std::shared_ptr<State> st_;
};

inline Thread thread_from_rule(const InverseSystem& s, Thread::Rule rule, std::string name = {}) {
  std::string prov = name.empty() ? "rule" : "rule " + name;
  return Thread(s, std::move(rule), std::move(name), std::move(prov));
}

inline Thread zero_thread(const InverseSystem& s) {
  return thread_from_rule(s, [s](std::size_t k) { return FinVector(s.dim(k)); }, "zero");
}

inline Thread ones_thread(const InverseSystem& s) {
  return thread_from_rule(s, [s](std::size_t k) { return FinVector::constant(s.dim(k), 1); }, "ones");
}

inline FinVector projection(const Thread& t, std::size_t n) { return t.component(n); }

/// Checks step(k) t_{k+1} = t_k for k = 1..depth-1.
inline void verify_thread(const Thread& t, std::size_t depth) {
  if (depth == 0) throw PreconditionViolated("verification depth must be at least 1");
  for (std::size_t k = std::max<std::size_t>(t.verified_depth(), 1); k < depth; ++k) {
    if (t.system().step(k).apply(t.component(k + 1)) != t.component(k)) throw CompatibilityError(k);
  }
  (void)t.component(depth);
  t.note_verified(depth);
}

/// The thread through u at level n0: steps below, the zero-extension right inverse above.
inline Thread section_thread(const InverseSystem& s, std::size_t n0, const FinVector& u) {
  if (u.dim() != s.dim(n0)) throw DimensionMismatch(s.dim(n0), u.dim());
  require_surjective(s, n0);
  Thread::Rule rule = [s, n0, u](std::size_t k) {
    if (k <= n0) return connecting_inv(s, n0, k).apply(u);
    FinVector v = u;
    for (std::size_t j = n0; j < k; ++j) {
      const CanonicalHom h = s.step(j);
      if (!is_surjective(h)) throw SurjectivityRequired(j);
      v = *preimage(h, v);
    }
    return v;
  };
  return Thread(s, std::move(rule), {}, "section at level " + std::to_string(n0) + " by zero-extension right inverses");
}

namespace detail {

inline void require_same_system(const Thread& a, const Thread& b) {
  if (!(a.system() == b.system())) throw SystemMismatch();
}

template <class Op>
Thread thread_binary(const Thread& a, const Thread& b, Op op, const char* what) {
  require_same_system(a, b);
  Thread t(a.system(), [a, b, op](std::size_t k) { return op(a.component(k), b.component(k)); }, {},
           std::string("pointwise ") + what);
  t.note_verified(std::min(a.verified_depth(), b.verified_depth()));
  return t;
}

}  // namespace detail

// Steps are lattice homomorphisms, so pointwise combinations of compatible
// families stay compatible on the common verified prefix.

inline Thread join(const Thread& a, const Thread& b) {
  return detail::thread_binary(a, b, [](const FinVector& u, const FinVector& v) { return join(u, v); }, "join");
}

inline Thread meet(const Thread& a, const Thread& b) {
  return detail::thread_binary(a, b, [](const FinVector& u, const FinVector& v) { return meet(u, v); }, "meet");
}

inline Thread operator+(const Thread& a, const Thread& b) {
  return detail::thread_binary(a, b, [](const FinVector& u, const FinVector& v) { return u + v; }, "sum");
}

inline Thread operator*(const Scalar& c, const Thread& a) {
  Thread t(a.system(), [a, c](std::size_t k) { return c * a.component(k); }, {}, "pointwise scaling");
  t.note_verified(a.verified_depth());
  return t;
}

inline Thread abs(const Thread& a) {
  Thread t(a.system(), [a](std::size_t k) { return abs(a.component(k)); }, {}, "pointwise abs");
  t.note_verified(a.verified_depth());
  return t;
}

inline bool thread_equal_upto(const Thread& a, const Thread& b, std::size_t depth) {
  detail::require_same_system(a, b);
  for (std::size_t k = 1; k <= depth; ++k) {
    if (a.component(k) != b.component(k)) return false;
  }
  return true;
}

/// |xs[k-1]| <= t_k for k = 1..xs.size().
inline bool majorises_upto(const Thread& t, std::span<const FinVector> xs) {
  for (std::size_t k = 1; k <= xs.size(); ++k) {
    if (!leq(abs(xs[k - 1]), t.component(k))) return false;
  }
  return true;
}

/// A positive thread majorising x_1..x_K on the first K levels: the sum of the sections through |x_k|.
inline Thread majorant_upto(const InverseSystem& s, std::span<const FinVector> xs) {
  Thread t = zero_thread(s);
  t.note_verified(std::max<std::size_t>(xs.size(), 1));
  for (std::size_t k = 1; k <= xs.size(); ++k) {
    Thread sec = section_thread(s, k, abs(xs[k - 1]));
    verify_thread(sec, xs.size());
    t = t + sec;
  }
  return t;
}

/// The map between inverse limits induced by a system morphism: (t_k) -> (T_k t_k).
inline Thread induced_limit_map(const InverseMorphism& m, const Thread& t) {
  if (!(t.system() == m.source())) throw SystemMismatch();
  return Thread(m.target(), [m, t](std::size_t k) { return m.at(k).apply(t.component(k)); }, {},
                "image under a system morphism");
}

}  // namespace riesz
