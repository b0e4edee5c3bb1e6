#pragma once

// Sequential direct and inverse systems of coordinate lattices over levels
// 1, 2, 3, ... with the connecting-map calculus, classification, dual systems
// and system morphisms.
//
// Direct:  step(k) : R^dim(k)   -> R^dim(k+1)
// Inverse: step(k) : R^dim(k+1) -> R^dim(k)

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riesz/error.hpp"
#include "riesz/hom.hpp"

namespace riesz {

enum class Orientation { direct, inverse };

constexpr Orientation opposite(Orientation o) {
  return o == Orientation::direct ? Orientation::inverse : Orientation::direct;
}

inline std::string_view to_string(Orientation o) { return o == Orientation::direct ? "direct" : "inverse"; }

/// How a system continues past its explicit prefix.
enum class ExtensionRule { none, inclusion, restriction, repeat_last };

inline std::string_view to_string(ExtensionRule r) {
  switch (r) {
    case ExtensionRule::none: return "none";
    case ExtensionRule::inclusion: return "inclusion";
    case ExtensionRule::restriction: return "restriction";
    case ExtensionRule::repeat_last: return "repeat_last";
  }
  return "none";
}

inline std::optional<ExtensionRule> parse_extension_rule(std::string_view s) {
  if (s == "none") return ExtensionRule::none;
  if (s == "inclusion") return ExtensionRule::inclusion;
  if (s == "restriction") return ExtensionRule::restriction;
  if (s == "repeat_last") return ExtensionRule::repeat_last;
  return std::nullopt;
}

/// The rule of the dual system: transposes turn inclusions into restrictions.
constexpr ExtensionRule dual_rule(ExtensionRule r) {
  switch (r) {
    case ExtensionRule::inclusion: return ExtensionRule::restriction;
    case ExtensionRule::restriction: return ExtensionRule::inclusion;
    default: return r;
  }
}

template <Orientation O>
class SequentialSystem {
 public:
  using DimFn = std::function<std::size_t(std::size_t)>;
  using StepFn = std::function<CanonicalHom(std::size_t)>;
  using Dual = SequentialSystem<opposite(O)>;

  static constexpr Orientation orientation = O;

  SequentialSystem() = delete;

  /// dims[k-1] = dim(k) for k = 1..L, steps[k-1] = step(k) for k = 1..L-1.
  static SequentialSystem from_prefix(std::vector<std::size_t> dims, std::vector<CanonicalHom> steps,
                                      ExtensionRule rule, std::string name = {}) {
    if (dims.empty()) throw PreconditionViolated("a system needs at least one level");
    if (steps.size() + 1 != dims.size()) throw DimensionMismatch(dims.size() - 1, steps.size());
    if (std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end()) {
      throw PreconditionViolated("dimensions must be positive");
    }
    if (rule == ExtensionRule::inclusion && O != Orientation::direct) {
      throw PreconditionViolated("the inclusion rule applies to direct systems");
    }
    if (rule == ExtensionRule::restriction && O != Orientation::inverse) {
      throw PreconditionViolated("the restriction rule applies to inverse systems");
    }
    if (rule == ExtensionRule::repeat_last) {
      if (dims.size() < 2) throw PreconditionViolated("repeat_last needs at least two levels");
      if (dims.back() < dims[dims.size() - 2]) throw PreconditionViolated("repeat_last needs a non-decreasing last step");
    }
    for (std::size_t k = 1; k < dims.size(); ++k) check_step_shape(steps[k - 1], k, dims[k - 1], dims[k]);

    auto st = std::make_shared<State>();
    st->name = std::move(name);
    st->rule = rule;
    st->prefix_len = dims.size();
    st->prefix_dims = std::move(dims);
    st->prefix_steps = std::move(steps);
    return SequentialSystem(std::move(st));
  }

  /// A system given by arbitrary generators; they must be pure.
  static SequentialSystem from_generators(DimFn dim, StepFn step, std::string name = {}) {
    auto st = std::make_shared<State>();
    st->name = std::move(name);
    st->dim_fn = std::move(dim);
    st->step_fn = std::move(step);
    return SequentialSystem(std::move(st));
  }

  /// Levels 1, 2, ... with dim(k) = k + first - 1 and coordinate inclusions or restrictions.
  static SequentialSystem standard_chain(std::size_t first = 1) {
    const auto rule = O == Orientation::direct ? ExtensionRule::inclusion : ExtensionRule::restriction;
    return from_prefix({first}, {}, rule, O == Orientation::direct ? "inclusion chain" : "restriction chain");
  }

  std::size_t dim(std::size_t level) const {
    require_level(level);
    if (st_->prefix_len) {
      const std::size_t len = *st_->prefix_len;
      if (level <= len) return st_->prefix_dims[level - 1];
      switch (st_->rule) {
        case ExtensionRule::none: throw ExtensionExhausted(level);
        case ExtensionRule::inclusion:
        case ExtensionRule::restriction: return st_->prefix_dims.back() + (level - len);
        case ExtensionRule::repeat_last: {
          const std::size_t delta = st_->prefix_dims[len - 1] - st_->prefix_dims[len - 2];
          return st_->prefix_dims.back() + delta * (level - len);
        }
      }
    }
    {
      std::lock_guard lock(st_->mu);
      if (auto it = st_->dim_memo.find(level); it != st_->dim_memo.end()) return it->second;
    }
    const std::size_t d = st_->dim_fn(level);
    if (d == 0) throw PreconditionViolated("dimension generator returned 0 at level " + std::to_string(level));
    std::lock_guard lock(st_->mu);
    st_->dim_memo.emplace(level, d);
    return d;
  }

  /// The connecting map between levels k and k+1.
  CanonicalHom step(std::size_t level) const {
    require_level(level);
    if (st_->prefix_len && level < *st_->prefix_len) return st_->prefix_steps[level - 1];
    {
      std::lock_guard lock(st_->mu);
      if (auto it = st_->step_memo.find(level); it != st_->step_memo.end()) return it->second;
    }
    CanonicalHom h = generate_step(level);
    check_step_shape(h, level, dim(level), dim(level + 1));
    std::lock_guard lock(st_->mu);
    return st_->step_memo.emplace(level, std::move(h)).first->second;
  }

  /// Length of the explicit prefix; empty for generator-backed systems.
  std::optional<std::size_t> prefix_levels() const noexcept { return st_->prefix_len; }
  ExtensionRule rule() const noexcept { return st_->rule; }
  const std::string& name() const noexcept { return st_->name; }

  /// Largest level up to which the system is defined; empty when unbounded.
  std::optional<std::size_t> max_level() const noexcept {
    if (st_->bounded) return st_->bounded;
    if (st_->prefix_len && st_->rule == ExtensionRule::none) return st_->prefix_len;
    return std::nullopt;
  }

  /// Identity of the underlying system, not structural equality.
  friend bool operator==(const SequentialSystem& a, const SequentialSystem& b) noexcept { return a.st_ == b.st_; }

  /// Levelwise adjoints, canonicalized. Memoized so that repeated calls return the same system.
  Dual dual() const {
    std::lock_guard lock(st_->dual_mu);
    if (auto cached = st_->dual_cache.lock()) {
      return Dual(std::static_pointer_cast<typename Dual::State>(cached));
    }
    const SequentialSystem primal = *this;
    Dual d = Dual::from_generators([primal](std::size_t k) { return primal.dim(k); },
                                   [primal](std::size_t k) { return canonicalize(adjoint(primal.step(k))); },
                                   "dual of " + (st_->name.empty() ? std::string("system") : st_->name));
    d.st_->metadata_prefix_len = rule_prefix_levels();
    d.st_->rule = dual_rule(st_->rule);
    d.st_->bounded = max_level();
    st_->dual_cache = d.st_;
    return d;
  }

  /// Prefix length that rule() refers to; for a dual system it is inherited from the primal.
  std::optional<std::size_t> rule_prefix_levels() const noexcept {
    return st_->prefix_len ? st_->prefix_len : st_->metadata_prefix_len;
  }

  /// Highest level whose preceding steps are all known injective / surjective.
  std::size_t injective_verified() const noexcept { return st_->injective_upto.load(); }
  std::size_t surjective_verified() const noexcept { return st_->surjective_upto.load(); }

  void mark_injective_upto(std::size_t m) const { max_merge(st_->injective_upto, m); }
  void mark_surjective_upto(std::size_t m) const { max_merge(st_->surjective_upto, m); }

 private:
  template <Orientation>
  friend class SequentialSystem;

  struct State {
    std::string name;
    ExtensionRule rule = ExtensionRule::none;
    std::optional<std::size_t> prefix_len;
    std::vector<std::size_t> prefix_dims;
    std::vector<CanonicalHom> prefix_steps;
    DimFn dim_fn;
    StepFn step_fn;
    std::optional<std::size_t> metadata_prefix_len;
    std::optional<std::size_t> bounded;

    std::mutex mu;
    std::map<std::size_t, std::size_t> dim_memo;
    std::map<std::size_t, CanonicalHom> step_memo;

    std::mutex dual_mu;
    std::weak_ptr<void> dual_cache;

    std::atomic<std::size_t> injective_upto{1};
    std::atomic<std::size_t> surjective_upto{1};
  };

  explicit SequentialSystem(std::shared_ptr<State> st) : st_(std::move(st)) {}

  static void max_merge(std::atomic<std::size_t>& a, std::size_t v) {
    std::size_t cur = a.load();
    while (cur < v && !a.compare_exchange_weak(cur, v)) {
    }
  }

  static void require_level(std::size_t level) {
    if (level == 0) throw PreconditionViolated("levels start at 1");
  }

  static void check_step_shape(const CanonicalHom& h, std::size_t level, std::size_t lo, std::size_t hi) {
    const std::size_t dom = O == Orientation::direct ? lo : hi;
    const std::size_t cod = O == Orientation::direct ? hi : lo;
    if (h.dom_dim() != dom) throw DimensionMismatch(dom, h.dom_dim());
    if (h.cod_dim() != cod) throw DimensionMismatch(cod, h.cod_dim());
    (void)level;
  }

  CanonicalHom generate_step(std::size_t level) const {
    if (!st_->prefix_len) {
      if (st_->bounded && level >= *st_->bounded) throw ExtensionExhausted(level + 1);
      return st_->step_fn(level);
    }
    const std::size_t lo = dim(level);
    const std::size_t hi = dim(level + 1);
    switch (st_->rule) {
      case ExtensionRule::none: throw ExtensionExhausted(level + 1);
      case ExtensionRule::inclusion: return CanonicalHom::inclusion(lo, hi);
      case ExtensionRule::restriction: return CanonicalHom::restriction(hi, lo);
      case ExtensionRule::repeat_last: {
        const CanonicalHom& last = st_->prefix_steps.back();
        const std::size_t base = st_->prefix_dims[st_->prefix_dims.size() - 2];
        return direct_sum(CanonicalHom::identity(lo - base), last);
      }
    }
    throw ExtensionExhausted(level + 1);
  }

  std::shared_ptr<State> st_;
};

using DirectSystem = SequentialSystem<Orientation::direct>;
using InverseSystem = SequentialSystem<Orientation::inverse>;

inline InverseSystem dual_of_direct(const DirectSystem& s) { return s.dual(); }
inline DirectSystem dual_of_inverse(const InverseSystem& s) { return s.dual(); }

/// e_{n,m} : R^dim(n) -> R^dim(m), the composite of steps n..m-1.
inline CanonicalHom connecting(const DirectSystem& s, std::size_t n, std::size_t m) {
  if (n > m) throw PreconditionViolated("connecting map needs n <= m");
  CanonicalHom h = CanonicalHom::identity(s.dim(n));
  for (std::size_t k = n; k < m; ++k) h = compose(s.step(k), h);
  return h;
}

/// p_{m,n} : R^dim(m) -> R^dim(n), the composite of steps m-1 down to n.
inline CanonicalHom connecting_inv(const InverseSystem& s, std::size_t m, std::size_t n) {
  if (n > m) throw PreconditionViolated("connecting map needs m >= n");
  CanonicalHom h = CanonicalHom::identity(s.dim(m));
  for (std::size_t k = m; k-- > n;) h = compose(s.step(k), h);
  return h;
}

struct StepInfo {
  std::size_t level = 0;
  std::size_t dom = 0;
  std::size_t cod = 0;
  bool injective = false;
  bool surjective = false;
  bool interval_preserving = false;
  std::optional<Band> image;
};

struct Classification {
  bool all_injective = true;
  bool all_surjective = true;
  bool all_interval_preserving = true;
  bool images_are_bands = true;
  std::vector<StepInfo> steps;
};

inline StepInfo describe_step(const CanonicalHom& h, std::size_t level) {
  return {level, h.dom_dim(), h.cod_dim(), is_injective(h), is_surjective(h), is_interval_preserving(h),
          image_band(h)};
}

/// Conjunction of the step predicates over levels 1..depth (steps 1..depth-1).
template <Orientation O>
Classification classify(const SequentialSystem<O>& s, std::size_t depth) {
  if (depth == 0) throw PreconditionViolated("classification depth must be at least 1");
  Classification c;
  for (std::size_t k = 1; k < depth; ++k) {
    StepInfo info = describe_step(s.step(k), k);
    c.all_injective = c.all_injective && info.injective;
    c.all_surjective = c.all_surjective && info.surjective;
    c.all_interval_preserving = c.all_interval_preserving && info.interval_preserving;
    c.images_are_bands = c.images_are_bands && info.image.has_value();
    c.steps.push_back(std::move(info));
  }
  if (c.all_injective) s.mark_injective_upto(depth);
  if (c.all_surjective) s.mark_surjective_upto(depth);
  return c;
}

/// Throws InjectivityRequired(k) for the first non-injective step k < m.
template <Orientation O>
void require_injective(const SequentialSystem<O>& s, std::size_t m) {
  for (std::size_t k = s.injective_verified(); k < m; ++k) {
    if (!is_injective(s.step(k))) throw InjectivityRequired(k);
    s.mark_injective_upto(k + 1);
  }
}

/// Throws SurjectivityRequired(k) for the first non-surjective step k < m.
template <Orientation O>
void require_surjective(const SequentialSystem<O>& s, std::size_t m) {
  for (std::size_t k = s.surjective_verified(); k < m; ++k) {
    if (!is_surjective(s.step(k))) throw SurjectivityRequired(k);
    s.mark_surjective_upto(k + 1);
  }
}

/// Levelwise lattice homomorphisms T_k : R^src.dim(k) -> R^dst.dim(k).
template <Orientation O>
class SystemMorphism {
 public:
  using System = SequentialSystem<O>;
  using LevelFn = std::function<CanonicalHom(std::size_t)>;

  SystemMorphism(System src, System dst, LevelFn levelwise)
      : src_(std::move(src)), dst_(std::move(dst)), fn_(std::move(levelwise)) {}

  static SystemMorphism identity(const System& s) {
    return SystemMorphism(s, s, [s](std::size_t k) { return CanonicalHom::identity(s.dim(k)); });
  }

  const System& source() const noexcept { return src_; }
  const System& target() const noexcept { return dst_; }

  CanonicalHom at(std::size_t level) const {
    CanonicalHom h = fn_(level);
    if (h.dom_dim() != src_.dim(level)) throw DimensionMismatch(src_.dim(level), h.dom_dim());
    if (h.cod_dim() != dst_.dim(level)) throw DimensionMismatch(dst_.dim(level), h.cod_dim());
    return h;
  }

 private:
  System src_;
  System dst_;
  LevelFn fn_;
};

using DirectMorphism = SystemMorphism<Orientation::direct>;
using InverseMorphism = SystemMorphism<Orientation::inverse>;

/// Verifies the commuting squares between levels k and k+1 for k = 1..depth-1.
template <Orientation O>
void check_morphism(const SystemMorphism<O>& t, std::size_t depth) {
  const auto& a = t.source();
  const auto& b = t.target();
  for (std::size_t k = 1; k < depth; ++k) {
    const bool ok = O == Orientation::direct ? compose(t.at(k + 1), a.step(k)) == compose(b.step(k), t.at(k))
                                             : compose(t.at(k), a.step(k)) == compose(b.step(k), t.at(k + 1));
    if (!ok) throw SquareFails(k);
  }
  if (depth >= 1) (void)t.at(depth);
}

}  // namespace riesz
