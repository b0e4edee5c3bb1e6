#pragma once

// Seeded generators for rationals, vectors, canonical homs and chains.
// Trial i of a run uses its own engine seeded from (seed, i), so results do not
// depend on the order in which trials are executed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "riesz/hom.hpp"
#include "riesz/scalar.hpp"
#include "riesz/system.hpp"
#include "riesz/vector.hpp"

namespace riesz {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  static constexpr long kBound = 16;

  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  /// Independent stream for trial i.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(splitmix64(seed) ^ splitmix64(~trial)); }

  std::mt19937_64& engine() noexcept { return eng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_); }
  bool chance(int num, int den) { return integer(1, den) <= num; }

  /// num/den with |num| <= 16 and 1 <= den <= 16.
  Scalar rational() { return make(integer(-kBound, kBound), integer(1, kBound)); }
  Scalar nonneg_rational() { return make(integer(0, kBound), integer(1, kBound)); }
  Scalar positive_rational() { return make(integer(1, kBound), integer(1, kBound)); }

  FinVector vector(std::size_t dim) {
    FinVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rational();
    return v;
  }

  FinVector nonneg_vector(std::size_t dim) {
    FinVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = chance(1, 4) ? Scalar(0) : nonneg_rational();
    return v;
  }

  /// Some 0 <= v <= bound, coordinatewise a random fraction of the bound.
  FinVector below(const FinVector& bound) {
    FinVector v(bound.dim());
    for (std::size_t i = 0; i < bound.dim(); ++i) v[i] = bound[i] * make(integer(0, kBound), kBound);
    return v;
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), eng_);
    return p;
  }

 private:
  static Scalar make(long num, long den) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  std::mt19937_64 eng_;
};

enum class HomKind { general, interval_preserving, injective_ip, surjective, bijective };

/// A random canonical hom R^n -> R^m of the requested kind. Needs m >= n for
/// injective_ip, n >= m for surjective and n == m for bijective.
inline CanonicalHom random_hom(Rng& rng, std::size_t n, std::size_t m, HomKind kind) {
  FinVector w(m);
  CanonicalHom::Index idx(m);
  switch (kind) {
    case HomKind::general:
      for (std::size_t x = 0; x < m; ++x) {
        if (rng.chance(1, 4)) continue;
        w[x] = rng.positive_rational();
        idx[x] = rng.index(0, n - 1);
      }
      break;
    case HomKind::interval_preserving: {
      const auto rows = rng.permutation(m);
      const auto cols = rng.permutation(n);
      const std::size_t used = rng.index(0, std::min(n, m));
      for (std::size_t k = 0; k < used; ++k) {
        w[rows[k]] = rng.positive_rational();
        idx[rows[k]] = cols[k];
      }
      break;
    }
    case HomKind::injective_ip: {
      if (m < n) throw PreconditionViolated("injective interval preserving hom needs m >= n");
      const auto rows = rng.permutation(m);
      for (std::size_t j = 0; j < n; ++j) {
        w[rows[j]] = rng.positive_rational();
        idx[rows[j]] = j;
      }
      break;
    }
    case HomKind::surjective:
    case HomKind::bijective: {
      if (n < m || (kind == HomKind::bijective && n != m)) throw PreconditionViolated("dimension shape does not fit");
      const auto cols = rng.permutation(n);
      for (std::size_t x = 0; x < m; ++x) {
        w[x] = rng.positive_rational();
        idx[x] = cols[x];
      }
      break;
    }
  }
  return CanonicalHom(n, std::move(w), std::move(idx));
}

/// A direct chain of `levels` levels with injective interval preserving steps, dims 1..max_dim.
inline DirectSystem random_injective_chain(Rng& rng, std::size_t levels, std::size_t max_dim = 8) {
  std::vector<std::size_t> dims{rng.index(1, 3)};
  std::vector<CanonicalHom> steps;
  for (std::size_t k = 1; k < levels; ++k) {
    const std::size_t next = std::min(max_dim, dims.back() + rng.index(0, 2));
    steps.push_back(random_hom(rng, dims.back(), next, HomKind::injective_ip));
    dims.push_back(next);
  }
  return DirectSystem::from_prefix(std::move(dims), std::move(steps), ExtensionRule::none, "random injective chain");
}

/// An inverse chain of `levels` levels with surjective steps, dims 1..max_dim.
inline InverseSystem random_surjective_chain(Rng& rng, std::size_t levels, std::size_t max_dim = 8) {
  std::vector<std::size_t> dims{rng.index(1, 3)};
  std::vector<CanonicalHom> steps;
  for (std::size_t k = 1; k < levels; ++k) {
    const std::size_t next = std::min(max_dim, dims.back() + rng.index(0, 2));
    steps.push_back(random_hom(rng, next, dims.back(), HomKind::surjective));
    dims.push_back(next);
  }
  return InverseSystem::from_prefix(std::move(dims), std::move(steps), ExtensionRule::none, "random surjective chain");
}

/// A chain of `levels` levels with arbitrary lattice homomorphisms as steps.
template <Orientation O>
SequentialSystem<O> random_chain(Rng& rng, std::size_t levels, std::size_t max_dim = 6) {
  std::vector<std::size_t> dims{rng.index(1, max_dim)};
  std::vector<CanonicalHom> steps;
  for (std::size_t k = 1; k < levels; ++k) {
    const std::size_t next = rng.index(1, max_dim);
    steps.push_back(O == Orientation::direct ? random_hom(rng, dims.back(), next, HomKind::general)
                                             : random_hom(rng, next, dims.back(), HomKind::general));
    dims.push_back(next);
  }
  return SequentialSystem<O>::from_prefix(std::move(dims), std::move(steps), ExtensionRule::none, "random chain");
}

}  // namespace riesz
