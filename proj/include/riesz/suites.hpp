#pragma once

// Named property suites. Each property counts its checks and keeps the
// smallest failing case it saw. Trial i draws from Rng::for_trial(seed, i).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "riesz/carrier.hpp"
#include "riesz/colimit.hpp"
#include "riesz/duality.hpp"
#include "riesz/error.hpp"
#include "riesz/feasibility.hpp"
#include "riesz/hom.hpp"
#include "riesz/limit.hpp"
#include "riesz/random.hpp"
#include "riesz/system.hpp"

namespace riesz {

struct PropertyResult {
  std::string name;
  std::string claim;
  bool passed = true;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;
  std::size_t counterexample_size = std::numeric_limits<std::size_t>::max();

  PropertyResult(std::string n, std::string c) : name(std::move(n)), claim(std::move(c)) {}

  /// size orders failing cases; the smallest one is kept.
  void record(bool ok, std::size_t size, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    passed = false;
    if (size < counterexample_size) {
      counterexample_size = size;
      counterexample = describe();
    }
  }
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 0;  // 0: suite default
  std::size_t depth = 0;   // 0: suite default
};

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t depth = 0;
  std::vector<PropertyResult> results;
  std::vector<std::string> notes;
  std::vector<ReportTable> tables;

  bool passed() const {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
  }
};

namespace detail {

template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

/// Runs body; a library error counts as a failed check of p.
template <class F>
void guarded(PropertyResult& p, std::size_t size, const std::string& where, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    p.record(false, size, [&] { return where + ": unexpected error: " + e.what(); });
  }
}

/// A fresh thread with the same components, so that verification starts from scratch.
inline Thread unverified_copy(const Thread& t) {
  return Thread(t.system(), [t](std::size_t k) { return t.component(k); }, {}, "copy for re-verification");
}

inline Thread harmonic_thread(const InverseSystem& s) {
  return thread_from_rule(
      s,
      [s](std::size_t k) {
        FinVector v(s.dim(k));
        for (std::size_t i = 0; i < v.dim(); ++i) v[i] = Scalar(1, static_cast<unsigned long>(i + 1));
        return v;
      },
      "harmonic");
}

/// Largest value of phi.v + psi.(u - v) over the vertices of the box [0, u] (or smallest with take_min).
inline Scalar box_vertex_extremum(const FinVector& phi, const FinVector& psi, const FinVector& u, bool take_min) {
  std::optional<Scalar> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << u.dim()); ++mask) {
    FinVector v(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (mask >> i & 1U) v[i] = u[i];
    }
    const Scalar val = dot(phi, v) + dot(psi, u - v);
    if (!best || (take_min ? val < *best : val > *best)) best = val;
  }
  return *best;
}

/// Two rows of positive weight reading the same column, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> shared_column(const CanonicalHom& h) {
  std::map<std::size_t, std::size_t> first;
  for (std::size_t x = 0; x < h.cod_dim(); ++x) {
    const auto& j = h.index()[x];
    if (!j) continue;
    auto [it, fresh] = first.emplace(*j, x);
    if (!fresh) return std::make_pair(it->second, x);
  }
  return std::nullopt;
}

inline std::size_t pick(std::size_t given, std::size_t fallback) { return given ? given : fallback; }

}  // namespace detail

inline SuiteReport suite_adjoints(const SuiteConfig& cfg) {
  SuiteReport rep{"adjoints", cfg.seed, detail::pick(cfg.trials, 500), 0, {}, {}, {}};
  PropertyResult positive("adjoint-positive-and-pairing",
                          "The adjoint of a lattice homomorphism is a positive matrix with <A'phi, u> = <phi, h(u)>.");
  PropertyResult ip_hom("interval-preserving-adjoint-is-lattice-hom",
                        "If h is interval preserving then its adjoint is a lattice homomorphism.");
  PropertyResult hom_ip("lattice-hom-adjoint-is-interval-preserving",
                        "If h is a lattice homomorphism then its adjoint maps [0, phi] onto [0, A'phi] (20 probes).");
  PropertyResult iff("adjoint-hom-iff-interval-preserving",
                     "For canonical homs the adjoint is a lattice homomorphism exactly when h is interval preserving.");
  PropertyResult ann("surjective-adjoint-image-is-kernel-annihilator",
                     "For surjective h, psi is in the image of the adjoint iff psi vanishes on ker h.");

  for (std::size_t i = 0; i < rep.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    const std::size_t n = rng.index(1, 6);
    const std::size_t m = rng.index(1, 6);
    const HomKind kind = i % 3 == 0 ? HomKind::interval_preserving : HomKind::general;
    const CanonicalHom h = random_hom(rng, n, m, kind);
    const std::string where = "trial " + std::to_string(i) + " h = " + detail::show(h);
    const std::size_t size = n + m;
    detail::guarded(positive, size, where, [&] {
      const PositiveMatrix a = adjoint(h);
      const FinVector phi = rng.vector(m);
      const FinVector u = rng.vector(n);
      const bool ok = a.matrix().is_nonnegative() && a.rows() == n && a.cols() == m &&
                      dot(a.apply(phi), u) == dot(phi, h.apply(u));
      positive.record(ok, size, [&] { return where + " phi = " + detail::show(phi) + " u = " + detail::show(u); });
    });
    bool adjoint_is_hom = true;
    try {
      (void)canonicalize(adjoint(h));
    } catch (const NotLatticeHom&) {
      adjoint_is_hom = false;
    }
    if (is_interval_preserving(h)) {
      ip_hom.record(adjoint_is_hom, size, [&] { return where; });
    }
    iff.record(adjoint_is_hom == is_interval_preserving(h), size, [&] { return where; });
    detail::guarded(hom_ip, size, where, [&] {
      const PositiveMatrix a = adjoint(h);
      for (int p = 0; p < 20; ++p) {
        const FinVector phi = rng.nonneg_vector(m);
        const FinVector psi = rng.below(a.apply(phi));
        hom_ip.record(interval_preserving_oracle(a, phi, psi), size,
                      [&] { return where + " phi = " + detail::show(phi) + " psi = " + detail::show(psi); });
      }
    });
    detail::guarded(ann, size, where, [&] {
      const std::size_t n2 = rng.index(1, 6);
      const std::size_t m2 = rng.index(1, n2);
      const CanonicalHom g = random_hom(rng, n2, m2, HomKind::surjective);
      const auto kernel = kernel_basis(g.to_matrix().matrix());
      const Matrix at = adjoint(g).matrix();
      auto vanishes = [&](const FinVector& psi) {
        return std::all_of(kernel.begin(), kernel.end(), [&](const FinVector& k) { return dot(psi, k) == 0; });
      };
      const FinVector in_image = at.apply(rng.vector(m2));
      const FinVector any = rng.vector(n2);
      const bool ok = vanishes(in_image) && solve(at, in_image).has_value() &&
                      solve(at, any).has_value() == vanishes(any);
      ann.record(ok, n2 + m2, [&] { return "g = " + detail::show(g) + " psi = " + detail::show(any); });
    });
  }
  rep.results = {positive, ip_hom, hom_ip, iff, ann};
  return rep;
}

inline SuiteReport suite_interval_oracle(const SuiteConfig& cfg) {
  SuiteReport rep{"interval-oracle", cfg.seed, detail::pick(cfg.trials, 200), 0, {}, {}, {}};
  PropertyResult agree("predicate-true-oracle-feasible",
                       "An interval preserving canonical hom passes the exact oracle on every probe 0 <= v <= h(u).");
  PropertyResult witness("predicate-false-witness-infeasible",
                         "If two rows read the same column j, u = e_j and v = w_x e_x is a probe the oracle rejects.");
  PropertyResult routes("fourier-motzkin-agrees-with-simplex",
                        "Fourier-Motzkin elimination and phase-one simplex decide every oracle system identically.");
  PropertyResult band("injective-ip-image-is-band",
                      "The image of an injective interval preserving hom is exactly the coordinate band coz(w).");
  PropertyResult inverse("injective-ip-preimage-inverts",
                         "On its image band an injective interval preserving hom is inverted exactly by preimage.");
  PropertyResult iso("injective-ip-lattice-isomorphism",
                     "The inverse on the image band preserves joins and meets.");

  for (std::size_t i = 0; i < rep.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    const std::size_t n = rng.index(1, 6);
    const std::size_t m = rng.index(1, 6);
    CanonicalHom h = random_hom(rng, n, m, i % 2 == 0 ? HomKind::interval_preserving : HomKind::general);
    if (i % 2 == 1 && m >= 2 && is_interval_preserving(h)) {
      // Force two rows onto one column.
      FinVector w = h.weight();
      CanonicalHom::Index idx = h.index();
      const std::size_t j = rng.index(0, n - 1);
      for (std::size_t x : {std::size_t{0}, std::size_t{1}}) {
        w[x] = rng.positive_rational();
        idx[x] = j;
      }
      h = CanonicalHom(n, std::move(w), std::move(idx));
    }
    const std::string where = "trial " + std::to_string(i) + " h = " + detail::show(h);
    const std::size_t size = n + m;
    const PositiveMatrix a = h.to_matrix();
    auto cross_check = [&](const FinVector& u, const FinVector& v) {
      const LinearSystem sys = interval_oracle_system(a, u, v);
      const bool fm = feasible_fourier_motzkin(sys);
      const auto point = feasible_point_simplex(sys);
      routes.record(fm == point.has_value() && (!point || sys.satisfied_by(*point)), size,
                    [&] { return where + " u = " + detail::show(u) + " v = " + detail::show(v); });
      return fm;
    };
    detail::guarded(agree, size, where, [&] {
      if (is_interval_preserving(h)) {
        for (int p = 0; p < 20; ++p) {
          const FinVector u = rng.nonneg_vector(n);
          const FinVector v = rng.below(h.apply(u));
          const bool ok = interval_preserving_oracle(a, u, v) && cross_check(u, v);
          agree.record(ok, size, [&] { return where + " u = " + detail::show(u) + " v = " + detail::show(v); });
        }
      } else {
        const auto rows = detail::shared_column(h);
        const std::size_t j = *h.index()[rows->first];
        const FinVector u = FinVector::unit(n, j);
        FinVector v(m);
        v[rows->first] = h.weight()[rows->first];
        const bool ok = !interval_preserving_oracle(a, u, v) && !cross_check(u, v);
        witness.record(ok, size, [&] { return where + " u = " + detail::show(u) + " v = " + detail::show(v); });
      }
    });

    // Injective interval preserving homs.
    const std::size_t n3 = rng.index(1, 6);
    const std::size_t m3 = rng.index(n3, 6);
    const CanonicalHom g = random_hom(rng, n3, m3, HomKind::injective_ip);
    const std::string gwhere = "trial " + std::to_string(i) + " h = " + detail::show(g);
    const std::size_t gsize = n3 + m3;
    detail::guarded(band, gsize, gwhere, [&] {
      const auto b = image_band(g);
      bool ok = b.has_value() && b->size() == n3 && rank(g.to_matrix().matrix()) == n3;
      if (ok) {
        for (std::size_t x = 0; x < m3; ++x) {
          const bool reachable = solve(g.to_matrix().matrix(), FinVector::unit(m3, x)).has_value();
          ok = ok && reachable == b->contains(x);
        }
      }
      band.record(ok, gsize, [&] { return gwhere; });
    });
    detail::guarded(inverse, gsize, gwhere, [&] {
      const FinVector u = rng.vector(n3);
      const auto back = preimage(g, g.apply(u));
      const Band b = *image_band(g);
      const FinVector y = band_projection(b, rng.vector(m3));
      const auto x = preimage(g, y);
      const bool ok = back && *back == u && kernel_basis(g.to_matrix().matrix()).empty() && x && g.apply(*x) == y;
      inverse.record(ok, gsize, [&] { return gwhere + " u = " + detail::show(u) + " y = " + detail::show(y); });
    });
    detail::guarded(iso, gsize, gwhere, [&] {
      const Band b = *image_band(g);
      const FinVector y1 = band_projection(b, rng.vector(m3));
      const FinVector y2 = band_projection(b, rng.vector(m3));
      const FinVector x1 = *preimage(g, y1);
      const FinVector x2 = *preimage(g, y2);
      const bool ok = *preimage(g, join(y1, y2)) == join(x1, x2) && *preimage(g, meet(y1, y2)) == meet(x1, x2);
      iso.record(ok, gsize, [&] { return gwhere + " y1 = " + detail::show(y1) + " y2 = " + detail::show(y2); });
    });
  }
  rep.results = {agree, witness, routes, band, inverse, iso};
  return rep;
}

inline SuiteReport suite_colimit_duality(const SuiteConfig& cfg) {
  SuiteReport rep{"colimit-duality", cfg.seed, detail::pick(cfg.trials, 50), detail::pick(cfg.depth, 8), {}, {}, {}};
  const std::size_t depth = rep.depth;
  PropertyResult indep("evaluation-representative-independent",
                       "A dual thread gives the same value on every representative of a germ.");
  PropertyResult witness("nonzero-dual-thread-detected-by-basis-germ",
                         "A dual thread nonzero at level k, coordinate j, is nonzero on the germ <k, e_j>.");
  PropertyResult round("functional-to-thread-round-trip",
                       "Sampling the functional of a dual thread on basis germs returns the same thread.");
  PropertyResult riesz("join-of-dual-threads-is-riesz-supremum",
                       "The pointwise join of two dual threads evaluates at u >= 0 to the supremum of "
                       "phi(v) + psi(u - v) over 0 <= v <= u; meets give the infimum (dims <= 3).");
  PropertyResult sep("nonzero-germ-has-separating-dual-thread",
                     "Every nonzero germ of an injective chain with band images has a dual thread nonzero on it.");
  PropertyResult embed_inj("embedding-injective",
                           "With injective steps, a germ <n, u> is zero only when u = 0.");

  for (std::size_t i = 0; i < rep.trials + 2; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    std::optional<DirectSystem> chain;
    if (i == 0) {
      chain = DirectSystem::standard_chain();
    } else if (i == 1) {
      chain = DirectSystem::from_generators([](std::size_t k) { return k; },
                                            [](std::size_t k) { return scale(2, CanonicalHom::inclusion(k, k + 1)); },
                                            "weighted inclusion chain");
    } else {
      chain = random_injective_chain(rng, depth + 1);
    }
    const DirectSystem& s = *chain;
    const InverseSystem dual = dual_of_direct(s);
    const std::string where = "chain " + std::to_string(i);
    const std::size_t size = s.dim(depth);

    auto random_dual_thread = [&] {
      const std::size_t n0 = rng.index(1, depth);
      Thread t = section_thread(dual, n0, rng.vector(s.dim(n0)));
      verify_thread(t, depth);
      return t;
    };
    detail::guarded(indep, size, where, [&] {
      std::vector<Thread> phis{random_dual_thread()};
      if (i == 0) {
        Thread ones = ones_thread(dual);
        verify_thread(ones, depth);
        phis.push_back(ones);
      }
      for (const Thread& phi : phis) {
        const ColimFunctional f(s, phi);
        for (int r = 0; r < 3; ++r) {
          const std::size_t n = rng.index(1, depth);
          const std::size_t m = rng.index(n, depth);
          const ColimElement a = embed(s, n, rng.vector(s.dim(n)));
          indep.record(eval_colim_functional(f, a) == eval_colim_functional(f, promote(a, m)), size,
                       [&] { return where + " germ " + detail::show(a) + " promoted to level " + std::to_string(m); });
        }
      }
    });
    detail::guarded(witness, size, where, [&] {
      const Thread phi = random_dual_thread();
      const ColimFunctional f(s, phi);
      for (std::size_t k = 1; k <= depth; ++k) {
        const FinVector c = phi.component(k);
        for (std::size_t j = 0; j < c.dim(); ++j) {
          if (c[j] == 0) continue;
          const Scalar v = eval_colim_functional(f, embed(s, k, FinVector::unit(c.dim(), j)));
          witness.record(v == c[j] && v != 0, size, [&] { return where + " level " + std::to_string(k); });
          return;
        }
      }
    });
    detail::guarded(round, size, where, [&] {
      const Thread phi = random_dual_thread();
      const ColimFunctional f(s, phi);
      const ColimFunctional g =
          functional_to_dual_thread(s, [f](const ColimElement& a) { return eval_colim_functional(f, a); }, depth);
      round.record(thread_equal_upto(g.thread(), phi, depth), size, [&] { return where; });
    });
    detail::guarded(riesz, size, where, [&] {
      const Thread phi = random_dual_thread();
      const Thread psi = random_dual_thread();
      const Thread j = detail::unverified_copy(join(phi, psi));
      const Thread mt = detail::unverified_copy(meet(phi, psi));
      verify_thread(j, depth);
      verify_thread(mt, depth);
      const ColimFunctional fj(s, j);
      const ColimFunctional fm(s, mt);
      for (std::size_t k = 1; k <= depth; ++k) {
        if (s.dim(k) > 3) break;
        const FinVector u = rng.nonneg_vector(s.dim(k));
        const ColimElement a = embed(s, k, u);
        const bool ok =
            eval_colim_functional(fj, a) == detail::box_vertex_extremum(phi.component(k), psi.component(k), u, false) &&
            eval_colim_functional(fm, a) == detail::box_vertex_extremum(phi.component(k), psi.component(k), u, true);
        riesz.record(ok, s.dim(k), [&] { return where + " level " + std::to_string(k) + " u = " + detail::show(u); });
      }
    });
    detail::guarded(sep, size, where, [&] {
      const std::size_t n = rng.index(1, depth);
      FinVector u = rng.vector(s.dim(n));
      if (u.is_zero()) u[0] = 1;
      const ColimElement a = embed(s, n, u);
      const ColimFunctional f = separating_dual_thread(a, depth);
      sep.record(eval_colim_functional(f, a) != 0, size, [&] { return where + " germ " + detail::show(a); });
    });
    detail::guarded(embed_inj, size, where, [&] {
      const std::size_t n = rng.index(1, depth);
      const FinVector u = rng.vector(s.dim(n));
      const ColimElement zero = embed(s, 1, FinVector(s.dim(1)));
      embed_inj.record(germ_equal(embed(s, n, u), zero) == u.is_zero(), size,
                       [&] { return where + " u = " + detail::show(u); });
    });
  }
  rep.results = {indep, witness, round, riesz, sep, embed_inj};
  rep.notes.push_back(
      "Components are finite-dimensional, so order dual and order continuous dual coincide at every level; "
      "the order continuous variant of each property is the same assertion.");
  return rep;
}

inline SuiteReport suite_limit_duality(const SuiteConfig& cfg) {
  SuiteReport rep{"limit-duality", cfg.seed, detail::pick(cfg.trials, 50), detail::pick(cfg.depth, 8), {}, {}, {}};
  const std::size_t depth = rep.depth;
  PropertyResult seed("section-thread-projects-to-seed",
                      "A section thread through u at level n is compatible to the full depth and has component u at n.");
  PropertyResult positive("positive-seed-positive-thread", "Section threads through positive seeds are positive.");
  PropertyResult welldef("dual-germ-evaluation-well-defined",
                         "Representatives of the same dual germ give the same value on every thread.");
  PropertyResult distinct("distinct-dual-germs-separated",
                          "Dual germs that differ take different values on some section thread; equal ones agree.");
  PropertyResult sep("nonzero-thread-has-separating-dual-germ",
                     "Every nonzero verified thread is detected by some dual germ.");
  PropertyResult closure("thread-sublattice-closure",
                         "Pointwise join, meet and sum of compatible threads are compatible to the same depth.");
  PropertyResult major("majorant-within-depth",
                       "Any x_1..x_K in the components are majorised on levels 1..K by a positive thread.");

  for (std::size_t i = 0; i < rep.trials + 1; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    const InverseSystem s = i == 0 ? InverseSystem::standard_chain() : random_surjective_chain(rng, depth + 1);
    const DirectSystem dual = dual_of_inverse(s);
    const std::string where = "chain " + std::to_string(i);
    const std::size_t size = s.dim(depth);
    auto random_section = [&](bool nonneg) {
      const std::size_t n0 = rng.index(1, depth);
      FinVector u = nonneg ? rng.nonneg_vector(s.dim(n0)) : rng.vector(s.dim(n0));
      Thread t = section_thread(s, n0, u);
      verify_thread(t, depth);
      return std::make_pair(t, std::make_pair(n0, u));
    };
    detail::guarded(seed, size, where, [&] {
      const std::size_t n0 = rng.index(1, depth);
      const FinVector u = rng.vector(s.dim(n0));
      const Thread t = section_thread(s, n0, u);
      verify_thread(t, depth);
      seed.record(t.component(n0) == u, size, [&] { return where + " seed " + detail::show(u); });
    });
    detail::guarded(positive, size, where, [&] {
      const auto [t, info] = random_section(true);
      bool ok = true;
      for (std::size_t k = 1; k <= depth; ++k) ok = ok && t.component(k).is_positive();
      positive.record(ok, size, [&, info = info] { return where + " seed " + detail::show(info.second); });
    });
    detail::guarded(welldef, size, where, [&] {
      const std::size_t n = rng.index(1, depth);
      const std::size_t m = rng.index(n, depth);
      const LimFunctional psi(s, n, rng.vector(s.dim(n)));
      const LimFunctional psi2(s, promote(psi.germ(), m));
      bool ok = lim_functional_equal(psi, psi2);
      for (int r = 0; r < 3; ++r) {
        const Thread t = random_section(false).first;
        ok = ok && eval_lim_functional(psi, t) == eval_lim_functional(psi2, t);
      }
      welldef.record(ok, size, [&] { return where + " germ " + detail::show(psi.germ()) + " to level " + std::to_string(m); });
    });
    detail::guarded(distinct, size, where, [&] {
      const std::size_t n1 = rng.index(1, depth);
      const std::size_t n2 = rng.index(1, depth);
      const LimFunctional a(s, n1, rng.vector(s.dim(n1)));
      const LimFunctional b = rng.chance(1, 3) ? LimFunctional(s, promote(a.germ(), std::max(n1, n2)))
                                               : LimFunctional(s, n2, rng.vector(s.dim(n2)));
      if (lim_functional_equal(a, b)) {
        bool ok = true;
        for (int r = 0; r < 3; ++r) {
          const Thread t = random_section(false).first;
          ok = ok && eval_lim_functional(a, t) == eval_lim_functional(b, t);
        }
        distinct.record(ok, size, [&] { return where + " equal germs evaluate differently"; });
      } else {
        const ColimElement d = a.germ() - b.germ();
        Thread t = section_thread(s, d.level(), d.vector());
        verify_thread(t, depth);
        distinct.record(eval_lim_functional(a, t) != eval_lim_functional(b, t), size, [&] {
          return where + " germs " + detail::show(a.germ()) + " and " + detail::show(b.germ());
        });
      }
    });
    detail::guarded(sep, size, where, [&] {
      auto [t, info] = random_section(false);
      if (info.second.is_zero()) return;
      const LimFunctional psi = separating_dual_germ(t, depth);
      sep.record(eval_lim_functional(psi, t) != 0, size, [&, info = info] { return where + " seed " + detail::show(info.second); });
    });
    detail::guarded(closure, size, where, [&] {
      const Thread a = random_section(false).first;
      const Thread b = random_section(false).first;
      const Scalar c = rng.rational();
      for (const Thread& combo : {join(a, b), meet(a, b), a + c * b, abs(a)}) {
        const Thread fresh = detail::unverified_copy(combo);
        bool ok = true;
        try {
          verify_thread(fresh, depth);
        } catch (const CompatibilityError&) {
          ok = false;
        }
        closure.record(ok && combo.verified_depth() >= depth, size, [&] { return where + " " + combo.provenance(); });
      }
    });
    detail::guarded(major, size, where, [&] {
      std::vector<FinVector> xs;
      for (std::size_t k = 1; k <= depth; ++k) xs.push_back(rng.vector(s.dim(k)));
      const Thread t = majorant_upto(s, xs);
      const Thread fresh = detail::unverified_copy(t);
      verify_thread(fresh, depth);
      bool ok = majorises_upto(t, xs);
      for (std::size_t k = 1; k <= depth; ++k) ok = ok && t.component(k).is_positive();
      major.record(ok, size, [&] { return where; });
    });
  }
  rep.results = {seed, positive, welldef, distinct, sep, closure, major};
  rep.notes.push_back(
      "Components are finite-dimensional, so order dual and order continuous dual coincide at every level; "
      "the order continuous variant of each property is the same assertion.");
  rep.notes.push_back("Majorisation is certified on levels 1..depth only.");
  return rep;
}

inline SuiteReport suite_pm_scenarios(const SuiteConfig& cfg) {
  SuiteReport rep{"pm-scenarios", cfg.seed, detail::pick(cfg.trials, 20), detail::pick(cfg.depth, 8), {}, {}, {}};
  const std::size_t depth = rep.depth;
  const auto& model = sequential_model();
  const BandFamily seq = BandFamily::sequential();
  PropertyResult romega("sequence-space-families-reconstructed",
                        "Every compatible family over the bands {1..k} is P_M of a sequence: its diagonal.");
  PropertyResult gap("finite-support-misses-all-ones",
                     "The all-ones family has no finitely supported preimage with support in {1..K}, K <= depth.");
  PropertyResult c00("finite-support-round-trip",
                     "P_M of a finitely supported sequence is recovered from its family.");
  PropertyResult dense("order-dense-witness",
                       "Below every nonzero positive family lies P_M of a nonzero finitely supported sequence.");
  PropertyResult hom("pm-map-lattice-homomorphism", "P_M preserves joins and meets.");
  PropertyResult compat("pm-map-compatible-finite", "P_A (P_B u) = P_A u whenever A is contained in B (all bands of R^N).");

  detail::guarded(gap, depth, "all-ones", [&] {
    const Thread ones = ones_thread(model.romega);
    verify_thread(ones, depth + 1);
    for (std::size_t k = 1; k <= depth; ++k) {
      const auto r = pm_preimage_c00(ones, k);
      const auto* proof = std::get_if<NotInImage>(&r);
      const bool ok = proof && proof->coordinate > k && ones.component(proof->level)[proof->coordinate - 1] != 0;
      gap.record(ok, k, [&] { return "support bound " + std::to_string(k) + " admits a preimage"; });
    }
  });

  for (std::size_t i = 0; i < rep.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    const std::string where = "trial " + std::to_string(i);
    detail::guarded(romega, depth, where, [&] {
      Thread t = i == 0   ? ones_thread(model.romega)
                 : i == 1 ? detail::harmonic_thread(model.romega)
                          : [&] {
                              const std::size_t n0 = rng.index(1, depth);
                              return section_thread(model.romega, n0, rng.vector(n0));
                            }();
      verify_thread(t, depth);
      const Sequence u = pm_preimage_romega(t);
      const Thread back = pm_map(seq, u);
      romega.record(thread_equal_upto(back, t, depth), depth, [&] { return where + " family " + t.provenance(); });
    });
    detail::guarded(c00, depth, where, [&] {
      const std::size_t n = rng.index(1, depth);
      const ColimElement u = embed(model.c00, n, rng.vector(n));
      const Thread t = pm_map(seq, u);
      verify_thread(t, depth + 1);
      const auto r = pm_preimage_c00(t, n);
      const auto* back = std::get_if<ColimElement>(&r);
      c00.record(back && germ_equal(*back, u), n, [&] { return where + " u = " + detail::show(u); });
    });
    detail::guarded(dense, depth, where, [&] {
      const std::size_t n0 = rng.index(1, depth);
      FinVector seed_vec = rng.nonneg_vector(n0);
      if (seed_vec.is_zero()) seed_vec[n0 - 1] = 1;
      const Thread t = section_thread(model.romega, n0, seed_vec);
      verify_thread(t, depth);
      const ColimElement v = pm_order_dense_witness(t, depth);
      const Thread pv = pm_map(seq, v);
      bool ok = !v.vector().is_zero() && v.vector().is_positive();
      for (std::size_t k = 1; k <= depth; ++k) ok = ok && leq(pv.component(k), t.component(k));
      dense.record(ok, n0, [&] { return where + " seed " + detail::show(seed_vec); });
    });
    detail::guarded(hom, depth, where, [&] {
      const std::size_t n1 = rng.index(1, depth);
      const std::size_t n2 = rng.index(1, depth);
      const ColimElement a = embed(model.c00, n1, rng.vector(n1));
      const ColimElement b = embed(model.c00, n2, rng.vector(n2));
      const bool ok = thread_equal_upto(pm_map(seq, join(a, b)), join(pm_map(seq, a), pm_map(seq, b)), depth) &&
                      thread_equal_upto(pm_map(seq, meet(a, b)), meet(pm_map(seq, a), pm_map(seq, b)), depth);
      hom.record(ok, std::max(n1, n2), [&] { return where + " a = " + detail::show(a) + " b = " + detail::show(b); });
    });
    detail::guarded(compat, depth, where, [&] {
      const std::size_t n = rng.index(1, 4);
      const BandFamily fam = BandFamily::finite(n);
      const FinVector u = rng.vector(n);
      const auto x = pm_map(fam, u);
      bool ok = pm_preimage(fam, x) == u;
      for (const Band& a : fam.enumerate()) {
        for (const Band& b : fam.enumerate()) {
          if (a.subset_of(b)) ok = ok && band_projection(a, x.at(b)) == x.at(a);
        }
      }
      compat.record(ok, n, [&] { return where + " u = " + detail::show(u); });
    });
  }
  rep.results = {romega, gap, c00, dense, hom, compat};
  return rep;
}

inline SuiteReport suite_disjointify(const SuiteConfig& cfg) {
  SuiteReport rep{"disjointify", cfg.seed, detail::pick(cfg.trials, 500), 0, {}, {}, {}};
  PropertyResult disjoint_p("parts-disjoint", "phi1 meet psi1 = 0.");
  PropertyResult below("parts-below-inputs", "phi1 <= phi and psi1 <= psi.");
  PropertyResult sup("same-supremum", "phi1 join psi1 = phi join psi.");
  PropertyResult ties("ties-assigned-to-first", "Where phi_i = psi_i the coordinate goes to phi1.");
  PropertyResult carrier_p("carrier-null-ideal-partition",
                           "Carrier and null ideal partition the coordinates and phi > 0 on its carrier.");
  PropertyResult minorant("strictly-positive-separating-minorant",
                          "For strictly positive phi and u != 0, eta = phi o P_B satisfies 0 <= eta <= phi, eta(u) != 0.");

  for (std::size_t i = 0; i < rep.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    const std::size_t n = rng.index(1, 8);
    FinVector a = rng.nonneg_vector(n);
    FinVector b = rng.nonneg_vector(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (rng.chance(1, 5)) b[k] = a[k];
    }
    const Functional phi(a);
    const Functional psi(b);
    const auto [p1, q1] = disjointify(phi, psi);
    auto where = [&] { return "phi = " + detail::show(a) + " psi = " + detail::show(b); };
    disjoint_p.record(meet(p1.vector(), q1.vector()).is_zero(), n, where);
    below.record(leq(p1.vector(), a) && leq(q1.vector(), b) && p1.vector().is_positive() && q1.vector().is_positive(),
                 n, where);
    sup.record(join(p1.vector(), q1.vector()) == join(a, b), n, where);
    bool tie_ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] == b[k]) tie_ok = tie_ok && p1.vector()[k] == a[k] && q1.vector()[k] == 0;
    }
    ties.record(tie_ok, n, where);

    const Band c = carrier(phi);
    const Band z = null_ideal(phi);
    bool part = meet(c, z).is_empty() && join(c, z).is_full();
    for (std::size_t k : c.support()) part = part && a[k] > 0;
    carrier_p.record(part, n, where);

    FinVector strict(n);
    for (std::size_t k = 0; k < n; ++k) strict[k] = rng.positive_rational();
    FinVector u = rng.vector(n);
    if (u.is_zero()) u[0] = -1;
    const Functional eta = separating_minorant(Functional(strict), u);
    minorant.record(eta.vector().is_positive() && leq(eta.vector(), strict) && eta(u) != 0, n,
                    [&] { return "phi = " + detail::show(strict) + " u = " + detail::show(u); });
  }
  rep.results = {disjoint_p, below, sup, ties, carrier_p, minorant};
  return rep;
}

inline SuiteReport suite_sum_product_duality(const SuiteConfig& cfg) {
  SuiteReport rep{"sum-product-duality", cfg.seed, detail::pick(cfg.trials, 100), 0, {}, {}, {}};
  PropertyResult ident("restriction-and-sum-mutually-inverse",
                       "Restricting a functional on the K-fold sum to the summands and summing the pieces back "
                       "are mutually inverse.");
  PropertyResult lattice("lattice-isomorphism", "Both maps are positive lattice homomorphisms, hence lattice isomorphisms.");
  PropertyResult pairing("pairing-blockwise", "phi(u) equals the sum over blocks of the restricted functionals on the blocks.");

  for (std::size_t i = 0; i < rep.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    std::vector<std::size_t> dims;
    if (i == 0) {
      dims = {1, 1, 1};
    } else if (i == 1) {
      dims = {rng.index(1, 4)};
    } else {
      const std::size_t k = rng.index(1, 5);
      for (std::size_t j = 0; j < k; ++j) dims.push_back(rng.index(1, 4));
    }
    std::size_t total = 0;
    for (auto d : dims) total += d;
    std::vector<std::pair<FinVector, FinVector>> samples;
    for (int s = 0; s < 5; ++s) samples.emplace_back(rng.vector(total), rng.vector(total));
    const SumProductReport r = truncated_sum_product_duality(dims, samples);
    auto where = [&] {
      std::string s = "dims (";
      for (std::size_t j = 0; j < dims.size(); ++j) s += (j ? "," : "") + std::to_string(dims[j]);
      return s + ")";
    };
    ident.record(r.s_after_t_identity && r.t_after_s_identity, total, where);
    lattice.record(r.both_positive && r.lattice_homomorphisms && r.interval_preserving, total, where);
    pairing.record(r.pairing_agrees && r.pairing_checks == samples.size(), total, where);
  }
  rep.results = {ident, lattice, pairing};
  return rep;
}

inline SuiteReport suite_finite_carrier_iso(const SuiteConfig& cfg) {
  SuiteReport rep{"finite-carrier-iso", cfg.seed, detail::pick(cfg.trials, 20), 0, {}, {}, {}};
  PropertyResult carriers("bands-are-carriers", "Every band of R^N is the carrier of a positive functional.");
  PropertyResult ideal("carriers-form-ideal", "The carriers are downward closed and upward directed.");
  PropertyResult iso("pm-lattice-isomorphism",
                     "P_M is a lattice isomorphism of R^N onto the compatible families over all 2^N bands.");
  for (std::size_t n = 1; n <= 3; ++n) {
    Rng rng = Rng::for_trial(cfg.seed, n);
    const CarrierIsoReport r = finite_carrier_limit_iso(n, rng, rep.trials);
    ReportTable table{"bands of R^" + std::to_string(n), {"band", "carrier", "member"}, {}};
    for (const CarrierIsoRow& row : r.rows) {
      table.rows.push_back({detail::show(row.band), detail::show(row.carrier), row.member ? "yes" : "no"});
    }
    rep.tables.push_back(std::move(table));
    auto where = [&] { return "N = " + std::to_string(n); };
    carriers.record(r.carriers_match, n, where);
    ideal.record(r.downward_closed && r.directed, n, where);
    iso.record(r.compatible_dim == n && r.pm_rank == n && r.pm_compatible && r.pm_lattice_hom && r.inverse_recovers &&
                   r.samples_ok,
               n, where);
  }
  rep.results = {carriers, ideal, iso};
  return rep;
}

inline SuiteReport suite_functoriality(const SuiteConfig& cfg) {
  SuiteReport rep{"functoriality", cfg.seed, detail::pick(cfg.trials, 100), detail::pick(cfg.depth, 6), {}, {}, {}};
  const std::size_t depth = rep.depth;
  PropertyResult dsq("direct-morphism-squares-commute", "Conjugating a chain by levelwise isomorphisms gives a morphism.");
  PropertyResult demb("induced-colimit-map-commutes-with-embeddings",
                      "The induced map of direct limits commutes with the embeddings of every level.");
  PropertyResult diso("induced-colimit-map-isomorphism",
                      "The induced map of direct limits is a lattice isomorphism with the induced inverse.");
  PropertyResult isq("inverse-morphism-squares-commute", "Conjugating a chain by levelwise isomorphisms gives a morphism.");
  PropertyResult iproj("induced-limit-map-commutes-with-projections",
                       "The induced map of inverse limits sends threads to threads and commutes with projections.");
  PropertyResult iiso("induced-limit-map-isomorphism",
                      "The induced map of inverse limits is a lattice isomorphism with the induced inverse.");
  PropertyResult conn("connecting-maps-compose", "e_{n,k} = e_{m,k} o e_{n,m} and the dual reverses connecting maps.");

  for (std::size_t i = 0; i < rep.trials; ++i) {
    Rng rng = Rng::for_trial(cfg.seed, i);
    const std::string where = "trial " + std::to_string(i);

    const DirectSystem s = random_injective_chain(rng, depth, 6);
    std::vector<CanonicalHom> t_levels;
    for (std::size_t k = 1; k <= depth; ++k) t_levels.push_back(random_hom(rng, s.dim(k), s.dim(k), HomKind::bijective));
    std::vector<std::size_t> dims;
    std::vector<CanonicalHom> steps;
    for (std::size_t k = 1; k <= depth; ++k) dims.push_back(s.dim(k));
    for (std::size_t k = 1; k < depth; ++k) {
      steps.push_back(compose(t_levels[k], compose(s.step(k), lattice_inverse(t_levels[k - 1]))));
    }
    const DirectSystem s2 = DirectSystem::from_prefix(dims, steps, ExtensionRule::none, "conjugated chain");
    const DirectMorphism fwd(s, s2, [t_levels](std::size_t k) { return t_levels.at(k - 1); });
    const DirectMorphism bwd(s2, s, [t_levels](std::size_t k) { return lattice_inverse(t_levels.at(k - 1)); });
    const std::size_t size = s.dim(depth);
    detail::guarded(dsq, size, where, [&] {
      check_morphism(fwd, depth);
      check_morphism(bwd, depth);
      dsq.record(true, size, [&] { return where; });
    });
    detail::guarded(demb, size, where, [&] {
      const std::size_t n = rng.index(1, depth);
      const std::size_t m = rng.index(n, depth);
      const ColimElement a = embed(s, n, rng.vector(s.dim(n)));
      demb.record(germ_equal(induced_colimit_map(fwd, promote(a, m)), promote(induced_colimit_map(fwd, a), m)), size,
                  [&] { return where + " germ " + detail::show(a); });
    });
    detail::guarded(diso, size, where, [&] {
      const std::size_t n1 = rng.index(1, depth);
      const std::size_t n2 = rng.index(1, depth);
      const ColimElement a = embed(s, n1, rng.vector(s.dim(n1)));
      const ColimElement b = embed(s, n2, rng.vector(s.dim(n2)));
      const auto f = [&](const ColimElement& x) { return induced_colimit_map(fwd, x); };
      const bool ok = germ_equal(induced_colimit_map(bwd, f(a)), a) && germ_equal(f(join(a, b)), join(f(a), f(b))) &&
                      germ_equal(f(meet(a, b)), meet(f(a), f(b))) && is_positive(f(abs(a)));
      diso.record(ok, size, [&] { return where + " a = " + detail::show(a) + " b = " + detail::show(b); });
    });

    const InverseSystem p = random_surjective_chain(rng, depth, 6);
    std::vector<CanonicalHom> u_levels;
    for (std::size_t k = 1; k <= depth; ++k) u_levels.push_back(random_hom(rng, p.dim(k), p.dim(k), HomKind::bijective));
    std::vector<std::size_t> pdims;
    std::vector<CanonicalHom> psteps;
    for (std::size_t k = 1; k <= depth; ++k) pdims.push_back(p.dim(k));
    for (std::size_t k = 1; k < depth; ++k) {
      psteps.push_back(compose(u_levels[k - 1], compose(p.step(k), lattice_inverse(u_levels[k]))));
    }
    const InverseSystem p2 = InverseSystem::from_prefix(pdims, psteps, ExtensionRule::none, "conjugated chain");
    const InverseMorphism pf(p, p2, [u_levels](std::size_t k) { return u_levels.at(k - 1); });
    const InverseMorphism pb(p2, p, [u_levels](std::size_t k) { return lattice_inverse(u_levels.at(k - 1)); });
    const std::size_t psize = p.dim(depth);
    detail::guarded(isq, psize, where, [&] {
      check_morphism(pf, depth);
      check_morphism(pb, depth);
      isq.record(true, psize, [&] { return where; });
    });
    auto random_thread = [&] {
      const std::size_t n0 = rng.index(1, depth);
      Thread t = section_thread(p, n0, rng.vector(p.dim(n0)));
      verify_thread(t, depth);
      return t;
    };
    detail::guarded(iproj, psize, where, [&] {
      const Thread t = random_thread();
      const Thread img = induced_limit_map(pf, t);
      bool ok = true;
      try {
        verify_thread(img, depth);
      } catch (const CompatibilityError&) {
        ok = false;
      }
      for (std::size_t k = 1; k <= depth; ++k) ok = ok && img.component(k) == u_levels[k - 1].apply(t.component(k));
      iproj.record(ok, psize, [&] { return where + " " + t.provenance(); });
    });
    detail::guarded(iiso, psize, where, [&] {
      const Thread a = random_thread();
      const Thread b = random_thread();
      const auto f = [&](const Thread& x) { return induced_limit_map(pf, x); };
      const bool ok = thread_equal_upto(induced_limit_map(pb, f(a)), a, depth) &&
                      thread_equal_upto(f(join(a, b)), join(f(a), f(b)), depth) &&
                      thread_equal_upto(f(meet(a, b)), meet(f(a), f(b)), depth);
      iiso.record(ok, psize, [&] { return where; });
    });
    detail::guarded(conn, size, where, [&] {
      const std::size_t n = rng.index(1, depth);
      const std::size_t m = rng.index(n, depth);
      const std::size_t k = rng.index(m, depth);
      const InverseSystem d = dual_of_direct(s);
      const bool ok = connecting(s, n, k) == compose(connecting(s, m, k), connecting(s, n, m)) &&
                      connecting_inv(p, k, n) == compose(connecting_inv(p, m, n), connecting_inv(p, k, m)) &&
                      connecting_inv(d, m, n) == canonicalize(adjoint(connecting(s, n, m)));
      conn.record(ok, size, [&] { return where + " levels " + std::to_string(n) + "," + std::to_string(m) + "," +
                                         std::to_string(k); });
    });
  }
  rep.results = {dsq, demb, diso, isq, iproj, iiso, conn};
  return rep;
}

struct SuiteEntry {
  const char* name;
  SuiteReport (*run)(const SuiteConfig&);
};

inline const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> suites{
      {"adjoints", suite_adjoints},
      {"interval-oracle", suite_interval_oracle},
      {"colimit-duality", suite_colimit_duality},
      {"limit-duality", suite_limit_duality},
      {"pm-scenarios", suite_pm_scenarios},
      {"disjointify", suite_disjointify},
      {"sum-product-duality", suite_sum_product_duality},
      {"finite-carrier-iso", suite_finite_carrier_iso},
      {"functoriality", suite_functoriality},
  };
  return suites;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  for (const auto& s : suite_registry()) {
    if (name == s.name) return s.run(cfg);
  }
  throw UnknownSuite(name);
}

}  // namespace riesz
