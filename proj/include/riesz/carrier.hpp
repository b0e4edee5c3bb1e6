#pragma once

// Null ideals, carriers, disjointification, the band-family maps P_M and
// perfectness certificates.
//
// Two band families are modelled. finite(N): all coordinate bands of R^N.
// sequential(): the bands {1..k} of the sequence space, whose compatible
// families are the threads of the restriction chain; finitely supported
// sequences are the germs of the inclusion chain.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "riesz/colimit.hpp"
#include "riesz/duality.hpp"
#include "riesz/error.hpp"
#include "riesz/hom.hpp"
#include "riesz/limit.hpp"
#include "riesz/matrix.hpp"
#include "riesz/random.hpp"
#include "riesz/system.hpp"
#include "riesz/vector.hpp"

namespace riesz {

/// A dual vector acting on R^n by the dot product.
class Functional {
 public:
  explicit Functional(FinVector v) : v_(std::move(v)) {}
  Functional(std::initializer_list<Scalar> c) : v_(c) {}

  const FinVector& vector() const noexcept { return v_; }
  std::size_t dim() const noexcept { return v_.dim(); }
  Scalar operator()(const FinVector& u) const { return dot(v_, u); }

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  FinVector v_;
};

inline Band null_ideal(const Functional& phi) { return Band::of(phi.vector()).complement(); }
inline Band carrier(const Functional& phi) { return Band::of(phi.vector()); }

/// In the dual of R^n the annihilator of a coordinate band is the complementary band.
inline Band annihilator(const Band& a) { return a.complement(); }

inline void require_positive_functional(const Functional& phi, const char* who) {
  if (!phi.vector().is_positive()) throw PreconditionViolated(std::string(who) + " needs a positive functional");
}

/// Disjoint phi1 <= phi, psi1 <= psi with phi1 v psi1 = phi v psi. Ties go to phi1.
inline std::pair<Functional, Functional> disjointify(const Functional& phi, const Functional& psi) {
  require_positive_functional(phi, "disjointify");
  require_positive_functional(psi, "disjointify");
  require_same_dim(phi.vector(), psi.vector());
  FinVector a(phi.dim());
  FinVector b(phi.dim());
  for (std::size_t i = 0; i < phi.dim(); ++i) {
    if (phi.vector()[i] >= psi.vector()[i]) {
      a[i] = phi.vector()[i];
    } else {
      b[i] = psi.vector()[i];
    }
  }
  return {Functional(std::move(a)), Functional(std::move(b))};
}

inline bool strictly_positive(const Functional& phi) {
  require_positive_functional(phi, "strictly_positive");
  return std::all_of(phi.vector().begin(), phi.vector().end(), [](const Scalar& c) { return c > 0; });
}

/// eta = phi o P_B with B the band of u+ (or of u- when u+ = 0); then 0 <= eta <= phi and eta(u) != 0.
inline Functional separating_minorant(const Functional& phi, const FinVector& u) {
  if (!strictly_positive(phi)) throw PreconditionViolated("separating minorant needs a strictly positive functional");
  if (u.is_zero()) throw PreconditionViolated("separating minorant needs u != 0");
  const FinVector plus = pos_part(u);
  const Band b = Band::of(plus.is_zero() ? neg_part(u) : plus);
  return Functional(band_projection(b, phi.vector()));
}

/// The standard chains of the sequential model: inclusions for finitely
/// supported sequences, restrictions for the compatible families.
struct SequentialModel {
  DirectSystem c00 = DirectSystem::standard_chain();
  InverseSystem romega = InverseSystem::standard_chain();
};

inline const SequentialModel& sequential_model() {
  static const SequentialModel model;
  return model;
}

/// A sequence u_1, u_2, ... given by a rule (1-based).
struct Sequence {
  std::function<Scalar(std::size_t)> term;
  std::string name;

  FinVector prefix(std::size_t k) const {
    FinVector v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = term(i + 1);
    return v;
  }
};

class BandFamily {
 public:
  enum class Model { finite, sequential };

  static BandFamily finite(std::size_t n) {
    if (n == 0 || n > 16) throw PreconditionViolated("finite band family needs 1 <= N <= 16");
    return BandFamily(Model::finite, n);
  }

  static BandFamily sequential() { return BandFamily(Model::sequential, 0); }

  Model model() const noexcept { return model_; }
  std::size_t dim() const noexcept { return n_; }

  /// Finite model: all 2^N bands. Sequential model: the cofinal chain {1..k}, k = 1..limit,
  /// each as the full band of R^k.
  std::vector<Band> enumerate(std::size_t limit = 0) const {
    std::vector<Band> out;
    if (model_ == Model::finite) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n_); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n_; ++i) {
          if (mask >> i & 1U) s.push_back(i);
        }
        out.emplace_back(n_, std::move(s));
      }
      std::sort(out.begin(), out.end(), [](const Band& a, const Band& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.support() < b.support();
      });
    } else {
      for (std::size_t k = 1; k <= limit; ++k) out.push_back(Band::full(k));
    }
    return out;
  }

  /// Finite model: bands of R^N. Sequential model: every finitely supported band.
  bool contains(const Band& b) const { return model_ == Model::sequential || b.dim() == n_; }

  /// A member containing both.
  Band upper_bound(const Band& a, const Band& b) const {
    if (model_ == Model::finite) return join(a, b);
    std::size_t k = std::max(a.dim(), b.dim());
    return Band::full(k);
  }

 private:
  BandFamily(Model m, std::size_t n) : model_(m), n_(n) {}
  Model model_;
  std::size_t n_;
};

/// Finite model: B -> P_B u for every band B of R^N.
inline std::map<Band, FinVector> pm_map(const BandFamily& family, const FinVector& u) {
  if (family.model() != BandFamily::Model::finite) throw ModelMismatch("vectors of R^N belong to the finite model");
  if (u.dim() != family.dim()) throw ModelMismatch("vector dimension differs from the family's N");
  std::map<Band, FinVector> out;
  for (const Band& b : family.enumerate()) out.emplace(b, band_projection(b, u));
  return out;
}

/// Sequential model, finitely supported u: the family of prefixes of u.
inline Thread pm_map(const BandFamily& family, const ColimElement& u) {
  const auto& model = sequential_model();
  if (family.model() != BandFamily::Model::sequential) throw ModelMismatch("germs belong to the sequential model");
  if (!(u.system() == model.c00)) throw ModelMismatch("germ is not a finitely supported sequence");
  Thread t(
      model.romega,
      [u](std::size_t k) {
        const FinVector v = promote(u, std::max(k, u.level())).vector();
        return FinVector(std::vector<Scalar>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k)));
      },
      {}, "band projections of a finitely supported sequence");
  return t;
}

/// Sequential model, arbitrary sequence u: the family of prefixes of u.
inline Thread pm_map(const BandFamily& family, const Sequence& u) {
  if (family.model() != BandFamily::Model::sequential) throw ModelMismatch("sequences belong to the sequential model");
  return Thread(sequential_model().romega, [u](std::size_t k) { return u.prefix(k); }, u.name,
                "band projections of a sequence");
}

namespace detail {

inline void require_romega(const Thread& t) {
  if (!(t.system() == sequential_model().romega)) throw ModelMismatch("thread is not a family over the bands {1..k}");
}

}  // namespace detail

/// For a positive family t, a finitely supported v with 0 < P_M v <= t: the
/// first nonzero coordinate of the first nonzero component.
inline ColimElement pm_order_dense_witness(const Thread& t, std::size_t depth) {
  detail::require_romega(t);
  if (t.verified_depth() < depth) throw DepthInsufficient(depth, t.verified_depth());
  for (std::size_t k = 1; k <= depth; ++k) {
    if (!t.component(k).is_positive()) throw PreconditionViolated("order dense witness needs a positive family");
  }
  for (std::size_t k = 1; k <= depth; ++k) {
    const FinVector c = t.component(k);
    for (std::size_t j = 0; j < c.dim(); ++j) {
      if (c[j] != 0) return embed(sequential_model().c00, k, c[j] * FinVector::unit(k, j));
    }
  }
  throw AllZeroUpToDepth(depth);
}

/// Proof that a family has no finitely supported preimage with support in {1..K}:
/// component `level` has a nonzero coordinate beyond K.
struct NotInImage {
  std::size_t support_bound = 0;
  std::size_t level = 0;
  std::size_t coordinate = 0;  // 1-based
};

/// A germ u supported in {1..K} with P_M u = t on the verified prefix, or a NotInImage proof.
inline std::variant<ColimElement, NotInImage> pm_preimage_c00(const Thread& t, std::size_t bound) {
  detail::require_romega(t);
  if (bound == 0) throw PreconditionViolated("support bound must be at least 1");
  if (t.verified_depth() < bound + 1) throw DepthInsufficient(bound + 1, t.verified_depth());
  for (std::size_t k = bound + 1; k <= t.verified_depth(); ++k) {
    const FinVector c = t.component(k);
    for (std::size_t j = bound; j < k; ++j) {
      if (c[j] != 0) return NotInImage{bound, k, j + 1};
    }
  }
  return embed(sequential_model().c00, bound, t.component(bound));
}

/// The sequence u_i = (t_i)_i; P_M u = t wherever t is compatible.
inline Sequence pm_preimage_romega(const Thread& t) {
  detail::require_romega(t);
  return Sequence{[t](std::size_t i) { return t.component(i)[i - 1]; }, "diagonal of a family"};
}

/// Finite model: the component at the full band.
inline FinVector pm_preimage(const BandFamily& family, const std::map<Band, FinVector>& x) {
  if (family.model() != BandFamily::Model::finite) throw ModelMismatch("finite families need the finite model");
  auto it = x.find(Band::full(family.dim()));
  if (it == x.end()) throw PreconditionViolated("family has no component at the full band");
  return it->second;
}

struct CarrierIsoRow {
  Band band;
  Band carrier;  // carrier of the indicator functional of band
  bool member = false;
};

struct CarrierIsoReport {
  std::size_t n = 0;
  std::vector<CarrierIsoRow> rows;
  bool carriers_match = true;
  bool downward_closed = true;
  bool directed = true;
  std::size_t family_coordinates = 0;
  std::size_t compatible_dim = 0;
  std::size_t pm_rank = 0;
  bool pm_compatible = false;
  bool pm_lattice_hom = false;
  bool inverse_recovers = false;
  std::size_t sample_checks = 0;
  bool samples_ok = true;

  bool passed() const {
    return carriers_match && downward_closed && directed && compatible_dim == n && pm_rank == n && pm_compatible &&
           pm_lattice_hom && inverse_recovers && samples_ok;
  }
};

/// Exhaustive check on R^N, N <= 3: the bands are exactly the carriers of the
/// positive functionals, they form an ideal, and P_M is a lattice isomorphism
/// onto the space of compatible families over all bands.
inline CarrierIsoReport finite_carrier_limit_iso(std::size_t n, Rng& rng, std::size_t samples = 20) {
  if (n == 0 || n > 3) throw PreconditionViolated("finite carrier check enumerates N <= 3");
  CarrierIsoReport r;
  r.n = n;
  const BandFamily family = BandFamily::finite(n);
  const std::vector<Band> bands = family.enumerate();

  for (const Band& b : bands) {
    FinVector indicator(n);
    for (std::size_t i : b.support()) indicator[i] = 1;
    const Band c = carrier(Functional(indicator));
    r.carriers_match = r.carriers_match && c == b;
    r.rows.push_back({b, c, family.contains(c)});
  }
  auto member = [&](const Band& b) {
    return std::any_of(r.rows.begin(), r.rows.end(), [&](const CarrierIsoRow& row) { return row.member && row.carrier == b; });
  };
  for (const Band& b : bands) {
    for (const Band& a : bands) {
      if (a.subset_of(b) && member(b) && !member(a)) r.downward_closed = false;
      if (member(a) && member(b) && !member(family.upper_bound(a, b))) r.directed = false;
    }
  }

  // Coordinates of a family: (band B, i in B).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  for (std::size_t bi = 0; bi < bands.size(); ++bi) {
    for (std::size_t i : bands[bi].support()) var.emplace(std::make_pair(bi, i), var.size());
  }
  r.family_coordinates = var.size();
  // Compatibility: x_B[i] = x_A[i] for A subset of B and i in A.
  std::vector<FinVector> rows;
  for (std::size_t ai = 0; ai < bands.size(); ++ai) {
    for (std::size_t bi = 0; bi < bands.size(); ++bi) {
      if (ai == bi || !bands[ai].subset_of(bands[bi])) continue;
      for (std::size_t i : bands[ai].support()) {
        FinVector row(var.size());
        row[var.at({bi, i})] = 1;
        row[var.at({ai, i})] = -1;
        rows.push_back(std::move(row));
      }
    }
  }
  const Matrix compat = Matrix::from_rows(rows, var.size());
  const auto kernel = kernel_basis(compat);
  r.compatible_dim = kernel.size();

  Matrix pm(var.size(), n);
  for (const auto& [key, v] : var) pm(v, key.second) = 1;
  r.pm_rank = rank(pm);
  r.pm_compatible = (compat * pm) == Matrix(compat.rows(), n);
  try {
    (void)canonicalize(pm);
    r.pm_lattice_hom = true;
  } catch (const NotLatticeHom&) {
    r.pm_lattice_hom = false;
  }
  const std::size_t full = bands.size() - 1;
  Matrix back(n, var.size());
  for (std::size_t i = 0; i < n; ++i) back(i, var.at({full, i})) = 1;
  r.inverse_recovers = back * pm == Matrix::identity(n);

  auto family_vector = [&](const FinVector& u) {
    const auto fam = pm_map(family, u);
    FinVector x(var.size());
    for (std::size_t bi = 0; bi < bands.size(); ++bi) {
      for (std::size_t i : bands[bi].support()) x[var.at({bi, i})] = fam.at(bands[bi])[i];
    }
    return x;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const FinVector u = rng.vector(n);
    const FinVector v = rng.vector(n);
    FinVector x(var.size());
    for (const auto& k : kernel) x = x + rng.rational() * k;
    const bool ok = family_vector(join(u, v)) == join(family_vector(u), family_vector(v)) &&
                    family_vector(meet(u, v)) == meet(family_vector(u), family_vector(v)) &&
                    pm.apply(u) == family_vector(u) && back.apply(family_vector(u)) == u &&
                    pm.apply(back.apply(x)) == x;
    ++r.sample_checks;
    r.samples_ok = r.samples_ok && ok;
  }
  return r;
}

struct SigmaCheck {
  std::size_t germ_level = 0;
  FinVector germ;
  std::size_t functional_level = 0;
  Scalar value;         // phi(u)
  Scalar bidual_value;  // sigma(u)(phi), computed in the bidual system
  bool round_trip = false;
  bool separated = false;

  bool ok() const { return value == bidual_value && round_trip && separated; }
};

struct PerfectCertificate {
  std::size_t depth = 0;
  bool steps_injective = false;
  bool images_are_bands = false;
  bool bidual_steps_match = false;
  std::vector<SigmaCheck> checks;

  bool ok() const {
    return steps_injective && images_are_bands && bidual_steps_match &&
           std::all_of(checks.begin(), checks.end(), [](const SigmaCheck& c) { return c.ok(); });
  }
};

/// Issued iff the steps up to depth are injective with band images; then runs
/// sampled sigma round trips through the bidual system.
inline PerfectCertificate perfect_certificate(const DirectSystem& s, std::size_t depth, std::size_t samples, Rng& rng) {
  const Classification c = classify(s, depth);
  if (!c.all_injective) throw CertificateRefused("steps_injective");
  if (!c.images_are_bands) throw CertificateRefused("images_are_bands");
  PerfectCertificate cert;
  cert.depth = depth;
  cert.steps_injective = true;
  cert.images_are_bands = true;

  const InverseSystem dual = dual_of_direct(s);
  const DirectSystem bidual = dual_of_inverse(dual);
  cert.bidual_steps_match = true;
  for (std::size_t k = 1; k < depth; ++k) {
    cert.bidual_steps_match = cert.bidual_steps_match && bidual.step(k) == s.step(k);
  }
  for (std::size_t i = 0; i < samples; ++i) {
    SigmaCheck chk;
    chk.germ_level = rng.index(1, depth);
    FinVector u = rng.vector(s.dim(chk.germ_level));
    if (u.is_zero()) u[0] = 1;
    chk.germ = u;
    const ColimElement a = embed(s, chk.germ_level, u);
    chk.functional_level = rng.index(1, depth);
    Thread phi = section_thread(dual, chk.functional_level, rng.vector(s.dim(chk.functional_level)));
    verify_thread(phi, depth);
    const ColimFunctional f(s, phi);
    chk.value = eval_colim_functional(f, a);
    const LimFunctional sigma_u(dual, chk.germ_level, u);
    chk.bidual_value = eval_lim_functional(sigma_u, phi);
    const ColimElement least = canonical_form(sigma_u.germ());
    chk.round_trip = germ_equal(embed(s, least.level(), least.vector()), a);
    chk.separated = eval_colim_functional(separating_dual_thread(a, depth), a) != 0;
    cert.checks.push_back(std::move(chk));
  }
  return cert;
}

/// Inverse systems: issued iff the steps up to depth are surjective, so that the
/// dual direct system is injective with band images. Spot checks pair sampled
/// threads with sampled dual germs both ways.
inline PerfectCertificate perfect_certificate(const InverseSystem& s, std::size_t depth, std::size_t samples, Rng& rng) {
  const Classification c = classify(s, depth);
  if (!c.all_surjective) throw CertificateRefused("steps_surjective");
  const DirectSystem dual = dual_of_inverse(s);
  const Classification dc = classify(dual, depth);
  PerfectCertificate cert;
  cert.depth = depth;
  cert.steps_injective = dc.all_injective;
  cert.images_are_bands = dc.images_are_bands;
  const InverseSystem bidual = dual_of_direct(dual);
  cert.bidual_steps_match = true;
  for (std::size_t k = 1; k < depth; ++k) {
    cert.bidual_steps_match = cert.bidual_steps_match && bidual.step(k) == s.step(k);
  }
  for (std::size_t i = 0; i < samples; ++i) {
    SigmaCheck chk;
    chk.germ_level = rng.index(1, depth);
    FinVector seed = rng.vector(s.dim(chk.germ_level));
    if (seed.is_zero()) seed[0] = 1;
    chk.germ = seed;
    Thread t = section_thread(s, chk.germ_level, seed);
    verify_thread(t, depth);
    chk.functional_level = rng.index(1, depth);
    const LimFunctional psi(s, chk.functional_level, rng.vector(s.dim(chk.functional_level)));
    chk.value = eval_lim_functional(psi, t);
    Thread tb(bidual, [t](std::size_t k) { return t.component(k); }, {}, "thread read in the bidual system");
    verify_thread(tb, depth);
    chk.bidual_value = eval_colim_functional(ColimFunctional(dual, tb), psi.germ());
    chk.round_trip = thread_equal_upto(section_thread(s, chk.germ_level, tb.component(chk.germ_level)), t, depth);
    const LimFunctional sep = separating_dual_germ(t, depth);
    chk.separated = eval_lim_functional(sep, t) != 0;
    cert.checks.push_back(std::move(chk));
  }
  return cert;
}

}  // namespace riesz
