#include <gtest/gtest.h>

#include <variant>

#include "riesz/carrier.hpp"

using namespace riesz;

TEST(Carrier, NullIdealAndCarrier) {
  const Functional phi{0, 5, 0, 2};
  EXPECT_EQ(null_ideal(phi), Band(4, {0, 2}));
  EXPECT_EQ(carrier(phi), Band(4, {1, 3}));
  EXPECT_EQ(carrier(Functional{1, Scalar(1, 2), 3}), Band::full(3));
  EXPECT_TRUE(carrier(Functional{0, 0}).is_empty());
}

TEST(Carrier, Annihilator) {
  EXPECT_EQ(annihilator(Band(3, {0, 1})), Band(3, {2}));
  EXPECT_TRUE(annihilator(Band::full(3)).is_empty());
  EXPECT_EQ(annihilator(Band::empty(3)), Band::full(3));
  const Band a(4, {1, 3});
  EXPECT_EQ(annihilator(annihilator(a)), a);
}

TEST(Carrier, Disjointify) {
  const auto [p1, q1] = disjointify(Functional{2, 1, 3}, Functional{1, 4, 3});
  EXPECT_EQ(p1, (Functional{2, 0, 3}));
  EXPECT_EQ(q1, (Functional{0, 4, 0}));
  EXPECT_EQ(join(p1.vector(), q1.vector()), (FinVector{2, 4, 3}));
  EXPECT_TRUE(meet(p1.vector(), q1.vector()).is_zero());

  const auto [a, b] = disjointify(Functional{1, 0}, Functional{0, 2});
  EXPECT_EQ(a, (Functional{1, 0}));
  EXPECT_EQ(b, (Functional{0, 2}));
  const auto [c, d] = disjointify(Functional{3, 1}, Functional{0, 0});
  EXPECT_EQ(c, (Functional{3, 1}));
  EXPECT_EQ(d, (Functional{0, 0}));
  EXPECT_THROW(disjointify(Functional{-1}, Functional{1}), PreconditionViolated);
}

TEST(Carrier, StrictPositivity) {
  EXPECT_TRUE(strictly_positive(Functional{1, Scalar(1, 2), 3}));
  EXPECT_FALSE(strictly_positive(Functional{1, 0}));
  const Functional eta = separating_minorant(Functional{1, 2, 3}, FinVector{0, -1, 0});
  EXPECT_EQ(eta, (Functional{0, 2, 0}));
  EXPECT_THROW(separating_minorant(Functional{1, 0}, FinVector{1, 0}), PreconditionViolated);
}

TEST(Carrier, PmMapFiniteModel) {
  const auto fam = pm_map(BandFamily::finite(3), FinVector{1, 2, 3});
  EXPECT_EQ(fam.size(), 8U);
  EXPECT_EQ(fam.at(Band(3, {0, 2})), (FinVector{1, 0, 3}));
  EXPECT_EQ(pm_preimage(BandFamily::finite(3), fam), (FinVector{1, 2, 3}));
  EXPECT_THROW(pm_map(BandFamily::sequential(), FinVector{1}), ModelMismatch);
}

TEST(Carrier, PmMapSequentialModel) {
  const BandFamily seq = BandFamily::sequential();
  const Sequence ones{[](std::size_t) { return Scalar(1); }, "ones"};
  const Thread t = pm_map(seq, ones);
  verify_thread(t, 8);
  EXPECT_TRUE(thread_equal_upto(t, ones_thread(sequential_model().romega), 8));
  const Sequence back = pm_preimage_romega(t);
  EXPECT_EQ(back.prefix(6), FinVector::constant(6, 1));

  const ColimElement u = embed(sequential_model().c00, 2, FinVector{3, -1});
  const Thread pu = pm_map(seq, u);
  EXPECT_EQ(pu.component(1), (FinVector{3}));
  EXPECT_EQ(pu.component(4), (FinVector{3, -1, 0, 0}));
  verify_thread(pu, 5);
  const auto r = pm_preimage_c00(pu, 2);
  ASSERT_TRUE(std::holds_alternative<ColimElement>(r));
  EXPECT_TRUE(germ_equal(std::get<ColimElement>(r), u));
}

TEST(Carrier, AllOnesHasNoFinitelySupportedPreimage) {
  const Thread ones = ones_thread(sequential_model().romega);
  verify_thread(ones, 9);
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto r = pm_preimage_c00(ones, k);
    ASSERT_TRUE(std::holds_alternative<NotInImage>(r)) << k;
    const NotInImage proof = std::get<NotInImage>(r);
    EXPECT_EQ(proof.support_bound, k);
    EXPECT_EQ(proof.level, k + 1);
    EXPECT_EQ(proof.coordinate, k + 1);
  }
  EXPECT_THROW(pm_preimage_c00(ones, 9), DepthInsufficient);
}

TEST(Carrier, OrderDenseWitness) {
  const Thread ones = ones_thread(sequential_model().romega);
  verify_thread(ones, 5);
  const ColimElement v = pm_order_dense_witness(ones, 5);
  EXPECT_EQ(v.level(), 1U);
  EXPECT_EQ(v.vector(), (FinVector{1}));

  const Thread late = section_thread(sequential_model().romega, 3, FinVector{0, 0, 2});
  verify_thread(late, 5);
  const ColimElement w = pm_order_dense_witness(late, 5);
  EXPECT_EQ(w.level(), 3U);
  EXPECT_EQ(w.vector(), (FinVector{0, 0, 2}));

  const Thread zero = zero_thread(sequential_model().romega);
  verify_thread(zero, 5);
  EXPECT_THROW(pm_order_dense_witness(zero, 5), AllZeroUpToDepth);
}

TEST(Carrier, FiniteCarrierIso) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Rng rng(n);
    const CarrierIsoReport r = finite_carrier_limit_iso(n, rng);
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(r.rows.size(), std::size_t{1} << n);
    EXPECT_EQ(r.compatible_dim, n);
  }
  Rng rng(1);
  EXPECT_THROW(finite_carrier_limit_iso(4, rng), PreconditionViolated);
}

TEST(Carrier, PerfectCertificates) {
  Rng rng(5);
  const PerfectCertificate inc = perfect_certificate(DirectSystem::standard_chain(), 6, 10, rng);
  EXPECT_TRUE(inc.ok());
  EXPECT_EQ(inc.checks.size(), 10U);

  const DirectSystem weighted = DirectSystem::from_generators(
      [](std::size_t k) { return k; }, [](std::size_t k) { return scale(2, CanonicalHom::inclusion(k, k + 1)); });
  EXPECT_TRUE(perfect_certificate(weighted, 6, 10, rng).ok());

  const DirectSystem dup = DirectSystem::from_prefix({1, 2}, {CanonicalHom(1, FinVector{1, 1}, {0, 0})},
                                                     ExtensionRule::none);
  try {
    (void)perfect_certificate(dup, 2, 3, rng);
    FAIL() << "expected CertificateRefused";
  } catch (const CertificateRefused& e) {
    EXPECT_EQ(e.flag(), "images_are_bands");
  }
  const DirectSystem collapse = DirectSystem::from_prefix({2, 1}, {CanonicalHom(2, FinVector{1}, {0})},
                                                          ExtensionRule::none);
  EXPECT_THROW(perfect_certificate(collapse, 2, 3, rng), CertificateRefused);

  EXPECT_TRUE(perfect_certificate(InverseSystem::standard_chain(), 6, 10, rng).ok());
  const InverseSystem gap = InverseSystem::from_prefix(
      {2, 2}, {CanonicalHom(2, FinVector{1, 0}, {0, std::nullopt})}, ExtensionRule::none);
  EXPECT_THROW(perfect_certificate(gap, 2, 3, rng), CertificateRefused);
}
