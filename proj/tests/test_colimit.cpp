#include <gtest/gtest.h>

#include "riesz/colimit.hpp"
#include "riesz/random.hpp"

using namespace riesz;

namespace {

const DirectSystem& inc() {
  static const DirectSystem s = DirectSystem::standard_chain();
  return s;
}

// 1 -> 2 by duplication, then inclusions; the chain is not interval preserving but injective.
DirectSystem duplicating() {
  return DirectSystem::from_prefix({1, 2, 3},
                                   {CanonicalHom(1, FinVector{1, 1}, {0, 0}), CanonicalHom::inclusion(2, 3)},
                                   ExtensionRule::none);
}

DirectSystem collapsing() {
  return DirectSystem::from_prefix({2, 1}, {CanonicalHom(2, FinVector{1}, {0})}, ExtensionRule::none);
}

}  // namespace

TEST(Colimit, EmbedAndPromote) {
  const ColimElement a = embed(inc(), 2, FinVector{1, 2});
  EXPECT_EQ(a.level(), 2U);
  EXPECT_EQ(a.vector(), (FinVector{1, 2}));
  EXPECT_EQ(promote(a, 4).vector(), (FinVector{1, 2, 0, 0}));
  EXPECT_THROW(embed(inc(), 2, FinVector{1}), DimensionMismatch);
  EXPECT_THROW(promote(a, 1), PreconditionViolated);
}

TEST(Colimit, GermEquality) {
  EXPECT_TRUE(germ_equal(embed(inc(), 2, FinVector{1, 2}), embed(inc(), 4, FinVector{1, 2, 0, 0})));
  EXPECT_FALSE(germ_equal(embed(inc(), 2, FinVector{1, 2}), embed(inc(), 3, FinVector{1, 2, 1})));
  const DirectSystem c = collapsing();
  EXPECT_THROW(germ_equal(embed(c, 1, FinVector{0, 1}), embed(c, 2, FinVector{0})), InjectivityRequired);
}

TEST(Colimit, CanonicalForm) {
  const ColimElement a = canonical_form(embed(inc(), 4, FinVector{1, 2, 0, 0}));
  EXPECT_EQ(a.level(), 2U);
  EXPECT_EQ(a.vector(), (FinVector{1, 2}));
  const ColimElement b = canonical_form(embed(inc(), 4, FinVector{0, 0, 0, 5}));
  EXPECT_EQ(b.level(), 4U);
  // Through a duplication step only the diagonal pulls back.
  const DirectSystem d = duplicating();
  EXPECT_EQ(canonical_form(embed(d, 2, FinVector{3, 3})).level(), 1U);
  EXPECT_EQ(canonical_form(embed(d, 2, FinVector{3, 4})).level(), 2U);
}

TEST(Colimit, Operations) {
  const ColimElement a = embed(inc(), 1, FinVector{1});
  const ColimElement b = embed(inc(), 2, FinVector{0, 3});
  const ColimElement j = join(a, b);
  EXPECT_EQ(j.level(), 2U);
  EXPECT_EQ(j.vector(), (FinVector{1, 3}));
  EXPECT_TRUE(is_zero(a + Scalar(-1) * a));
  EXPECT_TRUE(is_positive(embed(inc(), 3, FinVector{0, 1, 0})));
  EXPECT_FALSE(is_positive(embed(inc(), 2, FinVector{1, -1})));
  EXPECT_THROW(join(a, embed(DirectSystem::standard_chain(), 1, FinVector{1})), SystemMismatch);
}

TEST(ColimitProperty, RepresentativeIndependence) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_trial(43, i);
    const DirectSystem s = random_injective_chain(rng, 6);
    const std::size_t n1 = rng.index(1, 5);
    const std::size_t n2 = rng.index(1, 5);
    const ColimElement a = embed(s, n1, rng.vector(s.dim(n1)));
    const ColimElement b = embed(s, n2, rng.vector(s.dim(n2)));
    const ColimElement a2 = promote(a, rng.index(n1, 6));
    const ColimElement b2 = promote(b, rng.index(n2, 6));
    ASSERT_TRUE(germ_equal(a, a2));
    ASSERT_TRUE(germ_equal(join(a, b), join(a2, b2)));
    ASSERT_TRUE(germ_equal(meet(a, b), meet(a2, b2)));
    ASSERT_TRUE(germ_equal(a + b, a2 + b2));
    ASSERT_TRUE(germ_equal(abs(a), abs(a2)));
    ASSERT_EQ(is_positive(a), is_positive(a2));
    ASSERT_TRUE(germ_equal(canonical_form(a2), a));
    ASSERT_LE(canonical_form(a2).level(), n1);
    // Riesz decomposition holds in the limit too.
    ASSERT_TRUE(germ_equal(a, pos_part(a) - pos_part(Scalar(-1) * a)));
  }
}

TEST(Colimit, InducedMap) {
  const DirectSystem a = DirectSystem::standard_chain();
  const DirectSystem b = DirectSystem::standard_chain();
  const DirectMorphism twice(a, b, [](std::size_t k) { return scale(2, CanonicalHom::identity(k)); });
  const ColimElement x = induced_colimit_map(twice, embed(a, 2, FinVector{1, -3}));
  EXPECT_TRUE(x.system() == b);
  EXPECT_EQ(x.vector(), (FinVector{2, -6}));
}
