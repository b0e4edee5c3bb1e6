#include <gtest/gtest.h>

#include <sstream>

#include "riesz/hom.hpp"
#include "riesz/random.hpp"

using namespace riesz;

namespace {

using Index = CanonicalHom::Index;

CanonicalHom sample_hom() { return CanonicalHom(2, FinVector{2, 0, 3}, Index{0, std::nullopt, 1}); }
CanonicalHom duplication() { return CanonicalHom(1, FinVector{1, 1}, Index{0, 0}); }

// A positive matrix is a lattice homomorphism iff it maps disjoint unit vectors to disjoint columns.
bool columns_disjoint(const Matrix& a) {
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      FinVector ci(a.rows());
      FinVector cj(a.rows());
      for (std::size_t r = 0; r < a.rows(); ++r) {
        ci[r] = a(r, i);
        cj[r] = a(r, j);
      }
      if (!disjoint(ci, cj)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Hom, Apply) {
  EXPECT_EQ(sample_hom().apply(FinVector{5, 7}), (FinVector{10, 0, 21}));
  const FinVector u{1, -2, Scalar(1, 3)};
  EXPECT_EQ(CanonicalHom::identity(3)(u), u);
  EXPECT_EQ(CanonicalHom::zero(3, 2)(u), FinVector(2));
  EXPECT_THROW(sample_hom().apply(FinVector{1}), DimensionMismatch);
}

TEST(Hom, ConstructionValidates) {
  EXPECT_THROW(CanonicalHom(2, FinVector{-1}, Index{0}), PreconditionViolated);
  EXPECT_THROW(CanonicalHom(2, FinVector{1}, Index{2}), PreconditionViolated);
  EXPECT_THROW(CanonicalHom(2, FinVector{1}, Index{std::nullopt}), PreconditionViolated);
  EXPECT_THROW(PositiveMatrix(Matrix{{1, -1}}), PreconditionViolated);
}

TEST(Hom, Compose) {
  const CanonicalHom f = sample_hom();
  EXPECT_EQ(compose(CanonicalHom::identity(3), f), f);
  EXPECT_EQ(compose(CanonicalHom::inclusion(3, 5), CanonicalHom::inclusion(2, 3)), CanonicalHom::inclusion(2, 5));
}

TEST(Hom, Canonicalize) {
  try {
    (void)canonicalize(Matrix{{1, 1}, {0, 2}});
    FAIL() << "expected NotLatticeHom";
  } catch (const NotLatticeHom& e) {
    EXPECT_EQ(e.row(), 1U);
  }
  // Direct check that [[1,1],[0,2]] breaks joins: T(e1 v e2) != T e1 v T e2.
  const Matrix t{{1, 1}, {0, 2}};
  const FinVector e1{1, 0};
  const FinVector e2{0, 1};
  EXPECT_NE(t.apply(join(e1, e2)), join(t.apply(e1), t.apply(e2)));

  EXPECT_EQ(canonicalize(Matrix{{2, 0}, {0, 0}, {0, 3}}), sample_hom());
  EXPECT_EQ(canonicalize(Matrix(2, 3)), CanonicalHom::zero(3, 2));
  EXPECT_THROW(canonicalize(Matrix{{1, -1}}), NotLatticeHom);
}

TEST(Hom, Injective) {
  EXPECT_TRUE(is_injective(CanonicalHom::inclusion(2, 3)));
  EXPECT_FALSE(is_injective(CanonicalHom(2, FinVector{1}, Index{0})));
  EXPECT_TRUE(is_injective(duplication()));
  EXPECT_TRUE(kernel_basis(duplication().to_matrix().matrix()).empty());
}

TEST(Hom, Surjective) {
  EXPECT_TRUE(is_surjective(CanonicalHom::restriction(3, 2)));
  EXPECT_FALSE(is_surjective(duplication()));
  EXPECT_FALSE(solve(duplication().to_matrix().matrix(), FinVector{1, 0}).has_value());
  EXPECT_FALSE(is_surjective(sample_hom()));
}

TEST(Hom, IntervalPreserving) {
  EXPECT_TRUE(is_interval_preserving(CanonicalHom::inclusion(2, 4)));
  EXPECT_FALSE(is_interval_preserving(duplication()));
  EXPECT_TRUE(is_interval_preserving(CanonicalHom::band_projection(Band(4, {0, 3}))));
}

TEST(Hom, Adjoint) {
  EXPECT_EQ(canonicalize(adjoint(CanonicalHom::inclusion(2, 3))), CanonicalHom::restriction(3, 2));
  const PositiveMatrix d = adjoint(duplication());
  EXPECT_EQ(d.matrix(), (Matrix{{1, 1}}));
  EXPECT_THROW(canonicalize(d), NotLatticeHom);
  // The row [1, 1] maps [0, (1,1)] onto [0, 2].
  EXPECT_TRUE(interval_preserving_oracle(d, FinVector{1, 1}, FinVector{Scalar(3, 2)}));
}

TEST(Hom, Oracle) {
  const PositiveMatrix inc = CanonicalHom::inclusion(2, 3).to_matrix();
  EXPECT_TRUE(interval_preserving_oracle(inc, FinVector{1, 1}, FinVector{1, 0, 0}));
  EXPECT_FALSE(interval_preserving_oracle(duplication().to_matrix(), FinVector{1}, FinVector{1, 0}));
  EXPECT_THROW(interval_preserving_oracle(inc, FinVector{1, 1}, FinVector{2, 0, 0}), PreconditionViolated);
  EXPECT_THROW(interval_preserving_oracle(inc, FinVector{-1, 1}, FinVector{0, 0, 0}), PreconditionViolated);
}

TEST(Hom, ImageBand) {
  EXPECT_EQ(image_band(CanonicalHom::inclusion(2, 3)), Band(3, {0, 1}));
  EXPECT_FALSE(image_band(duplication()).has_value());
  EXPECT_EQ(image_band(CanonicalHom::zero(2, 3)), Band::empty(3));
}

TEST(Hom, PrintsCompactForm) {
  std::ostringstream os;
  os << sample_hom();
  EXPECT_EQ(os.str(), "hom 2->3 [1: 1 2; 2: -; 3: 2 3]");
}

TEST(HomProperty, MatrixRoutesAgree) {
  for (std::uint64_t i = 0; i < 400; ++i) {
    Rng rng = Rng::for_trial(17, i);
    const std::size_t n = rng.index(1, 6);
    const std::size_t m = rng.index(1, 6);
    const std::size_t p = rng.index(1, 6);
    const CanonicalHom f = random_hom(rng, n, m, HomKind::general);
    const CanonicalHom g = random_hom(rng, m, p, HomKind::general);
    const Matrix fm = f.to_matrix().matrix();
    ASSERT_EQ(compose(g, f).to_matrix().matrix(), g.to_matrix().matrix() * fm);
    ASSERT_EQ(canonicalize(fm), f);
    ASSERT_TRUE(columns_disjoint(fm));
    ASSERT_EQ(is_injective(f), rank(fm) == n) << f;
    ASSERT_EQ(is_surjective(f), rank(fm) == m) << f;
    const FinVector u = rng.vector(n);
    const FinVector v = rng.vector(n);
    ASSERT_EQ(f(join(u, v)), join(f(u), f(v)));
    ASSERT_EQ(f(meet(u, v)), meet(f(u), f(v)));
    const FinVector w = rng.vector(m);
    std::vector<Scalar> uw(u.begin(), u.end());
    uw.insert(uw.end(), w.begin(), w.end());
    std::vector<Scalar> fg;
    for (const auto& c : f(u)) fg.push_back(c);
    for (const auto& c : g(w)) fg.push_back(c);
    ASSERT_EQ(direct_sum(f, g)(FinVector(uw)), FinVector(fg));
  }
}

TEST(HomProperty, CanonicalizeMatchesDisjointColumns) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::for_trial(19, i);
    const std::size_t r = rng.index(1, 4);
    const std::size_t c = rng.index(1, 4);
    Matrix a(r, c);
    for (std::size_t x = 0; x < r; ++x) {
      for (std::size_t y = 0; y < c; ++y) {
        if (rng.chance(1, 3)) a(x, y) = rng.positive_rational();
      }
    }
    bool canonical = true;
    try {
      (void)canonicalize(a);
    } catch (const NotLatticeHom&) {
      canonical = false;
    }
    ASSERT_EQ(canonical, columns_disjoint(a));
  }
}

TEST(HomProperty, ImageBandAgainstLinearAlgebra) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::for_trial(23, i);
    const std::size_t n = rng.index(1, 5);
    const std::size_t m = rng.index(1, 5);
    const CanonicalHom h = random_hom(rng, n, m, i % 2 ? HomKind::general : HomKind::interval_preserving);
    const Matrix a = h.to_matrix().matrix();
    // The image is a coordinate band iff it is spanned by the unit vectors it contains.
    std::vector<std::size_t> units;
    for (std::size_t x = 0; x < m; ++x) {
      if (solve(a, FinVector::unit(m, x))) units.push_back(x);
    }
    const bool is_band = units.size() == rank(a);
    const auto b = image_band(h);
    ASSERT_EQ(b.has_value(), is_band) << h;
    if (b) {
      ASSERT_EQ(*b, Band(m, units));
    }
    ASSERT_EQ(is_band, is_interval_preserving(h)) << h;
  }
}

TEST(HomProperty, PreimageAndInverse) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::for_trial(29, i);
    const std::size_t n = rng.index(1, 5);
    const CanonicalHom h = random_hom(rng, n, n, HomKind::bijective);
    const CanonicalHom inv = lattice_inverse(h);
    ASSERT_EQ(compose(inv, h), CanonicalHom::identity(n));
    ASSERT_EQ(compose(h, inv), CanonicalHom::identity(n));
    const FinVector u = rng.vector(n);
    ASSERT_EQ(preimage(h, h(u)), u);
  }
  EXPECT_THROW(lattice_inverse(duplication()), PreconditionViolated);
  EXPECT_FALSE(preimage(duplication(), FinVector{1, 0}).has_value());
}
