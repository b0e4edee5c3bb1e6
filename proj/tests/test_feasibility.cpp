#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include "riesz/feasibility.hpp"
#include "riesz/random.hpp"

using namespace riesz;

namespace {

// alpha t <= beta (or ==) constraints in one unknown.
struct Affine1 {
  Scalar alpha;
  Scalar beta;
  bool equal;
};

bool feasible_1d(const std::vector<Affine1>& cs) {
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
  for (const auto& c : cs) {
    if (c.alpha == 0) {
      if (c.equal ? c.beta != 0 : c.beta < 0) return false;
      continue;
    }
    const Scalar r = c.beta / c.alpha;
    if (c.equal || c.alpha > 0) hi = hi ? std::min(*hi, r) : r;
    if (c.equal || c.alpha < 0) lo = lo ? std::max(*lo, r) : r;
  }
  return !lo || !hi || *lo <= *hi;
}

// Two variables: a nonempty polyhedron other than the plane has a point on
// some constraint line, so it suffices to solve a 1-d problem on each line.
bool feasible_2d(const LinearSystem& sys) {
  const auto& cons = sys.constraints();
  bool any_nonzero = false;
  for (const auto& line : cons) {
    const Scalar a1 = line.coeffs[0];
    const Scalar a2 = line.coeffs[1];
    if (a1 == 0 && a2 == 0) continue;
    any_nonzero = true;
    // (x, y) = p + t d on the line a1 x + a2 y = b.
    Scalar px, py, dx, dy;
    if (a2 != 0) {
      px = 0;
      py = line.rhs / a2;
      dx = 1;
      dy = -a1 / a2;
    } else {
      px = line.rhs / a1;
      py = 0;
      dx = 0;
      dy = 1;
    }
    std::vector<Affine1> cs;
    for (const auto& c : cons) {
      cs.push_back({c.coeffs[0] * dx + c.coeffs[1] * dy, c.rhs - c.coeffs[0] * px - c.coeffs[1] * py,
                    c.kind == LinearConstraint::Kind::equal});
    }
    if (feasible_1d(cs)) return true;
  }
  if (any_nonzero) return false;
  for (const auto& c : cons) {
    if (c.kind == LinearConstraint::Kind::equal ? c.rhs != 0 : c.rhs < 0) return false;
  }
  return true;
}

LinearSystem random_system(Rng& rng, std::size_t vars, std::size_t count) {
  LinearSystem sys(vars);
  for (std::size_t i = 0; i < count; ++i) {
    FinVector a(vars);
    for (std::size_t j = 0; j < vars; ++j) a[j] = rng.chance(1, 4) ? Scalar(0) : Scalar(rng.integer(-4, 4));
    const Scalar b = rng.integer(-6, 6);
    if (rng.chance(1, 6)) {
      sys.add_eq(a, b);
    } else {
      sys.add_le(a, b);
    }
  }
  return sys;
}

}  // namespace

TEST(Feasibility, SmallCases) {
  LinearSystem box(2);
  box.add_bounds(0, 0, 1);
  box.add_bounds(1, 0, 1);
  box.add_le(FinVector{1, 1}, Scalar(3, 2));
  EXPECT_TRUE(feasible_fourier_motzkin(box));
  EXPECT_TRUE(feasible_simplex(box));

  LinearSystem empty = box;
  empty.add_ge(FinVector{1, 1}, 3);
  EXPECT_FALSE(feasible_fourier_motzkin(empty));
  EXPECT_FALSE(feasible_simplex(empty));

  LinearSystem eq(3);
  eq.add_eq(FinVector{1, 1, 1}, 1);
  eq.add_eq(FinVector{1, -1, 0}, 0);
  eq.add_bounds(2, 1, 2);
  EXPECT_TRUE(feasible_fourier_motzkin(eq));
  const auto x = feasible_point_simplex(eq);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(eq.satisfied_by(*x));
  eq.add_ge(FinVector{1, 0, 0}, Scalar(1, 10));
  EXPECT_FALSE(feasible_fourier_motzkin(eq));
  EXPECT_FALSE(feasible_simplex(eq));

  EXPECT_TRUE(feasible(LinearSystem(4)));
}

TEST(FeasibilityProperty, TwoVariableOracle) {
  for (std::uint64_t i = 0; i < 400; ++i) {
    Rng rng = Rng::for_trial(3, i);
    const LinearSystem sys = random_system(rng, 2, rng.index(1, 6));
    const bool expected = feasible_2d(sys);
    ASSERT_EQ(feasible_fourier_motzkin(sys), expected) << "trial " << i;
    const auto x = feasible_point_simplex(sys);
    ASSERT_EQ(x.has_value(), expected) << "trial " << i;
    if (x) {
      ASSERT_TRUE(sys.satisfied_by(*x));
    }
  }
}

TEST(FeasibilityProperty, RoutesAgreeInHigherDimension) {
  std::size_t feasible_count = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::for_trial(5, i);
    const std::size_t vars = rng.index(3, 6);
    const LinearSystem sys = random_system(rng, vars, rng.index(2, 9));
    const bool fm = feasible_fourier_motzkin(sys);
    const auto x = feasible_point_simplex(sys);
    ASSERT_EQ(fm, x.has_value()) << "trial " << i;
    if (x) {
      ASSERT_TRUE(sys.satisfied_by(*x));
      ++feasible_count;
    }
  }
  // Both outcomes occur.
  EXPECT_GT(feasible_count, 0U);
  EXPECT_LT(feasible_count, 300U);
}

TEST(FeasibilityProperty, PlantedPointIsFound) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_trial(9, i);
    const std::size_t vars = rng.index(1, 6);
    const FinVector p = rng.vector(vars);
    LinearSystem sys(vars);
    for (std::size_t c = 0; c < 6; ++c) {
      const FinVector a = rng.vector(vars);
      if (c % 3 == 0) {
        sys.add_eq(a, dot(a, p));
      } else {
        sys.add_le(a, dot(a, p) + rng.nonneg_rational());
      }
    }
    ASSERT_TRUE(feasible_fourier_motzkin(sys));
    const auto x = feasible_point_simplex(sys);
    ASSERT_TRUE(x.has_value());
    ASSERT_TRUE(sys.satisfied_by(*x));
  }
}
