#pragma once

// Exact feasibility of systems of linear equalities and inequalities over Q.
//
// Two independent deciders are provided: Fourier-Motzkin elimination (after
// Gaussian substitution of the equalities) and a phase-one simplex with
// Bland's rule. feasible() picks Fourier-Motzkin for small systems.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "riesz/error.hpp"
#include "riesz/scalar.hpp"
#include "riesz/vector.hpp"

namespace riesz {

struct LinearConstraint {
  enum class Kind { less_equal, equal };
  FinVector coeffs;
  Scalar rhs;
  Kind kind;
};

/// Constraints coeffs . x (<= | =) rhs over free rational variables.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t vars) : vars_(vars) {}

  std::size_t vars() const noexcept { return vars_; }
  const std::vector<LinearConstraint>& constraints() const noexcept { return constraints_; }

  void add_le(FinVector a, Scalar b) { add(std::move(a), std::move(b), LinearConstraint::Kind::less_equal); }
  void add_ge(FinVector a, Scalar b) { add(-a, Scalar(-b), LinearConstraint::Kind::less_equal); }
  void add_eq(FinVector a, Scalar b) { add(std::move(a), std::move(b), LinearConstraint::Kind::equal); }

  /// lo <= x_i <= hi
  void add_bounds(std::size_t i, const Scalar& lo, const Scalar& hi) {
    add_ge(FinVector::unit(vars_, i), lo);
    add_le(FinVector::unit(vars_, i), hi);
  }

  bool satisfied_by(const FinVector& x) const {
    for (const auto& c : constraints_) {
      const Scalar lhs = dot(c.coeffs, x);
      if (c.kind == LinearConstraint::Kind::equal ? lhs != c.rhs : lhs > c.rhs) return false;
    }
    return true;
  }

 private:
  void add(FinVector a, Scalar b, LinearConstraint::Kind kind) {
    if (a.dim() != vars_) throw DimensionMismatch(vars_, a.dim());
    constraints_.push_back({std::move(a), std::move(b), kind});
  }

  std::size_t vars_;
  std::vector<LinearConstraint> constraints_;
};

namespace detail {

// Inequality a.x <= b, scaled so that the first nonzero coefficient has absolute value 1.
struct Ineq {
  std::vector<Scalar> a;
  Scalar b;

  void normalize() {
    for (const auto& c : a) {
      if (c != 0) {
        const Scalar s = abs_value(c);
        for (auto& x : a) x /= s;
        b /= s;
        return;
      }
    }
  }

  bool trivial() const {
    return std::all_of(a.begin(), a.end(), [](const Scalar& c) { return c == 0; });
  }

  friend bool operator<(const Ineq& l, const Ineq& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  }
};

}  // namespace detail

inline bool feasible_fourier_motzkin(const LinearSystem& sys) {
  const std::size_t n = sys.vars();
  std::vector<detail::Ineq> eqs;
  std::vector<detail::Ineq> ineqs;
  for (const auto& c : sys.constraints()) {
    detail::Ineq row{std::vector<Scalar>(c.coeffs.begin(), c.coeffs.end()), c.rhs};
    (c.kind == LinearConstraint::Kind::equal ? eqs : ineqs).push_back(std::move(row));
  }

  // Substitute the equalities away, one variable per independent equality.
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    auto& eq = eqs[e];
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (eq.a[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == n) {
      if (eq.b != 0) return false;
      continue;
    }
    const Scalar inv = 1 / eq.a[pivot];
    for (auto& c : eq.a) c *= inv;
    eq.b *= inv;
    auto eliminate = [&](detail::Ineq& row) {
      if (row.a[pivot] == 0) return;
      const Scalar f = row.a[pivot];
      for (std::size_t j = 0; j < n; ++j) row.a[j] -= f * eq.a[j];
      row.b -= f * eq.b;
    };
    for (std::size_t k = e + 1; k < eqs.size(); ++k) eliminate(eqs[k]);
    for (auto& row : ineqs) eliminate(row);
  }

  std::set<detail::Ineq> current;
  for (auto& row : ineqs) {
    if (row.trivial()) {
      if (row.b < 0) return false;
      continue;
    }
    row.normalize();
    current.insert(std::move(row));
  }

  std::vector<bool> eliminated(n, false);
  while (!current.empty()) {
    // Eliminate the variable producing the fewest new constraints.
    std::size_t best = n;
    std::size_t best_cost = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (eliminated[j]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& row : current) {
        if (row.a[j] > 0) ++pos;
        if (row.a[j] < 0) ++neg;
      }
      if (pos + neg == 0) {
        eliminated[j] = true;
        continue;
      }
      const std::size_t cost = pos * neg;
      if (best == n || cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    if (best == n) break;
    eliminated[best] = true;

    std::vector<const detail::Ineq*> pos, neg;
    std::set<detail::Ineq> next;
    for (const auto& row : current) {
      if (row.a[best] > 0) {
        pos.push_back(&row);
      } else if (row.a[best] < 0) {
        neg.push_back(&row);
      } else {
        next.insert(row);
      }
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        const Scalar fp = 1 / p->a[best];
        const Scalar fq = -1 / q->a[best];
        detail::Ineq comb{std::vector<Scalar>(n), fp * p->b + fq * q->b};
        for (std::size_t j = 0; j < n; ++j) comb.a[j] = fp * p->a[j] + fq * q->a[j];
        comb.a[best] = 0;
        if (comb.trivial()) {
          if (comb.b < 0) return false;
          continue;
        }
        comb.normalize();
        next.insert(std::move(comb));
      }
    }
    current = std::move(next);
  }
  return true;
}

/// Phase-one simplex over the standard form obtained by splitting free variables
/// and adding slacks. Returns a feasible point when one exists.
inline std::optional<FinVector> feasible_point_simplex(const LinearSystem& sys) {
  const std::size_t n = sys.vars();
  const auto& cons = sys.constraints();
  const std::size_t m = cons.size();
  std::size_t slacks = 0;
  for (const auto& c : cons) {
    if (c.kind == LinearConstraint::Kind::less_equal) ++slacks;
  }
  // Columns: x+ (n), x- (n), slacks, artificials (m), rhs.
  const std::size_t art0 = 2 * n + slacks;
  const std::size_t cols = art0 + m;
  std::vector<std::vector<Scalar>> t(m + 1, std::vector<Scalar>(cols + 1));
  std::vector<std::size_t> basis(m);
  std::size_t s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = cons[i];
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = c.coeffs[j];
      t[i][n + j] = -c.coeffs[j];
    }
    if (c.kind == LinearConstraint::Kind::less_equal) t[i][2 * n + s++] = 1;
    t[i][cols] = c.rhs;
    if (t[i][cols] < 0) {
      for (auto& v : t[i]) v = -v;
    }
    t[i][art0 + i] = 1;
    basis[i] = art0 + i;
  }
  // Objective row: minimize the sum of artificials, expressed in the nonbasic columns.
  auto& obj = t[m];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= cols; ++j) {
      if (j < art0 || j == cols) obj[j] -= t[i][j];
    }
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Scalar best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Scalar ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    const Scalar inv = 1 / t[leave][enter];
    for (auto& v : t[leave]) v *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Scalar f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (obj[cols] != 0) return std::nullopt;
  FinVector x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] += t[i][cols];
    else if (basis[i] < 2 * n) x[basis[i] - n] -= t[i][cols];
  }
  return x;
}

inline bool feasible_simplex(const LinearSystem& sys) { return feasible_point_simplex(sys).has_value(); }

/// Fourier-Motzkin up to fm_var_limit variables, simplex above.
inline bool feasible(const LinearSystem& sys, std::size_t fm_var_limit = 8) {
  return sys.vars() <= fm_var_limit ? feasible_fourier_motzkin(sys) : feasible_simplex(sys);
}

}  // namespace riesz
