#pragma once

// Lattice homomorphisms R^n -> R^m in weighted-index form, general positive
// matrices, the morphism predicates and the exact interval-preservation oracle.
//
// A canonical hom is (w, p): output coordinate x is w_x * u[p(x)] when w_x > 0
// and 0 otherwise. p is defined exactly on coz(w).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "riesz/error.hpp"
#include "riesz/feasibility.hpp"
#include "riesz/matrix.hpp"
#include "riesz/scalar.hpp"
#include "riesz/vector.hpp"

namespace riesz {

class PositiveMatrix {
 public:
  explicit PositiveMatrix(Matrix m) : m_(std::move(m)) {
    for (std::size_t i = 0; i < m_.rows(); ++i) {
      for (std::size_t j = 0; j < m_.cols(); ++j) {
        if (m_(i, j) < 0) {
          throw PreconditionViolated("positive matrix has a negative entry at (" + std::to_string(i + 1) +
                                     "," + std::to_string(j + 1) + ")");
        }
      }
    }
  }

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  FinVector apply(const FinVector& u) const { return m_.apply(u); }
  PositiveMatrix transpose() const { return PositiveMatrix(m_.transpose()); }

  friend bool operator==(const PositiveMatrix&, const PositiveMatrix&) = default;

 private:
  Matrix m_;
};

inline std::ostream& operator<<(std::ostream& os, const PositiveMatrix& a) { return os << a.matrix(); }

class CanonicalHom {
 public:
  using Index = std::vector<std::optional<std::size_t>>;

  CanonicalHom() = default;

  /// index[x] is the 0-based source column of output row x; it must be set exactly where weight[x] > 0.
  CanonicalHom(std::size_t dom_dim, FinVector weight, Index index)
      : dom_(dom_dim), weight_(std::move(weight)), index_(std::move(index)) {
    if (index_.size() != weight_.dim()) throw DimensionMismatch(weight_.dim(), index_.size());
    for (std::size_t x = 0; x < weight_.dim(); ++x) {
      const std::string row = std::to_string(x + 1);
      if (weight_[x] < 0) throw PreconditionViolated("negative weight in row " + row);
      if ((weight_[x] > 0) != index_[x].has_value()) {
        throw PreconditionViolated("index map must be defined exactly on the positive weights (row " + row + ")");
      }
      if (index_[x] && *index_[x] >= dom_) {
        throw PreconditionViolated("row " + row + " reads column " + std::to_string(*index_[x] + 1) +
                                   " outside a domain of dimension " + std::to_string(dom_));
      }
    }
  }

  static CanonicalHom identity(std::size_t n) {
    Index idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return CanonicalHom(n, FinVector::constant(n, 1), std::move(idx));
  }

  static CanonicalHom zero(std::size_t dom, std::size_t cod) { return CanonicalHom(dom, FinVector(cod), Index(cod)); }

  /// R^n -> R^m onto the first n coordinates (n <= m).
  static CanonicalHom inclusion(std::size_t n, std::size_t m) {
    if (n > m) throw PreconditionViolated("inclusion needs n <= m");
    FinVector w(m);
    Index idx(m);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 1;
      idx[i] = i;
    }
    return CanonicalHom(n, std::move(w), std::move(idx));
  }

  /// R^m -> R^n keeping the first n coordinates (n <= m).
  static CanonicalHom restriction(std::size_t m, std::size_t n) {
    if (n > m) throw PreconditionViolated("restriction needs n <= m");
    Index idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return CanonicalHom(m, FinVector::constant(n, 1), std::move(idx));
  }

  /// The band projection P_B as an endomorphism of R^dim.
  static CanonicalHom band_projection(const Band& b) {
    FinVector w(b.dim());
    Index idx(b.dim());
    for (std::size_t i : b.support()) {
      w[i] = 1;
      idx[i] = i;
    }
    return CanonicalHom(b.dim(), std::move(w), std::move(idx));
  }

  std::size_t dom_dim() const noexcept { return dom_; }
  std::size_t cod_dim() const noexcept { return weight_.dim(); }
  const FinVector& weight() const noexcept { return weight_; }
  const Index& index() const noexcept { return index_; }

  FinVector apply(const FinVector& u) const {
    if (u.dim() != dom_) throw DimensionMismatch(dom_, u.dim());
    FinVector r(cod_dim());
    for (std::size_t x = 0; x < cod_dim(); ++x) {
      if (index_[x]) r[x] = weight_[x] * u[*index_[x]];
    }
    return r;
  }

  FinVector operator()(const FinVector& u) const { return apply(u); }

  PositiveMatrix to_matrix() const {
    Matrix m(cod_dim(), dom_);
    for (std::size_t x = 0; x < cod_dim(); ++x) {
      if (index_[x]) m(x, *index_[x]) = weight_[x];
    }
    return PositiveMatrix(std::move(m));
  }

  friend bool operator==(const CanonicalHom&, const CanonicalHom&) = default;

 private:
  std::size_t dom_ = 0;
  FinVector weight_;
  Index index_;
};

/// One line per row: "x: j w" or "x: -", 1-based.
inline std::ostream& operator<<(std::ostream& os, const CanonicalHom& h) {
  os << "hom " << h.dom_dim() << "->" << h.cod_dim() << " [";
  for (std::size_t x = 0; x < h.cod_dim(); ++x) {
    os << (x ? "; " : "") << x + 1 << ": ";
    if (h.index()[x]) {
      os << *h.index()[x] + 1 << ' ' << to_literal(h.weight()[x]);
    } else {
      os << '-';
    }
  }
  return os << ']';
}

/// g after f.
inline CanonicalHom compose(const CanonicalHom& g, const CanonicalHom& f) {
  if (f.cod_dim() != g.dom_dim()) throw DimensionMismatch(g.dom_dim(), f.cod_dim());
  FinVector w(g.cod_dim());
  CanonicalHom::Index idx(g.cod_dim());
  for (std::size_t x = 0; x < g.cod_dim(); ++x) {
    const auto& y = g.index()[x];
    if (!y || !f.index()[*y]) continue;
    w[x] = g.weight()[x] * f.weight()[*y];
    idx[x] = f.index()[*y];
  }
  return CanonicalHom(f.dom_dim(), std::move(w), std::move(idx));
}

/// Positive scalar multiple c h, c > 0.
inline CanonicalHom scale(const Scalar& c, const CanonicalHom& h) {
  if (c <= 0) throw PreconditionViolated("scaling factor of a lattice homomorphism must be positive");
  return CanonicalHom(h.dom_dim(), c * h.weight(), h.index());
}

/// Block diagonal a (+) b acting on R^(n_a + n_b).
inline CanonicalHom direct_sum(const CanonicalHom& a, const CanonicalHom& b) {
  std::vector<Scalar> w(a.weight().begin(), a.weight().end());
  w.insert(w.end(), b.weight().begin(), b.weight().end());
  CanonicalHom::Index idx = a.index();
  for (const auto& j : b.index()) idx.push_back(j ? std::optional<std::size_t>(*j + a.dom_dim()) : std::nullopt);
  return CanonicalHom(a.dom_dim() + b.dom_dim(), FinVector(std::move(w)), std::move(idx));
}

/// The weighted-index form of a nonnegative matrix with at most one nonzero per row.
inline CanonicalHom canonicalize(const Matrix& a) {
  FinVector w(a.rows());
  CanonicalHom::Index idx(a.rows());
  for (std::size_t x = 0; x < a.rows(); ++x) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(x, j) == 0) continue;
      if (a(x, j) < 0 || idx[x]) throw NotLatticeHom(x + 1);
      w[x] = a(x, j);
      idx[x] = j;
    }
  }
  return CanonicalHom(a.cols(), std::move(w), std::move(idx));
}

inline CanonicalHom canonicalize(const PositiveMatrix& a) { return canonicalize(a.matrix()); }

/// Every column is read by some row with positive weight.
inline bool is_injective(const CanonicalHom& h) {
  std::vector<bool> hit(h.dom_dim(), false);
  for (const auto& j : h.index()) {
    if (j) hit[*j] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

/// No zero row and no column read twice.
inline bool is_surjective(const CanonicalHom& h) {
  std::vector<bool> hit(h.dom_dim(), false);
  for (const auto& j : h.index()) {
    if (!j || hit[*j]) return false;
    hit[*j] = true;
  }
  return true;
}

/// No column read by two rows of positive weight.
inline bool is_interval_preserving(const CanonicalHom& h) {
  std::vector<bool> hit(h.dom_dim(), false);
  for (const auto& j : h.index()) {
    if (!j) continue;
    if (hit[*j]) return false;
    hit[*j] = true;
  }
  return true;
}

inline PositiveMatrix adjoint(const CanonicalHom& h) { return h.to_matrix().transpose(); }

/// The image of h when it is a coordinate band, i.e. coz(w) when h is interval preserving.
inline std::optional<Band> image_band(const CanonicalHom& h) {
  if (!is_interval_preserving(h)) return std::nullopt;
  return Band::of(h.weight());
}

/// Some x with h(x) = y, zero on the columns h does not read; nullopt if y is not in the image.
/// For surjective h this is a positive right inverse.
inline std::optional<FinVector> preimage(const CanonicalHom& h, const FinVector& y) {
  if (y.dim() != h.cod_dim()) throw DimensionMismatch(h.cod_dim(), y.dim());
  FinVector x(h.dom_dim());
  std::vector<bool> set(h.dom_dim(), false);
  for (std::size_t r = 0; r < h.cod_dim(); ++r) {
    const auto& j = h.index()[r];
    if (!j) {
      if (y[r] != 0) return std::nullopt;
      continue;
    }
    const Scalar v = y[r] / h.weight()[r];
    if (set[*j] && x[*j] != v) return std::nullopt;
    x[*j] = v;
    set[*j] = true;
  }
  return x;
}

/// Inverse of a bijective canonical hom; again a lattice homomorphism.
inline CanonicalHom lattice_inverse(const CanonicalHom& h) {
  if (h.dom_dim() != h.cod_dim() || !is_surjective(h)) {
    throw PreconditionViolated("lattice inverse needs a bijective homomorphism");
  }
  FinVector w(h.dom_dim());
  CanonicalHom::Index idx(h.dom_dim());
  for (std::size_t x = 0; x < h.cod_dim(); ++x) {
    const std::size_t j = *h.index()[x];
    w[j] = 1 / h.weight()[x];
    idx[j] = x;
  }
  return CanonicalHom(h.cod_dim(), std::move(w), std::move(idx));
}

/// {0 <= x <= u, A x = v}. Requires u >= 0 and 0 <= v <= A u.
inline LinearSystem interval_oracle_system(const PositiveMatrix& a, const FinVector& u, const FinVector& v) {
  if (u.dim() != a.cols()) throw DimensionMismatch(a.cols(), u.dim());
  if (v.dim() != a.rows()) throw DimensionMismatch(a.rows(), v.dim());
  if (!u.is_positive()) throw PreconditionViolated("oracle needs u >= 0");
  if (!v.is_positive() || !leq(v, a.apply(u))) throw PreconditionViolated("oracle needs 0 <= v <= A u");
  LinearSystem sys(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) sys.add_bounds(j, 0, u[j]);
  for (std::size_t i = 0; i < a.rows(); ++i) sys.add_eq(a.matrix().row(i), v[i]);
  return sys;
}

/// Decides whether v is in A[0,u], i.e. some 0 <= x <= u has A x = v.
inline bool interval_preserving_oracle(const PositiveMatrix& a, const FinVector& u, const FinVector& v) {
  return feasible(interval_oracle_system(a, u, v));
}

}  // namespace riesz
