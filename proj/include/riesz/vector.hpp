#pragma once

// Component lattices R^n: exact coordinate vectors, the coordinatewise lattice
// operations, coordinate bands and band projections. Indices are 0-based here;
// every external format is 1-based.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "riesz/error.hpp"
#include "riesz/scalar.hpp"

namespace riesz {

class FinVector {
 public:
  FinVector() = default;
  explicit FinVector(std::size_t dim) : coords_(dim) {}
  explicit FinVector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  FinVector(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static FinVector zeros(std::size_t dim) { return FinVector(dim); }

  static FinVector unit(std::size_t dim, std::size_t i) {
    FinVector e(dim);
    e.coords_.at(i) = 1;
    return e;
  }

  static FinVector constant(std::size_t dim, const Scalar& c) {
    return FinVector(std::vector<Scalar>(dim, c));
  }

  std::size_t dim() const noexcept { return coords_.size(); }

  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const Scalar& at(std::size_t i) const { return coords_.at(i); }

  std::span<const Scalar> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c == 0; });
  }

  /// u >= 0 in the coordinatewise order.
  bool is_positive() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c >= 0; });
  }

  /// Indices of the nonzero coordinates, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] != 0) s.push_back(i);
    }
    return s;
  }

  friend bool operator==(const FinVector&, const FinVector&) = default;

 private:
  std::vector<Scalar> coords_;
};

inline void require_same_dim(const FinVector& u, const FinVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
}

namespace detail {

template <class Op>
FinVector zip(const FinVector& u, const FinVector& v, Op op) {
  require_same_dim(u, v);
  FinVector r(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) r[i] = op(u[i], v[i]);
  return r;
}

template <class Op>
FinVector map(const FinVector& u, Op op) {
  FinVector r(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) r[i] = op(u[i]);
  return r;
}

}  // namespace detail

inline FinVector join(const FinVector& u, const FinVector& v) {
  return detail::zip(u, v, [](const Scalar& a, const Scalar& b) { return a < b ? b : a; });
}

inline FinVector meet(const FinVector& u, const FinVector& v) {
  return detail::zip(u, v, [](const Scalar& a, const Scalar& b) { return a < b ? a : b; });
}

inline FinVector abs(const FinVector& u) {
  return detail::map(u, [](const Scalar& a) { return abs_value(a); });
}

inline FinVector pos_part(const FinVector& u) {
  return detail::map(u, [](const Scalar& a) { return a > 0 ? a : Scalar(0); });
}

inline FinVector neg_part(const FinVector& u) {
  return detail::map(u, [](const Scalar& a) { return a < 0 ? Scalar(-a) : Scalar(0); });
}

inline FinVector operator+(const FinVector& u, const FinVector& v) {
  return detail::zip(u, v, [](const Scalar& a, const Scalar& b) { return Scalar(a + b); });
}

inline FinVector operator-(const FinVector& u, const FinVector& v) {
  return detail::zip(u, v, [](const Scalar& a, const Scalar& b) { return Scalar(a - b); });
}

inline FinVector operator-(const FinVector& u) {
  return detail::map(u, [](const Scalar& a) { return Scalar(-a); });
}

inline FinVector operator*(const Scalar& c, const FinVector& u) {
  return detail::map(u, [&c](const Scalar& a) { return Scalar(c * a); });
}

inline Scalar dot(const FinVector& u, const FinVector& v) {
  require_same_dim(u, v);
  Scalar s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

/// Coordinatewise u <= v.
inline bool leq(const FinVector& u, const FinVector& v) {
  require_same_dim(u, v);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

/// |u| ^ |v| = 0.
inline bool disjoint(const FinVector& u, const FinVector& v) { return meet(abs(u), abs(v)).is_zero(); }

/// Whether v lies in the ideal generated by u, i.e. |v| <= c|u| for some c >= 0.
/// In R^n this is support(v) contained in support(u).
inline bool principal_ideal_contains(const FinVector& u, const FinVector& v) {
  require_same_dim(u, v);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (v[i] != 0 && u[i] == 0) return false;
  }
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const FinVector& u) {
  os << '(';
  for (std::size_t i = 0; i < u.dim(); ++i) os << (i ? "," : "") << to_literal(u[i]);
  return os << ')';
}

/// A coordinate band of R^dim, identified with its support.
class Band {
 public:
  Band() = default;

  Band(std::size_t dim, std::vector<std::size_t> support) : dim_(dim), support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    if (!support_.empty() && support_.back() >= dim_) {
      throw std::out_of_range("band index " + std::to_string(support_.back() + 1) +
                              " exceeds dimension " + std::to_string(dim_));
    }
  }

  static Band full(std::size_t dim) {
    std::vector<std::size_t> s(dim);
    for (std::size_t i = 0; i < dim; ++i) s[i] = i;
    return Band(dim, std::move(s));
  }

  static Band empty(std::size_t dim) { return Band(dim, {}); }

  /// Band generated by a vector: its support.
  static Band of(const FinVector& u) { return Band(u.dim(), u.support()); }

  /// Bands {0..k-1} of R^dim.
  static Band prefix(std::size_t dim, std::size_t k) {
    std::vector<std::size_t> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    return Band(dim, std::move(s));
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  std::size_t size() const noexcept { return support_.size(); }
  bool is_empty() const noexcept { return support_.empty(); }
  bool is_full() const noexcept { return support_.size() == dim_; }

  bool contains(std::size_t i) const { return std::binary_search(support_.begin(), support_.end(), i); }

  bool subset_of(const Band& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch(other.dim_, dim_);
    return std::includes(other.support_.begin(), other.support_.end(), support_.begin(), support_.end());
  }

  Band complement() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!contains(i)) s.push_back(i);
    }
    return Band(dim_, std::move(s));
  }

  friend auto operator<=>(const Band&, const Band&) = default;
  friend bool operator==(const Band&, const Band&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> support_;
};

inline void require_same_dim(const Band& a, const Band& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

/// Union of supports: the band generated by A and B.
inline Band join(const Band& a, const Band& b) {
  require_same_dim(a, b);
  std::vector<std::size_t> s;
  std::set_union(a.support().begin(), a.support().end(), b.support().begin(), b.support().end(),
                 std::back_inserter(s));
  return Band(a.dim(), std::move(s));
}

inline Band meet(const Band& a, const Band& b) {
  require_same_dim(a, b);
  std::vector<std::size_t> s;
  std::set_intersection(a.support().begin(), a.support().end(), b.support().begin(), b.support().end(),
                        std::back_inserter(s));
  return Band(a.dim(), std::move(s));
}

inline Band complement(const Band& a) { return a.complement(); }

/// Keeps the coordinates in B, zeroes the rest.
inline FinVector band_projection(const Band& b, const FinVector& u) {
  if (b.dim() != u.dim()) throw DimensionMismatch(b.dim(), u.dim());
  FinVector r(u.dim());
  for (std::size_t i : b.support()) r[i] = u[i];
  return r;
}

/// S^d: the band of vectors disjoint from every element of S.
inline Band disjoint_complement(std::span<const FinVector> s, std::size_t dim) {
  std::vector<bool> hit(dim, false);
  for (const auto& u : s) {
    if (u.dim() != dim) throw DimensionMismatch(dim, u.dim());
    for (std::size_t i : u.support()) hit[i] = true;
  }
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!hit[i]) support.push_back(i);
  }
  return Band(dim, std::move(support));
}

inline std::ostream& operator<<(std::ostream& os, const Band& b) {
  os << '{';
  for (std::size_t k = 0; k < b.support().size(); ++k) os << (k ? "," : "") << b.support()[k] + 1;
  return os << "}/" << b.dim();
}

}  // namespace riesz
