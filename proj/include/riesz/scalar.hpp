#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace riesz {

/// Exact rational scalar. Results of arithmetic are always in lowest terms.
using Scalar = mpq_class;

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses "a/b" or "a". Throws std::invalid_argument on malformed text or a zero denominator.
inline Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

/// Always "num/den", e.g. "3/2", "-1/1", "0/1".
inline std::string to_fraction_string(const Scalar& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Integer literal when the denominator is 1, "num/den" otherwise.
inline std::string to_literal(const Scalar& q) { return q.get_str(); }

inline Scalar abs_value(const Scalar& q) { return q < 0 ? Scalar(-q) : q; }

}  // namespace riesz
