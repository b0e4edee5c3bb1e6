#pragma once

// Reading and writing the line-oriented system file format.
//
//   system direct|inverse
//   levels L
//   dim k d                 one per level
//   map k k+1 | map k+1 k   one per step, followed by one row per codomain coordinate
//     x: j w                row x reads column j with weight w > 0
//     x: -                  zero row
//   extend none|inclusion|restriction|repeat_last
//
// '#' starts a comment. Indices are 1-based.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "riesz/error.hpp"
#include "riesz/hom.hpp"
#include "riesz/scalar.hpp"
#include "riesz/system.hpp"

namespace riesz {

using AnySystem = std::variant<DirectSystem, InverseSystem>;

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

inline std::size_t parse_count(const std::string& word, std::size_t line, const char* what) {
  if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos || word.size() > 9) {
    throw ParseError(line, std::string("expected a positive integer for ") + what + ", got '" + word + "'");
  }
  const std::size_t v = std::stoul(word);
  if (v == 0) throw ParseError(line, std::string(what) + " must be positive");
  return v;
}

struct PendingMap {
  std::size_t header_line = 0;
  std::size_t step = 0;  // level k of step(k)
  std::vector<std::optional<std::pair<std::size_t, Scalar>>> rows;
  std::vector<bool> seen;
};

}  // namespace detail

inline AnySystem parse_system(std::string_view text) {
  std::optional<Orientation> orientation;
  std::optional<std::size_t> levels;
  std::vector<std::optional<std::size_t>> dims;
  std::vector<std::optional<detail::PendingMap>> maps;
  std::optional<ExtensionRule> rule;
  std::optional<std::size_t> open_map;  // index into maps while rows are being read
  std::size_t line_no = 0;

  auto close_map = [&](std::size_t at_line) {
    if (!open_map) return;
    auto& m = *maps[*open_map];
    for (std::size_t x = 0; x < m.seen.size(); ++x) {
      if (!m.seen[x]) {
        throw ParseError(at_line, "map " + std::to_string(m.step) + " is missing row " + std::to_string(x + 1));
      }
    }
    open_map.reset();
  };

  auto need_header = [&](const char* what) {
    if (!orientation) throw ParseError(line_no, std::string("'") + what + "' before the 'system' line");
    if (!levels) throw ParseError(line_no, std::string("'") + what + "' before the 'levels' line");
  };

  auto dim_at = [&](std::size_t level) -> std::size_t {
    if (!dims[level - 1]) throw ParseError(line_no, "dim of level " + std::to_string(level) + " is not declared");
    return *dims[level - 1];
  };

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto words = detail::split_words(raw);
    if (words.empty()) continue;

    // Row of the current map: "x:" followed by "j w" or "-".
    if (words[0].back() == ':') {
      if (!open_map) throw ParseError(line_no, "row outside of a map block");
      auto& m = *maps[*open_map];
      const std::size_t x = detail::parse_count(words[0].substr(0, words[0].size() - 1), line_no, "row index");
      if (x > m.rows.size()) {
        throw ParseError(line_no, "row " + std::to_string(x) + " exceeds codomain dimension " +
                                      std::to_string(m.rows.size()));
      }
      if (m.seen[x - 1]) throw ParseError(line_no, "duplicate row " + std::to_string(x));
      m.seen[x - 1] = true;
      if (words.size() == 2 && words[1] == "-") continue;
      if (words.size() != 3) throw ParseError(line_no, "expected 'x: j w' or 'x: -'");
      const std::size_t j = detail::parse_count(words[1], line_no, "column index");
      const std::size_t dom = *orientation == Orientation::direct ? dim_at(m.step) : dim_at(m.step + 1);
      if (j > dom) {
        throw ParseError(line_no, "column " + std::to_string(j) + " exceeds domain dimension " + std::to_string(dom));
      }
      Scalar w;
      try {
        w = parse_scalar(words[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      if (w <= 0) throw ParseError(line_no, "weight must be positive; write 'x: -' for a zero row");
      m.rows[x - 1] = std::make_pair(j - 1, w);
      continue;
    }

    close_map(line_no);
    const std::string& key = words[0];
    if (key == "system") {
      if (orientation) throw ParseError(line_no, "duplicate 'system' line");
      if (words.size() != 2 || (words[1] != "direct" && words[1] != "inverse")) {
        throw ParseError(line_no, "expected 'system direct' or 'system inverse'");
      }
      orientation = words[1] == "direct" ? Orientation::direct : Orientation::inverse;
    } else if (key == "levels") {
      if (!orientation) throw ParseError(line_no, "'levels' before the 'system' line");
      if (levels) throw ParseError(line_no, "duplicate 'levels' line");
      if (words.size() != 2) throw ParseError(line_no, "expected 'levels L'");
      levels = detail::parse_count(words[1], line_no, "levels");
      dims.assign(*levels, std::nullopt);
      maps.assign(*levels - 1, std::nullopt);
    } else if (key == "dim") {
      need_header("dim");
      if (words.size() != 3) throw ParseError(line_no, "expected 'dim k d'");
      const std::size_t k = detail::parse_count(words[1], line_no, "level");
      const std::size_t d = detail::parse_count(words[2], line_no, "dimension");
      if (k > *levels) throw ParseError(line_no, "level " + std::to_string(k) + " exceeds 'levels'");
      if (dims[k - 1]) throw ParseError(line_no, "duplicate dim for level " + std::to_string(k));
      dims[k - 1] = d;
    } else if (key == "map") {
      need_header("map");
      if (words.size() != 3) throw ParseError(line_no, "expected 'map a b'");
      const std::size_t a = detail::parse_count(words[1], line_no, "level");
      const std::size_t b = detail::parse_count(words[2], line_no, "level");
      const bool direct = *orientation == Orientation::direct;
      if (direct ? b != a + 1 : a != b + 1) {
        throw ParseError(line_no, direct ? "direct maps go from level k to k+1" : "inverse maps go from level k+1 to k");
      }
      const std::size_t k = direct ? a : b;
      if (k + 1 > *levels) throw ParseError(line_no, "map beyond the declared levels");
      if (maps[k - 1]) throw ParseError(line_no, "duplicate map for step " + std::to_string(k));
      const std::size_t cod = direct ? dim_at(k + 1) : dim_at(k);
      dim_at(direct ? k : k + 1);
      detail::PendingMap m;
      m.header_line = line_no;
      m.step = k;
      m.rows.assign(cod, std::nullopt);
      m.seen.assign(cod, false);
      maps[k - 1] = std::move(m);
      open_map = k - 1;
    } else if (key == "extend") {
      need_header("extend");
      if (rule) throw ParseError(line_no, "duplicate 'extend' line");
      if (words.size() != 2) throw ParseError(line_no, "expected 'extend rule'");
      rule = parse_extension_rule(words[1]);
      if (!rule) throw ParseError(line_no, "unknown extension rule '" + words[1] + "'");
      if (*rule == ExtensionRule::inclusion && *orientation != Orientation::direct) {
        throw ParseError(line_no, "'inclusion' extends direct systems only");
      }
      if (*rule == ExtensionRule::restriction && *orientation != Orientation::inverse) {
        throw ParseError(line_no, "'restriction' extends inverse systems only");
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + key + "'");
    }
  }
  const std::size_t end_line = line_no + 1;
  close_map(end_line);
  if (!orientation) throw ParseError(end_line, "missing 'system' line");
  if (!levels) throw ParseError(end_line, "missing 'levels' line");
  for (std::size_t k = 1; k <= *levels; ++k) {
    if (!dims[k - 1]) throw ParseError(end_line, "missing dim for level " + std::to_string(k));
  }
  std::vector<std::size_t> dim_values;
  for (const auto& d : dims) dim_values.push_back(*d);

  std::vector<CanonicalHom> steps;
  for (std::size_t k = 1; k < *levels; ++k) {
    if (!maps[k - 1]) throw ParseError(end_line, "missing map for step " + std::to_string(k));
    const auto& m = *maps[k - 1];
    const std::size_t dom = *orientation == Orientation::direct ? dim_values[k - 1] : dim_values[k];
    FinVector w(m.rows.size());
    CanonicalHom::Index idx(m.rows.size());
    for (std::size_t x = 0; x < m.rows.size(); ++x) {
      if (!m.rows[x]) continue;
      idx[x] = m.rows[x]->first;
      w[x] = m.rows[x]->second;
    }
    steps.emplace_back(dom, std::move(w), std::move(idx));
  }
  const ExtensionRule r = rule.value_or(ExtensionRule::none);
  if (r == ExtensionRule::repeat_last) {
    if (*levels < 2) throw ParseError(end_line, "'repeat_last' needs at least two levels");
    if (dim_values[*levels - 1] < dim_values[*levels - 2]) {
      throw ParseError(end_line, "'repeat_last' needs the last step not to decrease the dimension");
    }
  }
  if (*orientation == Orientation::direct) return DirectSystem::from_prefix(dim_values, std::move(steps), r);
  return InverseSystem::from_prefix(dim_values, std::move(steps), r);
}

/// Canonical text of levels 1..depth. When depth reaches the rule prefix the
/// prefix and its extension rule are written instead, so parsing reproduces s.
template <Orientation O>
std::string emit_system(const SequentialSystem<O>& s, std::size_t depth) {
  if (depth == 0) throw PreconditionViolated("emit depth must be at least 1");
  const auto prefix = s.rule_prefix_levels();
  const bool with_rule = prefix && depth >= *prefix && s.rule() != ExtensionRule::none;
  const std::size_t levels = prefix && depth >= *prefix ? *prefix : depth;
  std::ostringstream out;
  out << "system " << to_string(O) << '\n';
  out << "levels " << levels << '\n';
  for (std::size_t k = 1; k <= levels; ++k) out << "dim " << k << ' ' << s.dim(k) << '\n';
  for (std::size_t k = 1; k < levels; ++k) {
    const CanonicalHom h = s.step(k);
    if (O == Orientation::direct) {
      out << "map " << k << ' ' << k + 1 << '\n';
    } else {
      out << "map " << k + 1 << ' ' << k << '\n';
    }
    for (std::size_t x = 0; x < h.cod_dim(); ++x) {
      out << "  " << x + 1 << ": ";
      if (h.index()[x]) {
        out << *h.index()[x] + 1 << ' ' << to_literal(h.weight()[x]) << '\n';
      } else {
        out << "-\n";
      }
    }
  }
  out << "extend " << to_string(with_rule ? s.rule() : ExtensionRule::none) << '\n';
  return out.str();
}

inline std::string emit_system(const AnySystem& s, std::size_t depth) {
  return std::visit([depth](const auto& sys) { return emit_system(sys, depth); }, s);
}

}  // namespace riesz
