#pragma once

// JSON forms. Scalars are "num/den" strings, bands are sorted 1-based index
// arrays, germs are {"level", "coords"} and threads list their verified prefix.

#include <cstddef>
#include <string>

#include <json.hpp>

#include "riesz/colimit.hpp"
#include "riesz/duality.hpp"
#include "riesz/limit.hpp"
#include "riesz/scalar.hpp"
#include "riesz/suites.hpp"
#include "riesz/vector.hpp"

namespace riesz {

using Json = nlohmann::ordered_json;

inline Json to_json(const Scalar& q) { return to_fraction_string(q); }

inline Json to_json(const FinVector& v) {
  Json out = Json::array();
  for (const Scalar& c : v) out.push_back(to_fraction_string(c));
  return out;
}

inline FinVector vector_from_json(const Json& j) {
  FinVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = parse_scalar(j[i].get<std::string>());
  return v;
}

inline Json to_json(const Band& b) {
  Json out = Json::array();
  for (std::size_t i : b.support()) out.push_back(i + 1);
  return out;
}

inline Json to_json(const ColimElement& a) { return Json{{"level", a.level()}, {"coords", to_json(a.vector())}}; }

/// Components 1..depth; depth defaults to the verified depth.
inline Json to_json(const Thread& t, std::size_t depth = 0) {
  if (depth == 0) depth = t.verified_depth();
  Json comps = Json::array();
  for (std::size_t k = 1; k <= depth; ++k) comps.push_back(to_json(t.component(k)));
  Json out{{"depth", depth}, {"components", comps}};
  if (!t.rule_name().empty()) out["rule"] = t.rule_name();
  return out;
}

inline Json to_json(const ColimFunctional& f, std::size_t depth = 0) {
  Json out{{"kind", "dual-thread"}};
  out["thread"] = to_json(f.thread(), depth);
  return out;
}

inline Json to_json(const LimFunctional& f) {
  Json out{{"kind", "dual-germ"}};
  out["germ"] = to_json(f.germ());
  return out;
}

inline Json to_json(const ReportTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(r);
  return Json{{"title", t.title}, {"columns", t.columns}, {"rows", rows}};
}

inline Json to_json(const SuiteReport& r, const std::string& command = "verify") {
  Json results = Json::array();
  for (const PropertyResult& p : r.results) {
    Json item{{"name", p.name}, {"claim", p.claim}, {"status", p.passed ? "pass" : "fail"}, {"checks", p.checks}};
    if (p.counterexample) item["counterexample"] = *p.counterexample;
    results.push_back(std::move(item));
  }
  Json out{{"command", command}, {"suite", r.suite}, {"seed", r.seed}};
  out["depth"] = r.depth ? Json(r.depth) : Json(nullptr);
  out["trials"] = r.trials;
  out["status"] = r.passed() ? "pass" : "fail";
  out["results"] = results;
  if (!r.notes.empty()) out["notes"] = r.notes;
  if (!r.tables.empty()) {
    Json tables = Json::array();
    for (const auto& t : r.tables) tables.push_back(to_json(t));
    out["tables"] = tables;
  }
  return out;
}

}  // namespace riesz
