#pragma once

// The riesz-limits command line: verify <suite>, demo <name>, check <file>.
// Exit codes: 0 all pass, 1 property failure, 2 usage or parse error.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riesz/carrier.hpp"
#include "riesz/colimit.hpp"
#include "riesz/duality.hpp"
#include "riesz/error.hpp"
#include "riesz/limit.hpp"
#include "riesz/random.hpp"
#include "riesz/serialize.hpp"
#include "riesz/suites.hpp"
#include "riesz/system.hpp"
#include "riesz/system_io.hpp"

namespace riesz {

enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_usage = 2 };

struct RunConfig {
  std::string command;
  std::string name;  // suite, demo or input path
  std::size_t depth = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 42;
  std::string format = "json";
};

namespace cli_detail {

inline const char* mark(bool b) { return b ? "✓" : "✗"; }

inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

/// Columns padded to the widest cell plus two spaces; no trailing blanks.
inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - display_width(r[i]) + 2, ' ');
    }
    out << line << '\n';
  }
}

inline std::string band_cell(const std::optional<Band>& b) {
  if (!b) return "-";
  std::string s = "{";
  for (std::size_t i = 0; i < b->support().size(); ++i) s += (i ? "," : "") + std::to_string(b->support()[i] + 1);
  return s + "}";
}

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace cli_detail

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SuiteReport rep;
  try {
    rep = run_suite(cfg.name, SuiteConfig{cfg.seed, cfg.trials, cfg.depth});
  } catch (const UnknownSuite& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (cfg.format == "json") {
    out << to_json(rep).dump(2) << '\n';
  } else {
    out << "suite " << rep.suite << "  seed " << rep.seed << "  trials " << rep.trials;
    if (rep.depth) out << "  depth " << rep.depth;
    out << '\n';
    for (const PropertyResult& p : rep.results) {
      out << (p.passed ? "PASS " : "FAIL ") << p.name << " (" << p.checks << " checks)\n";
      if (p.counterexample) out << "  counterexample: " << *p.counterexample << '\n';
    }
    for (const ReportTable& t : rep.tables) {
      out << t.title << '\n';
      std::vector<std::vector<std::string>> rows{t.columns};
      rows.insert(rows.end(), t.rows.begin(), t.rows.end());
      cli_detail::print_table(out, rows);
    }
    for (const std::string& n : rep.notes) out << "note: " << n << '\n';
    out << "result: " << (rep.passed() ? "pass" : "fail") << '\n';
  }
  return rep.passed() ? exit_pass : exit_failure;
}

namespace demos {

inline bool romega_pm(const RunConfig& cfg, std::ostream& out) {
  const std::size_t depth = cfg.depth ? cfg.depth : 8;
  const auto& model = sequential_model();
  const BandFamily seq = BandFamily::sequential();
  out << "Compatible families over the bands {1..k} of the sequence space, checked on levels 1.." << depth << ".\n";
  Rng rng(cfg.seed);
  const std::size_t n0 = std::min<std::size_t>(3, depth);
  std::vector<Thread> families{ones_thread(model.romega), thread_from_rule(
                                                              model.romega,
                                                              [](std::size_t k) {
                                                                FinVector v(k);
                                                                for (std::size_t i = 0; i < k; ++i)
                                                                  v[i] = Scalar(1, static_cast<unsigned long>(i + 1));
                                                                return v;
                                                              },
                                                              "harmonic"),
                               section_thread(model.romega, n0, rng.vector(n0))};
  bool ok = true;
  for (const Thread& t : families) {
    verify_thread(t, depth);
    out << "\nfamily " << (t.rule_name().empty() ? t.provenance() : t.rule_name()) << '\n';
    for (std::size_t k = 1; k <= depth; ++k) out << "  t_" << k << " = " << t.component(k) << '\n';
    const Sequence u = pm_preimage_romega(t);
    out << "  diagonal sequence u = " << u.prefix(depth) << " ...\n";
    const bool same = thread_equal_upto(pm_map(seq, u), t, depth);
    out << "  P_M u equals the family on levels 1.." << depth << ": " << (same ? "yes" : "no") << '\n';
    ok = ok && same;
  }
  out << "\nEach family is the image of its diagonal sequence, so P_M is onto.\n";
  return ok;
}

inline bool c00_pm_gap(const RunConfig& cfg, std::ostream& out) {
  const std::size_t depth = cfg.depth ? cfg.depth : 8;
  const auto& model = sequential_model();
  const Thread ones = ones_thread(model.romega);
  verify_thread(ones, depth + 1);
  out << "The all-ones family over the bands {1..k}, verified on levels 1.." << depth + 1 << ":\n";
  for (std::size_t k = 1; k <= depth + 1; ++k) out << "  t_" << k << " = " << ones.component(k) << '\n';
  out << "\nNo finitely supported sequence with support in {1..K} maps onto it:\n";
  std::vector<std::vector<std::string>> rows{{"K", "level", "coordinate", "value"}};
  bool ok = true;
  for (std::size_t bound = 1; bound <= depth; ++bound) {
    const auto r = pm_preimage_c00(ones, bound);
    const auto* proof = std::get_if<NotInImage>(&r);
    if (!proof) {
      ok = false;
      rows.push_back({std::to_string(bound), "-", "-", "preimage found"});
      continue;
    }
    rows.push_back({std::to_string(bound), std::to_string(proof->level), std::to_string(proof->coordinate),
                    to_fraction_string(ones.component(proof->level)[proof->coordinate - 1])});
  }
  cli_detail::print_table(out, rows);
  out << "\nThe image of the finitely supported sequences is a proper subspace of the limit.\n";
  return ok;
}

inline bool lp_blocks(const RunConfig& cfg, std::ostream& out) {
  const std::vector<std::size_t> dims{1, 2, 3};
  Rng rng(cfg.seed);
  out << "Counting measure on three blocks of sizes 1, 2, 3.\n";
  out << "Level k is the sum of the first k blocks; steps include the next block.\n\n";
  bool ok = true;
  std::size_t total = 0;
  std::vector<std::size_t> prefix;
  for (auto d : dims) prefix.push_back(total += d);
  const DirectSystem chain = DirectSystem::from_generators(
      [prefix](std::size_t k) { return prefix.at(k - 1); },
      [prefix](std::size_t k) { return CanonicalHom::inclusion(prefix.at(k - 1), prefix.at(k)); }, "block chain");
  const InverseSystem dual = dual_of_direct(chain);
  for (std::size_t k = 1; k <= dims.size(); ++k) {
    const std::vector<std::size_t> head(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<std::pair<FinVector, FinVector>> samples;
    for (int s = 0; s < 3; ++s) samples.emplace_back(rng.vector(prefix[k - 1]), rng.vector(prefix[k - 1]));
    const SumProductReport r = truncated_sum_product_duality(head, samples);
    out << "level " << k << ": T (dual of the sum -> product of duals) = " << r.t_map << '\n';
    out << "  S o T = I: " << (r.s_after_t_identity ? "yes" : "no") << ", T o S = I: "
        << (r.t_after_s_identity ? "yes" : "no") << ", lattice homomorphisms: "
        << (r.lattice_homomorphisms ? "yes" : "no") << ", pairings agree: " << (r.pairing_agrees ? "yes" : "no")
        << '\n';
    ok = ok && r.passed();
    if (k < dims.size()) {
      // Square: restricting a dual vector along the step, then splitting, equals splitting and dropping the last block.
      const SumProductReport next = truncated_sum_product_duality(
          std::vector<std::size_t>(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(k + 1)));
      const Matrix down = dual.step(k).to_matrix().matrix();
      Matrix drop(prefix[k - 1], prefix[k]);
      for (std::size_t i = 0; i < prefix[k - 1]; ++i) drop(i, i) = 1;
      const bool square = r.t_map * down == drop * next.t_map;
      out << "  square with level " << k + 1 << " commutes: " << (square ? "yes" : "no") << '\n';
      ok = ok && square;
    }
    out << '\n';
  }
  return ok;
}

inline bool c00_dual(const RunConfig& cfg, std::ostream& out) {
  const std::size_t depth = cfg.depth ? cfg.depth : 8;
  const DirectSystem& c00 = sequential_model().c00;
  const InverseSystem dual = dual_of_direct(c00);
  out << "The dual of the inclusion chain has the restrictions as steps:\n";
  bool ok = true;
  for (std::size_t k = 1; k < std::min<std::size_t>(depth, 4); ++k) {
    const bool same = dual.step(k) == CanonicalHom::restriction(k + 1, k);
    out << "  step " << k + 1 << "->" << k << ": " << dual.step(k) << (same ? "" : "  (unexpected)") << '\n';
    ok = ok && same;
  }
  Thread ones = ones_thread(dual);
  verify_thread(ones, depth);
  const ColimFunctional sum(c00, ones);
  const ColimElement a = embed(c00, 3, FinVector{1, 2, 3});
  const Scalar v = eval_colim_functional(sum, a);
  out << "\nThe all-ones dual thread is the sum functional: on " << a << " it gives " << to_fraction_string(v)
      << ", and on the promoted germ " << promote(a, depth) << " it gives "
      << to_fraction_string(eval_colim_functional(sum, promote(a, depth))) << ".\n";
  ok = ok && v == 6 && eval_colim_functional(sum, promote(a, depth)) == 6;
  const ColimElement b = embed(c00, 2, FinVector{0, Scalar(-1, 2)});
  const ColimFunctional sep = separating_dual_thread(b, depth);
  const Scalar sv = eval_colim_functional(sep, b);
  out << "A dual thread separating " << b << ": first components";
  for (std::size_t k = 1; k <= std::min<std::size_t>(depth, 4); ++k) out << ' ' << sep.thread().component(k);
  out << ", value " << to_fraction_string(sv) << ".\n";
  ok = ok && sv != 0;
  const ColimFunctional back =
      functional_to_dual_thread(c00, [sum](const ColimElement& x) { return eval_colim_functional(sum, x); }, depth);
  const bool round = thread_equal_upto(back.thread(), ones, depth);
  out << "Sampling the sum functional on basis germs returns the all-ones thread: " << (round ? "yes" : "no") << ".\n";
  return ok && round;
}

}  // namespace demos

inline int cmd_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool ok = false;
  if (cfg.name == "romega-pm") {
    ok = demos::romega_pm(cfg, out);
  } else if (cfg.name == "c00-pm-gap") {
    ok = demos::c00_pm_gap(cfg, out);
  } else if (cfg.name == "lp-blocks") {
    ok = demos::lp_blocks(cfg, out);
  } else if (cfg.name == "c00-dual") {
    ok = demos::c00_dual(cfg, out);
  } else {
    err << "error: " << UnknownDemo(cfg.name).what() << '\n';
    return exit_usage;
  }
  return ok ? exit_pass : exit_failure;
}

template <Orientation O>
int check_system(const SequentialSystem<O>& s, const RunConfig& cfg, std::ostream& out) {
  std::size_t depth = cfg.depth ? cfg.depth : 8;
  if (auto top = s.max_level()) depth = std::min(depth, *top);
  out << "system: " << to_string(O) << '\n';
  if (auto p = s.rule_prefix_levels()) out << "levels: " << *p << " explicit, extend " << to_string(s.rule()) << '\n';
  out << "depth: " << depth << '\n';
  const Classification c = classify(s, depth);
  std::vector<std::vector<std::string>> rows{
      {"step", "map", "dom", "cod", "injective", "surjective", "interval_preserving", "image_band"}};
  for (const StepInfo& st : c.steps) {
    const std::string map = O == Orientation::direct ? std::to_string(st.level) + "->" + std::to_string(st.level + 1)
                                                     : std::to_string(st.level + 1) + "->" + std::to_string(st.level);
    rows.push_back({std::to_string(st.level), map, std::to_string(st.dom), std::to_string(st.cod),
                    cli_detail::mark(st.injective), cli_detail::mark(st.surjective),
                    cli_detail::mark(st.interval_preserving), cli_detail::band_cell(st.image)});
  }
  cli_detail::print_table(out, rows);
  out << "flags: injective " << cli_detail::mark(c.all_injective) << "  surjective "
      << cli_detail::mark(c.all_surjective) << "  interval_preserving " << cli_detail::mark(c.all_interval_preserving)
      << "  images_are_bands " << cli_detail::mark(c.images_are_bands) << '\n';
  out << "category: VL";
  if (c.all_interval_preserving) out << ", IVL";
  if (c.all_injective) out << "; injective steps";
  if (c.all_surjective) out << "; surjective steps";
  out << " (normal variants coincide on finite-dimensional components)\n";
  Rng rng(cfg.seed);
  try {
    const PerfectCertificate cert = perfect_certificate(s, depth, 5, rng);
    std::size_t good = 0;
    for (const SigmaCheck& chk : cert.checks) good += chk.ok();
    out << "certificate: " << (cert.ok() ? "issued" : "failed") << " (" << good << "/" << cert.checks.size()
        << " sigma spot checks pass)\n";
    return cert.ok() ? exit_pass : exit_failure;
  } catch (const CertificateRefused& e) {
    out << "certificate: refused (" << e.flag() << ")\n";
    return exit_pass;
  }
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.name, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << cfg.name << '\n';
    return exit_usage;
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    const AnySystem s = parse_system(text.str());
    return std::visit([&](const auto& sys) { return check_system(sys, cfg, out); }, s);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  }
}

/// env_seed is the value of RIESZ_LIMITS_SEED, if set; it overrides --seed.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   const char* env_seed = nullptr) {
  CLI::App app{"Exact verification of limits and duality for sequential systems of coordinate vector lattices",
               "riesz-limits"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool with_trials) {
    sub->add_option("--depth", cfg.depth, "levels to examine")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    if (with_trials) {
      sub->add_option("--trials", cfg.trials, "random trials")->check(CLI::PositiveNumber);
      sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "text"}));
    }
  };
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.name, "suite name")->required();
  add_common(verify, true);
  CLI::App* demo = app.add_subcommand("demo", "run a worked scenario");
  demo->add_option("name", cfg.name, "demo name")->required();
  add_common(demo, false);
  CLI::App* check = app.add_subcommand("check", "classify a system file");
  check->add_option("file", cfg.name, "system file")->required();
  add_common(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }
  if (env_seed && *env_seed) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env_seed, &used, 10);
      if (env_seed[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: RIESZ_LIMITS_SEED is not an unsigned integer: " << env_seed << '\n';
      return exit_usage;
    }
  }
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "demo") return cmd_demo(cfg, out, err);
    return cmd_check(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace riesz
