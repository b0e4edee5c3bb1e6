// Acceptance run: one line per criterion, exit status 0 only if every line passes.
// Usage: acceptance <riesz-limits binary> <data dir> <golden dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/suites.hpp"

using namespace riesz;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Command {
  int status;
  std::string out;
};

Command capture(const std::string& cmd) {
  Command c{-1, {}};
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return c;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) c.out.append(buf.data(), n);
  const int raw = pclose(p);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

/// Passes when the named properties (all of them if empty) pass.
Outcome suite_outcome(const SuiteReport& r, const std::set<std::string>& names = {}) {
  std::size_t checks = 0;
  std::size_t matched = 0;
  for (const PropertyResult& p : r.results) {
    if (!names.empty() && !names.count(p.name)) continue;
    ++matched;
    checks += p.checks;
    if (!p.passed) return {false, p.name + " failed: " + p.counterexample.value_or("")};
    if (p.checks == 0) return {false, p.name + " ran no checks"};
  }
  if (matched == 0 || (!names.empty() && matched != names.size())) return {false, "expected properties missing"};
  return {true, std::to_string(checks) + " checks"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <riesz-limits> <data dir> <golden dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string data = argv[2];
  const std::string golden = argv[3];
  constexpr std::uint64_t seed = 42;

  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;  // 0: none
    std::function<Outcome()> run;
  };

  SuiteReport oracle;  // shared by A2 and A3
  const std::vector<Criterion> criteria{
      {"A1", "adjoint laws, 500 random homs", 10,
       [&] { return suite_outcome(run_suite("adjoints", {seed, 500, 0})); }},
      {"A2", "predicate and oracle agree, 200 random homs", 10,
       [&] {
         oracle = run_suite("interval-oracle", {seed, 200, 0});
         return suite_outcome(oracle, {"predicate-true-oracle-feasible", "predicate-false-witness-infeasible",
                                       "fourier-motzkin-agrees-with-simplex"});
       }},
      {"A3", "injective interval preserving homs have band images", 0,
       [&] {
         return suite_outcome(oracle,
                              {"injective-ip-image-is-band", "injective-ip-preimage-inverts", "injective-ip-lattice-isomorphism"});
       }},
      {"A4", "direct limit duality, 50 random chains, depth 8", 30,
       [&] { return suite_outcome(run_suite("colimit-duality", {seed, 50, 8})); }},
      {"A5", "inverse limit duality, 50 random chains, depth 8", 30,
       [&] { return suite_outcome(run_suite("limit-duality", {seed, 50, 8})); }},
      {"A6", "P_M onto the sequence space, proper on finite supports, depth 8", 5,
       [&] { return suite_outcome(run_suite("pm-scenarios", {seed, 20, 8})); }},
      {"A7", "disjointification postconditions, 500 pairs", 0,
       [&] {
         return suite_outcome(run_suite("disjointify", {seed, 500, 0}),
                              {"parts-disjoint", "parts-below-inputs", "same-supremum", "ties-assigned-to-first"});
       }},
      {"A8", "sum and product duality truncations", 0,
       [&] { return suite_outcome(run_suite("sum-product-duality", {seed, 100, 0})); }},
      {"A9", "finite carrier limit isomorphism, N = 1, 2, 3", 5,
       [&] { return suite_outcome(run_suite("finite-carrier-iso", {seed, 20, 0})); }},
      {"A10", "functoriality, 100 random morphisms, depth 6", 0,
       [&] { return suite_outcome(run_suite("functoriality", {seed, 100, 6})); }},
      {"A11", "CLI golden tables and deterministic verify", 0,
       [&] {
         for (const char* name : {"inclusion", "duplication", "restriction_gap"}) {
           const Command c = capture(quote(cli) + " check " + quote(data + "/" + name + ".sys"));
           if (c.status != 0) return Outcome{false, std::string("check ") + name + " exited " + std::to_string(c.status)};
           if (c.out != read_file(golden + "/" + name + ".check.txt")) {
             return Outcome{false, std::string("check ") + name + " differs from its golden table"};
           }
         }
         for (const char* args : {"verify adjoints --trials 100 --seed 7", "verify colimit-duality --seed 7 --trials 10",
                                  "verify functoriality --seed 3 --trials 20 --format text"}) {
           const Command a = capture(quote(cli) + " " + args);
           const Command b = capture(quote(cli) + " " + args);
           if (a.status != 0 || b.status != 0) return Outcome{false, std::string(args) + " did not pass"};
           if (a.out != b.out || a.out.empty()) return Outcome{false, std::string(args) + " is not deterministic"};
         }
         const Command bad = capture(quote(cli) + " verify nosuch");
         if (bad.status != 2) return Outcome{false, "unknown suite exited " + std::to_string(bad.status)};
         return Outcome{true, "3 goldens, 3 repeated runs"};
       }},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, {}};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.ok = false;
      o.detail += ", over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    all = all && o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << o.detail << ", " << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
