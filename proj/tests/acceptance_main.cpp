// Acceptance gate: runs the ten verification suites at the default seed and
// prints one line per criterion. Exits nonzero if any suite fails or
// overruns its time budget.
#include <cstdio>
#include <string>
#include <vector>

#include "modlie/verify.hpp"

using namespace modlie;

namespace {

struct Criterion {
  const char* suite;
  double limit_s;
  const char* what;
};

const std::vector<Criterion> kCriteria = {
    {"axioms", 10, "catalog constructors validate (antisymmetry, Jacobi, p-map)"},
    {"jacobson", 30, "Jacobson p-powers match composition p-powers on random elements"},
    {"embedding", 30, "W(1;(2)) embeds in W(2;1); d_1 expansion and coefficient identity"},
    {"torus", 120, "torus search finds commuting toral diagonalizable bases of expected rank"},
    {"skryabin", 60, "weight-space dimension counts across the catalog; sl_2 control fails coverage"},
    {"fibers", 30, "subtorus restriction has fibers of size p^(mu-1), 4 over beta = 0"},
    {"weyl", 300, "all 480 lifts of GL_2(F_5) are automorphisms restricting to g on the torus"},
    {"sylow", 60, "dim-30 solvable subalgebra; unipotent-exponent lifts stabilize it"},
    {"solvability", 30, "derived series terminate for the solvable witnesses; W, H, sl_2 are perfect"},
    {"transport", 120, "independent torus searches give the same weight dimension multiset"},
};

}  // namespace

int main() {
  std::printf("acceptance run, seed %llu\n", static_cast<unsigned long long>(kDefaultSeed));
  int failures = 0;
  for (size_t i = 0; i < kCriteria.size(); ++i) {
    const Criterion& c = kCriteria[i];
    SuiteReport rep = run_suite(c.suite, kDefaultSeed);
    double secs = rep.wall_ms / 1000.0;
    bool ok = rep.ok();
    bool in_time = secs <= c.limit_s;
    const char* verdict = (ok && in_time) ? "PASS" : "FAIL";
    std::printf("criterion %2zu/10  %s  %7.2fs  %-12s %s\n", i + 1, verdict, secs,
                c.suite, c.what);
    if (!ok) {
      ++failures;
      for (const CheckResult& f : rep.checks) {
        if (f.status != "fail") continue;
        std::printf("    failed check: %s%s%s\n", f.id.c_str(),
                    f.detail.empty() ? "" : " -- ", f.detail.c_str());
      }
    } else if (!in_time) {
      ++failures;
      std::printf("    over time budget (%.0fs limit)\n", c.limit_s);
    }
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failing\n", failures);
  return 1;
}
