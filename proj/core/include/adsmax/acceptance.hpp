#pragma once

// End-to-end acceptance checks wired into both the `check` CLI subcommand
// and the acceptance test binary. Every tolerance is pinned here.

#include <iosfwd>
#include <string>
#include <vector>

namespace adsmax::acceptance {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic summary numbers
  double seconds = 0.0; // wall time, reporting only
};

enum class Suite { trivial, full };

std::vector<CriterionResult> run(Suite suite);

// One "PASS criterion ..." / "FAIL criterion ..." line per entry; returns 0
// when everything passed, 1 otherwise. Timing goes to `timing` when nonnull.
int report(const std::vector<CriterionResult>& results, std::ostream& out,
           std::ostream* timing = nullptr);

}  // namespace adsmax::acceptance
