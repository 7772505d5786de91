#ifndef POWSGP_ACCEPTANCE_HPP
#define POWSGP_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace powsgp::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full verification suite. Deterministic: every randomized
/// criterion draws from a fixed-seed generator.
std::vector<CriterionResult> run_all();

bool all_passed(const std::vector<CriterionResult>& results);

/// One PASS/FAIL line per criterion plus a summary line.
void print_report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace powsgp::acceptance

#endif  // POWSGP_ACCEPTANCE_HPP
