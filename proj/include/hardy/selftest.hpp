#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hardy {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// The full verification battery: sharp-constant spot values, endpoint/Beta
/// identity, representation equivalence, convexity, Schur margins, the
/// certificate mean-value identity, the r -> -r symmetry, random-function
/// ratios, the near-extremal sweep, optimizer safety, and the falsifiability
/// control. Prints one PASS/FAIL line per criterion as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream& progress);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace hardy
