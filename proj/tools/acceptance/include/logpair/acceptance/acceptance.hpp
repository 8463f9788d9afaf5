#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace logpair::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
};

/// Runs every criterion in order. Deterministic: all random inputs come from
/// fixed seeds.
std::vector<CriterionResult> run_all();

/// One line per criterion, "PASS [n] title (t s)", followed by indented detail
/// lines. Returns true when every criterion passed.
bool print_report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace logpair::acceptance
