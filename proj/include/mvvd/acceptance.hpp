#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mvvd {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  // Smaller trial counts; the symbolic cases are unchanged.
  bool quick = false;
  std::uint64_t seed = 1;
  // Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

// Runs the full acceptance suite (ten criteria) and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

std::string format_result_line(const CriterionResult& result);

}  // namespace mvvd
