#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace boxlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double worstError = 0;
  std::string detail;
};

inline constexpr double kClosedFormTol = 1e-9;
inline constexpr double kLpTol = 1e-6;

std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20240601);
CriterionResult run_criterion(int id, std::uint64_t seed = 20240601);

std::string format_result_line(const CriterionResult& r);

}  // namespace boxlab
