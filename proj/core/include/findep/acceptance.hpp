#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace findep::acceptance {

inline constexpr std::uint64_t kSeed = 20161019;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double time_limit_seconds = 0;  ///< 0 = no limit
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_seconds;
  std::function<bool(std::string& detail)> run;
};

/// The fourteen exit criteria, in order.
const std::vector<Criterion>& criteria();

/// Runs one criterion, timing it; exceeding its time limit counts as failure.
CriterionResult run_criterion(const Criterion& c);

/// Runs the selected criteria (all when `ids` is empty), reporting each result
/// as it completes.
std::vector<CriterionResult> run_all(const std::vector<int>& ids = {},
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 10 hard-core appendix reproduction (12.3 s): ..." style line.
std::string format_line(const CriterionResult& r);

}  // namespace findep::acceptance
