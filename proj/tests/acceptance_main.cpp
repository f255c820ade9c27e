// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: findep_acceptance [id ...]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "findep/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));

  int failed = 0;
  const auto results = findep::acceptance::run_all(ids, [&](const findep::acceptance::CriterionResult& r) {
    std::cout << findep::acceptance::format_line(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
