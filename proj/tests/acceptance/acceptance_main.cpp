#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "mvvd/acceptance.hpp"

int main(int argc, char** argv) {
  mvvd::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) options.seed = std::strtoull(argv[++i], nullptr, 10);
  }
  options.on_result = [](const mvvd::CriterionResult& r) {
    std::printf("%s\n", mvvd::format_result_line(r).c_str());
    std::fflush(stdout);
  };
  const auto results = mvvd::run_acceptance(options);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
