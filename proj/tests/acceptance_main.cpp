#include <cstdlib>
#include <iostream>

#include "dmt/acceptance.hpp"

int main(int argc, char** argv) {
  dmt::AcceptanceOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  options.budget = dmt::MorseBudget::from_environment();
  std::size_t failed = 0;
  dmt::run_acceptance(options, [&](const dmt::CriterionResult& r) {
    failed += !r.passed;
    std::cout << dmt::format_result(r) << std::endl;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
