// One line per acceptance criterion; exit code 1 if any is red.
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "dnjt/verify.hpp"

int main(int argc, char** argv)
{
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240517;
  int failed = 0;
  for (const auto& r : dnjt::run_acceptance(seed)) {
    std::cout << dnjt::format_report(r) << std::endl;
    if (!r.passed()) ++failed;
  }
  std::cout << (failed ? "acceptance: FAIL (" + std::to_string(failed) + " red)" : std::string("acceptance: PASS"))
            << std::endl;
  return failed ? 1 : 0;
}
