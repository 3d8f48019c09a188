#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "boxlab/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  if (argc > 1) seed = std::stoull(argv[1]);
  int failed = 0;
  for (const auto& r : boxlab::run_acceptance(seed)) {
    std::cout << boxlab::format_result_line(r) << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (16 - failed) << "/16 criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
