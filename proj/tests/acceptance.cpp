// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Also runnable as `liepcd suite`.
#include <cstdlib>
#include <iostream>

#include "liepcd/suite.hpp"

int main(int argc, char** argv) {
  uint64_t seed = 0;
  if (const char* env = std::getenv("LIEPCD_SEED")) seed = std::strtoull(env, nullptr, 10);
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  liepcd::SuiteReport rep = liepcd::run_suite(seed);
  std::cout << rep.to_text();
  return rep.pass() ? 0 : 1;
}
