// Runs every acceptance suite and prints one line per criterion.
// Usage: qweyl_acceptance [SEED]

#include <cstdlib>
#include <iostream>
#include <string>

#include "qweyl/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = qweyl::verify::default_seed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  const auto results = qweyl::verify::run_suites(seed);
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << r.line() << "\n";
    passed += r.passed() ? 1 : 0;
  }
  std::cout << passed << "/" << results.size() << " criteria passed (seed " << seed << ")\n";
  return passed == results.size() ? 0 : 1;
}
