#include <cstdlib>
#include <iostream>
#include <string>

#include "fst/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else {
      only.push_back(std::stoi(a));
    }
  }
  auto results = fst::acceptance::run_all(seed, std::cout, only);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return passed == results.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}
