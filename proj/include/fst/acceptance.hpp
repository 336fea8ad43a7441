#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace fst::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

const std::vector<Criterion>& criteria();

/// Runs every criterion (or only `only`, when nonempty), printing one line
/// per criterion to `out` as it finishes.
std::vector<CriterionResult> run_all(std::uint64_t seed, std::ostream& out, const std::vector<int>& only = {});

std::string format_line(const CriterionResult& r);

}  // namespace fst::acceptance
