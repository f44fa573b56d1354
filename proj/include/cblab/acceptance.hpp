#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cblab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double worst = 0.0;      // largest residual seen (0 for purely combinatorial checks)
  double tolerance = 0.0;  // the bound `worst` is held to
  std::string detail;      // counts, or the first failure
};

constexpr int kCriterionCount = 11;
constexpr std::uint64_t kDefaultSeed = 20240611;

// Numerical and combinatorial acceptance checks 1..11. Library errors are
// caught and reported as a failed criterion. Deterministic for a given seed.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

}  // namespace cblab
