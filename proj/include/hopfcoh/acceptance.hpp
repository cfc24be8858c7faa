#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfcoh/io.hpp"

namespace hopfcoh {

inline constexpr std::uint64_t kDefaultSeed = 271828;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Criteria 1..13; each runs under its own RNG stream derived from seed.
std::vector<CriterionResult> run_acceptance_core(std::uint64_t seed);
/// All fourteen criteria. The last one reruns the core at two worker counts and compares the
/// rendered reports byte for byte.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// One line per criterion: "PASS  3  name: detail", with " [1.23 s]" when timings is set.
std::string format_acceptance(const std::vector<CriterionResult>& results, bool timings);
Json acceptance_to_json(const std::vector<CriterionResult>& results, bool timings);

}  // namespace hopfcoh
