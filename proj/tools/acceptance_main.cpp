#include <CLI11.hpp>
#include <iostream>

#include "hopfcoh/acceptance.hpp"
#include "hopfcoh/parallel.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hopfcoh acceptance suite"};
  std::uint64_t seed = hopfcoh::kDefaultSeed;
  bool json = false, no_timings = false;
  app.add_option("--seed", seed, "RNG seed");
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--no-timings", no_timings, "omit wall-clock times");
  CLI11_PARSE(app, argc, argv);
  auto results = hopfcoh::run_acceptance(seed);
  if (json)
    std::cout << hopfcoh::acceptance_to_json(results, !no_timings).dump(2) << '\n';
  else
    std::cout << hopfcoh::format_acceptance(results, !no_timings);
  for (const auto& r : results)
    if (!r.passed) return 1;
  return 0;
}
