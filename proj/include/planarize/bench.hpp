#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "planarize/graph.hpp"
#include "planarize/report.hpp"

namespace planarize {

struct LadderRow {
  std::size_t size = 0;  // the family parameter
  std::size_t n = 0, m = 0;
  double ms = 0;         // best of the repeats
  double ratio = 0;      // ms / previous row's ms; 0 on the first row
};

// Graph family for ladders: "k33xt" (size = copies of K3,3) or
// "random-regular-d" (size = n, degree d, seeded).
MultiGraph ladder_graph(const std::string& family, std::size_t size, std::uint64_t seed);

// Times the reducer on each size (best of `repeats` runs). Sizes should
// double from row to row for the ratio to mean time(2n) / time(n).
std::vector<LadderRow> run_ladder(Algorithm a, const std::string& family,
                                  const std::vector<std::size_t>& sizes,
                                  std::uint64_t seed, int repeats = 5);

}  // namespace planarize
