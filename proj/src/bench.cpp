#include "planarize/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "planarize/generators.hpp"

namespace planarize {

MultiGraph ladder_graph(const std::string& family, std::size_t size, std::uint64_t seed) {
  if (family == "k33xt")
    return generate(FamilySpec::disjoint_copies(FamilySpec::complete_bipartite(3, 3), size));
  const std::string prefix = "random-regular-";
  if (family.rfind(prefix, 0) == 0) {
    const std::size_t d = std::stoul(family.substr(prefix.size()));
    return random_regular(size, d, seed);
  }
  throw InvalidSpec("unknown ladder family '" + family + "'");
}

std::vector<LadderRow> run_ladder(Algorithm a, const std::string& family,
                                  const std::vector<std::size_t>& sizes,
                                  std::uint64_t seed, int repeats) {
  std::vector<LadderRow> rows;
  for (std::size_t size : sizes) {
    const MultiGraph g = ladder_graph(family, size, seed);
    LadderRow row;
    row.size = size;
    row.n = g.num_vertices();
    row.m = g.num_edges();
    row.ms = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(repeats, 1); ++r)
      row.ms = std::min(row.ms, run_algorithm(a, g).wall_ms);
    if (!rows.empty() && rows.back().ms > 0) row.ratio = row.ms / rows.back().ms;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace planarize
