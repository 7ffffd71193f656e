#pragma once

#include <cstdint>
#include <vector>

#include "planarize/graph.hpp"
#include "planarize/solution.hpp"

namespace planarize {

// S with |S| >= n - m/5 and G[S] of treewidth at most 2.
ReductionSolution reduce_treewidth2(const MultiGraph& g);

struct ChargeReplay {
  std::int64_t total = 0;       // edge events - 5 * deletions
  std::size_t edge_events = 0;  // contracted, simplified away, or deleted
  std::size_t deletions = 0;
};

// Replays the trace on a copy of g and recomputes the charges. Throws
// TraceMismatch if the trace does not apply or its recorded counts differ.
ChargeReplay replay_trace_tw2(const MultiGraph& g,
                              const std::vector<TraceStep>& trace);

}  // namespace planarize
