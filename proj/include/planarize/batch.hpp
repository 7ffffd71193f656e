#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planarize/graph.hpp"
#include "planarize/oracle.hpp"
#include "planarize/report.hpp"

namespace planarize {

// One outcome per input graph, in input order. A library error on one graph
// is captured as its message instead of aborting the batch.
struct BatchItem {
  std::optional<RunReport> report;
  std::string error;
};

// Independent runs over OpenMP threads; `parallel = false` is the serial
// reference. Results do not depend on the thread count.
std::vector<BatchItem> batch_reduce(Algorithm a, const std::vector<MultiGraph>& graphs,
                                    bool parallel = true);

std::vector<InducedMax> batch_max_induced(const std::vector<MultiGraph>& graphs,
                                          PropertyId p, bool parallel = true);

}  // namespace planarize
