#include "planarize/batch.hpp"

#include <cstddef>

namespace planarize {

std::vector<BatchItem> batch_reduce(Algorithm a, const std::vector<MultiGraph>& graphs,
                                    bool parallel) {
  std::vector<BatchItem> out(graphs.size());
  const auto count = static_cast<std::ptrdiff_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i].report = build_report(a, graphs[i], run_algorithm(a, graphs[i]));
    } catch (const Error& e) {
      out[i].error = e.what();
    }
  }
  return out;
}

std::vector<InducedMax> batch_max_induced(const std::vector<MultiGraph>& graphs,
                                          PropertyId p, bool parallel) {
  std::vector<InducedMax> out(graphs.size());
  const auto count = static_cast<std::ptrdiff_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = max_induced(graphs[i], p);
  return out;
}

}  // namespace planarize
