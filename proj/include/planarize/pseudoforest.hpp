#pragma once

#include <optional>
#include <vector>

#include "planarize/graph.hpp"
#include "planarize/solution.hpp"

namespace planarize {

// A matched case: the label, the vertex it was detected at, and the exact
// primitive operations it prescribes.
struct CaseDescriptor {
  StepKind label = StepKind::Preprocess;
  VertexId anchor = 0;
  std::vector<VertexId> deleted;
  std::vector<Contraction> contracted;
  std::vector<Edge> removed;
  std::vector<VertexId> s_added;

  friend bool operator==(const CaseDescriptor&, const CaseDescriptor&) = default;
};

// Highest-priority case on the current graph, by a full scan. nullopt once
// no edges are left. Throws CaseAnalysisIncomplete if edges remain but no
// case matches.
std::optional<CaseDescriptor> first_applicable_case(const MultiGraph& g);

// Executes a descriptor obtained from first_applicable_case on this exact
// graph, harvests vertices it isolated, and appends the step. Throws
// StaleDescriptor if g has changed since.
void apply_case(MultiGraph& g, const CaseDescriptor& d, ReductionSolution& sol);

// Induced pseudoforest with at least n - 2m/9 vertices. Uses an incremental
// dispatcher; the result is identical to repeatedly calling
// first_applicable_case/apply_case.
ReductionSolution reduce_pseudoforest(const MultiGraph& g);

// Reference driver built on the full-scan dispatcher (quadratic; for tests).
ReductionSolution reduce_pseudoforest_reference(const MultiGraph& g);

}  // namespace planarize
