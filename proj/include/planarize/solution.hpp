#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "planarize/graph.hpp"

namespace planarize {

enum class StepKind {
  // shared
  Preprocess,
  HarvestIsolated,
  // induced pseudoforest
  Leaf,
  Deg2NoTriangle,
  DeltaA,
  DeltaB,
  DeltaC,
  DeltaD,
  Deg3AdjDeg4,
  ThreeRegular,
  FourRegA,
  FourRegB,
  FourRegC1,
  FourRegC2,
  FourRegC3,
  FourRegC4,
  // treewidth two
  ContractDeg12,
  DeleteAdjDeg3,
  DeleteMaxDeg,
  // planar treewidth three
  DegreeTwo,
  PlanarAccept,
  ParallelEdge,
  CubicComponent,
  DegreeFive,
  MixedDegrees,
  QuarticComponent,
};

std::string to_string(StepKind kind);

struct Contraction {
  VertexId gone;
  VertexId survivor;
  friend bool operator==(const Contraction&, const Contraction&) = default;
};

// One reduction step as primitive graph operations. Replay applies, in order:
// deletions, contractions, simplification around the survivors (if set),
// explicit edge removals, and finally drops every s_added vertex that is
// still present (it must be isolated by then).
struct TraceStep {
  StepKind kind = StepKind::Preprocess;
  VertexId anchor = 0;
  std::vector<VertexId> deleted;
  std::vector<Contraction> contracted;
  bool simplify_after = false;
  std::vector<Edge> removed;
  std::vector<VertexId> s_added;
  std::size_t removed_edges = 0;  // every edge unit this step took away

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// Guarantee ratio: den * |S| >= den * n - num * m.
struct BoundRatio {
  std::int64_t num;
  std::int64_t den;
};

inline constexpr BoundRatio kPseudoforestBound{2, 9};
inline constexpr BoundRatio kTreewidth2Bound{1, 5};
inline constexpr BoundRatio kPlanarBound{23, 120};

struct ReductionSolution {
  std::vector<VertexId> s;  // sorted original ids
  BoundRatio bound{};
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<TraceStep> trace;

  bool bound_holds() const;
};

bool bound_holds(BoundRatio r, std::size_t n, std::size_t m, std::size_t s);

struct ReplayTotals {
  std::size_t edge_units = 0;  // removed, contracted or deleted with a vertex
  std::size_t deletions = 0;   // vertices removed without joining S
  std::vector<VertexId> s;     // sorted
};

// Re-executes a trace on a copy of g. Throws TraceMismatch when an operation
// does not apply or a step's recorded edge count disagrees.
ReplayTotals replay_trace(const MultiGraph& g, const std::vector<TraceStep>& trace);

// Executes one step on g, filling removed_edges. Shared by the reducers.
void execute_step(MultiGraph& g, TraceStep& step);

}  // namespace planarize
