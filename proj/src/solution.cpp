#include "planarize/solution.hpp"

#include <algorithm>

namespace planarize {

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Preprocess: return "Preprocess";
    case StepKind::HarvestIsolated: return "HarvestIsolated";
    case StepKind::Leaf: return "Leaf";
    case StepKind::Deg2NoTriangle: return "Deg2NoTriangle";
    case StepKind::DeltaA: return "DeltaA";
    case StepKind::DeltaB: return "DeltaB";
    case StepKind::DeltaC: return "DeltaC";
    case StepKind::DeltaD: return "DeltaD";
    case StepKind::Deg3AdjDeg4: return "Deg3AdjDeg4";
    case StepKind::ThreeRegular: return "ThreeRegular";
    case StepKind::FourRegA: return "FourRegA";
    case StepKind::FourRegB: return "FourRegB";
    case StepKind::FourRegC1: return "FourRegC1";
    case StepKind::FourRegC2: return "FourRegC2";
    case StepKind::FourRegC3: return "FourRegC3";
    case StepKind::FourRegC4: return "FourRegC4";
    case StepKind::ContractDeg12: return "ContractDeg12";
    case StepKind::DeleteAdjDeg3: return "DeleteAdjDeg3";
    case StepKind::DeleteMaxDeg: return "DeleteMaxDeg";
    case StepKind::DegreeTwo: return "DegreeTwo";
    case StepKind::PlanarAccept: return "PlanarAccept";
    case StepKind::ParallelEdge: return "ParallelEdge";
    case StepKind::CubicComponent: return "CubicComponent";
    case StepKind::DegreeFive: return "DegreeFive";
    case StepKind::MixedDegrees: return "MixedDegrees";
    case StepKind::QuarticComponent: return "QuarticComponent";
  }
  return "?";
}

bool bound_holds(BoundRatio r, std::size_t n, std::size_t m, std::size_t s) {
  const auto lhs = static_cast<__int128>(r.den) * static_cast<__int128>(s);
  const auto rhs = static_cast<__int128>(r.den) * static_cast<__int128>(n) -
                   static_cast<__int128>(r.num) * static_cast<__int128>(m);
  return lhs >= rhs;
}

bool ReductionSolution::bound_holds() const {
  return planarize::bound_holds(bound, n, m, s.size());
}

void execute_step(MultiGraph& g, TraceStep& step) {
  std::size_t units = 0;
  for (VertexId v : step.deleted) units += g.delete_vertex(v);
  for (const Contraction& c : step.contracted) {
    g.contract_edge(c.gone, c.survivor, c.survivor);
    ++units;
  }
  if (step.simplify_after)
    for (const Contraction& c : step.contracted)
      if (g.contains(c.survivor)) units += g.simplify_at(c.survivor);
  for (const Edge& e : step.removed) {
    if (g.remove_edge(e.u, e.v, 1) != 1)
      throw NoSuchEdge("edge already gone");
    ++units;
  }
  for (VertexId v : step.s_added) {
    if (!g.contains(v)) continue;
    if (g.degree(v) != 0)
      throw AssertionFailure("vertex " + std::to_string(v) +
                             " joins S while still attached");
    g.delete_vertex(v);
  }
  step.removed_edges = units;
}

ReplayTotals replay_trace(const MultiGraph& g,
                          const std::vector<TraceStep>& trace) {
  MultiGraph h = g;
  ReplayTotals totals;
  std::size_t index = 0;
  for (const TraceStep& recorded : trace) {
    TraceStep step = recorded;
    try {
      execute_step(h, step);
    } catch (const Error& e) {
      throw TraceMismatch("step " + std::to_string(index) + " (" +
                          to_string(recorded.kind) + "): " + e.what());
    }
    if (step.removed_edges != recorded.removed_edges)
      throw TraceMismatch("step " + std::to_string(index) + " (" +
                          to_string(recorded.kind) + ") removed " +
                          std::to_string(step.removed_edges) +
                          " edge units, trace says " +
                          std::to_string(recorded.removed_edges));
    totals.edge_units += step.removed_edges;
    totals.deletions += step.deleted.size();
    totals.s.insert(totals.s.end(), step.s_added.begin(), step.s_added.end());
    ++index;
  }
  if (!h.empty())
    throw TraceMismatch("trace leaves " + std::to_string(h.num_vertices()) +
                        " vertices unprocessed");
  std::sort(totals.s.begin(), totals.s.end());
  if (std::adjacent_find(totals.s.begin(), totals.s.end()) != totals.s.end())
    throw TraceMismatch("a vertex joins S twice");
  return totals;
}

}  // namespace planarize
