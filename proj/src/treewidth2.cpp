#include "planarize/treewidth2.hpp"

#include <algorithm>

#include "planarize/detail/case_queue.hpp"

namespace planarize {
namespace {

enum Priority : int {
  kPre = 0,       // degree >= 5
  kContract,      // degree 1 or 2
  kDel4Adj3,      // degree 4 with a degree-3 neighbour
  kDel3Adj3,      // degree 3 with a degree-3 neighbour
  kDelMax4,       // degree 4, only reached once no degree-3 vertex is left
  kDelMax3,       // degree 3 without degree-3 neighbours (never fires first)
};

// Among vertices adjacent to a degree-3 vertex, the largest degree fires
// first, then the smallest id. Degree-3 vertices always have some neighbour
// in kDel4Adj3 or kDel3Adj3 at this point, so kDelMax4 only fires when no
// degree-3 vertex remains.
int classify(const MultiGraph& g, VertexId v) {
  const std::uint32_t d = g.degree(v);
  if (d == 0) return detail::CaseQueue::kNone;
  if (d >= 5) return kPre;
  if (d <= 2) return kContract;
  bool near3 = false;
  for (VertexId w : g.neighbors(v)) near3 = near3 || g.degree(w) == 3;
  if (d == 4) return near3 ? kDel4Adj3 : kDelMax4;
  return near3 ? kDel3Adj3 : kDelMax3;
}

}  // namespace

ReductionSolution reduce_treewidth2(const MultiGraph& input) {
  MultiGraph g = input;
  ReductionSolution sol;
  sol.bound = kTreewidth2Bound;
  sol.n = g.num_vertices();
  sol.m = g.num_edges();
  PLANARIZE_CHECK(g.is_simple(), "input must be simple");

  TraceStep harvest;
  harvest.kind = StepKind::HarvestIsolated;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 0) harvest.s_added.push_back(v);
  if (!harvest.s_added.empty()) {
    harvest.anchor = harvest.s_added.front();
    for (VertexId v : harvest.s_added) g.delete_vertex(v);
    sol.s = harvest.s_added;
    sol.trace.push_back(std::move(harvest));
  }

  detail::CaseQueue queue(g.id_bound());
  for (VertexId v : g.vertices()) queue.set(v, classify(g, v));

  while (auto top = queue.top()) {
    const auto [priority, v] = *top;
    TraceStep step;
    step.anchor = v;
    std::vector<VertexId> touched = g.neighbors(v);
    switch (priority) {
      case kPre:
        step.kind = StepKind::Preprocess;
        step.deleted = {v};
        break;
      case kContract:
        step.kind = StepKind::ContractDeg12;
        step.contracted = {{v, touched.front()}};
        step.simplify_after = true;
        step.s_added = {v};
        break;
      case kDel4Adj3:
      case kDel3Adj3:
        step.kind = StepKind::DeleteAdjDeg3;
        step.deleted = {v};
        break;
      case kDelMax4:
        step.kind = StepKind::DeleteMaxDeg;
        step.deleted = {v};
        break;
      default:
        throw CaseAnalysisIncomplete("degree-3 vertex with no deletable "
                                     "neighbour");
    }
    queue.clear(v);
    execute_step(g, step);

    std::vector<VertexId> dirty;
    for (VertexId w : touched) {
      if (!g.contains(w)) continue;
      if (g.degree(w) == 0) {
        g.delete_vertex(w);
        step.s_added.push_back(w);
        queue.clear(w);
        continue;
      }
      dirty.push_back(w);
      auto nb = g.neighbors(w);
      dirty.insert(dirty.end(), nb.begin(), nb.end());
    }
    std::sort(dirty.begin(), dirty.end());
    dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
    for (VertexId w : dirty) queue.set(w, classify(g, w));
    sol.s.insert(sol.s.end(), step.s_added.begin(), step.s_added.end());
    sol.trace.push_back(std::move(step));
  }
  PLANARIZE_CHECK(g.empty(), "vertices left after the last case");
  std::sort(sol.s.begin(), sol.s.end());
  if (!sol.bound_holds())
    throw BoundViolation("treewidth-2 bound violated: |S| = " +
                         std::to_string(sol.s.size()));
  return sol;
}

ChargeReplay replay_trace_tw2(const MultiGraph& g,
                              const std::vector<TraceStep>& trace) {
  const ReplayTotals totals = replay_trace(g, trace);
  ChargeReplay out;
  out.edge_events = totals.edge_units;
  out.deletions = totals.deletions;
  out.total = static_cast<std::int64_t>(totals.edge_units) -
              5 * static_cast<std::int64_t>(totals.deletions);
  if (totals.deletions + totals.s.size() != g.num_vertices())
    throw TraceMismatch("trace accounts for " +
                        std::to_string(totals.deletions + totals.s.size()) +
                        " of " + std::to_string(g.num_vertices()) + " vertices");
  return out;
}

}  // namespace planarize
