#include "planarize/pseudoforest.hpp"

#include <algorithm>
#include <array>

#include "planarize/detail/case_queue.hpp"

namespace planarize {
namespace {

// Dispatch priorities, lowest first, in the order of the case list.
enum Priority : int {
  kPre = 0,
  kLeaf,
  kDeg2,
  kDeltaA,
  kDeltaB,
  kDeltaC,
  kDeltaD,
  kDeg3Adj4,
  kThree,
  kFourAB,
  kFourC1,
  kFourC2,
  kTetra,  // (c)(iii)/(c)(iv) need the global tetrahedron structure
};

Edge edge_of(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Nbhd4 {
  std::array<VertexId, 4> n{};
  std::array<std::array<bool, 4>, 4> adj{};
  int triangles = 0;
};

Nbhd4 nbhd4(const MultiGraph& g, VertexId v) {
  Nbhd4 out;
  const auto nb = g.neighbors(v);
  std::copy(nb.begin(), nb.end(), out.n.begin());
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      out.adj[i][j] = out.adj[j][i] = g.adjacent(out.n[i], out.n[j]);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (out.adj[i][j] && out.adj[j][k] && out.adj[i][k]) ++out.triangles;
  return out;
}

int classify(const MultiGraph& g, VertexId v) {
  const std::uint32_t d = g.degree(v);
  if (d == 0) return detail::CaseQueue::kNone;
  if (d >= 5) return kPre;
  if (d == 1) return kLeaf;
  if (d == 2) {
    const auto nb = g.neighbors(v);
    if (!g.adjacent(nb[0], nb[1])) return kDeg2;
    auto lo = g.degree(nb[0]), hi = g.degree(nb[1]);
    if (lo > hi) std::swap(lo, hi);
    if (lo == 2 && hi == 2) return kDeltaA;
    if (lo == 2 && hi == 3) return kDeltaB;
    if (lo == 3) return kDeltaC;  // {3,3} or {3,4}
    return kDeltaD;               // {2,4} or {4,4}
  }
  if (d == 3) {
    for (VertexId w : g.neighbors(v))
      if (g.degree(w) == 4) return kDeg3Adj4;
    return kThree;
  }
  switch (nbhd4(g, v).triangles) {
    case 0: return kFourAB;
    case 4: return kFourC1;
    case 2: return kFourC2;
    default: return kTetra;
  }
}

// Case (a) at v: the first pairing of N(v) into two non-adjacent pairs;
// deletes the pair that avoids the smallest neighbour.
std::optional<std::array<VertexId, 2>> case_a_pair(const MultiGraph& g,
                                                   VertexId v) {
  const Nbhd4 nb = nbhd4(g, v);
  static constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& p : kPairings)
    if (!nb.adj[p[0]][p[1]] && !nb.adj[p[2]][p[3]])
      return std::array<VertexId, 2>{nb.n[p[2]], nb.n[p[3]]};
  return std::nullopt;
}

CaseDescriptor plan_local(const MultiGraph& g, VertexId a, int priority) {
  CaseDescriptor d;
  d.anchor = a;
  switch (priority) {
    case kPre:
      d.label = StepKind::Preprocess;
      d.deleted = {a};
      break;
    case kLeaf:
      d.label = StepKind::Leaf;
      d.contracted = {{a, g.neighbors(a)[0]}};
      d.s_added = {a};
      break;
    case kDeg2:
      d.label = StepKind::Deg2NoTriangle;
      d.contracted = {{a, g.neighbors(a)[0]}};
      d.s_added = {a};
      break;
    case kDeltaA: {
      const auto nb = g.neighbors(a);
      d.label = StepKind::DeltaA;
      d.removed = {edge_of(a, nb[0]), edge_of(a, nb[1]), edge_of(nb[0], nb[1])};
      d.s_added = {a, nb[0], nb[1]};
      std::sort(d.s_added.begin(), d.s_added.end());
      break;
    }
    case kDeltaB: {
      const auto nb = g.neighbors(a);
      const VertexId b = g.degree(nb[0]) == 2 ? nb[0] : nb[1];
      const VertexId c = b == nb[0] ? nb[1] : nb[0];
      VertexId x = c;
      for (VertexId w : g.neighbors(c))
        if (w != a && w != b) x = w;
      PLANARIZE_CHECK(g.degree(x) >= 3,
                      "third neighbour of the triangle has degree below 3");
      d.label = StepKind::DeltaB;
      d.deleted = {x};
      break;
    }
    case kDeltaC: {
      const auto nb = g.neighbors(a);
      // b: a degree-3 corner (the smaller id if both are), c: the other
      VertexId b = nb[0], c = nb[1];
      if (g.degree(b) != 3 || (g.degree(c) == 3 && c < b)) std::swap(b, c);
      VertexId x = b;
      for (VertexId w : g.neighbors(b))
        if (w != a && w != c) x = w;
      d.label = StepKind::DeltaC;
      d.deleted = {c};
      d.contracted = {{a, b}, {b, x}};
      d.s_added = {std::min(a, b), std::max(a, b)};
      break;
    }
    case kDeltaD: {
      const auto nb = g.neighbors(a);
      VertexId b = nb[0], c = nb[1];
      if (g.degree(b) != 4) std::swap(b, c);
      d.label = StepKind::DeltaD;
      d.deleted = {b};
      d.contracted = {{a, c}};
      d.s_added = {a};
      break;
    }
    case kDeg3Adj4:
      d.label = StepKind::Deg3AdjDeg4;
      for (VertexId w : g.neighbors(a))
        if (g.degree(w) == 4) {
          d.deleted = {w};
          break;
        }
      break;
    case kThree:
      d.label = StepKind::ThreeRegular;
      d.deleted = {a};
      break;
    case kFourAB: {
      if (auto pair = case_a_pair(g, a)) {
        d.label = StepKind::FourRegA;
        d.deleted = {(*pair)[0], (*pair)[1]};
        break;
      }
      // N(a) is a star: redirect to case (a) at its smallest leaf
      const Nbhd4 nb = nbhd4(g, a);
      int centre = -1;
      for (int i = 0; i < 4; ++i) {
        int k = 0;
        for (int j = 0; j < 4; ++j) k += nb.adj[i][j];
        if (k == 3) centre = i;
      }
      PLANARIZE_CHECK(centre >= 0, "triangle-free neighbourhood is neither "
                                   "matchable nor a star");
      const VertexId leaf = nb.n[centre == 0 ? 1 : 0];
      auto pair = case_a_pair(g, leaf);
      PLANARIZE_CHECK(pair.has_value(), "star redirect found no pairing");
      d.label = StepKind::FourRegB;
      d.deleted = {(*pair)[0], (*pair)[1]};
      break;
    }
    case kFourC1: {
      std::vector<VertexId> k5 = g.neighbors(a);
      k5.push_back(a);
      std::sort(k5.begin(), k5.end());
      d.label = StepKind::FourRegC1;
      d.deleted = {k5[0], k5[1]};
      break;
    }
    case kFourC2: {
      const Nbhd4 nb = nbhd4(g, a);
      d.label = StepKind::FourRegC2;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (!nb.adj[i][j]) d.deleted = {nb.n[i], nb.n[j]};
      break;
    }
    default:
      throw AssertionFailure("plan_local called for a global case");
  }
  return d;
}

// (c)(iii) and (c)(iv). Precondition: every vertex with an edge has degree 4
// and lies in exactly one tetrahedron.
CaseDescriptor plan_tetrahedra(const MultiGraph& g) {
  const std::size_t bound = g.id_bound();
  constexpr VertexId kNoTetra = static_cast<VertexId>(-1);
  std::vector<VertexId> tet(bound, kNoTetra);  // vertex -> smallest id of its K4
  std::vector<VertexId> keys;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0 || tet[v] != kNoTetra) continue;
    const Nbhd4 nb = nbhd4(g, v);
    std::array<VertexId, 4> t{v, 0, 0, 0};
    int k = 1;
    for (int i = 0; i < 4 && k < 4; ++i) {
      int inside = 0;
      for (int j = 0; j < 4; ++j) inside += nb.adj[i][j];
      if (inside >= 2) t[k++] = nb.n[i];
    }
    PLANARIZE_CHECK(k == 4, "vertex outside every tetrahedron in the "
                            "tetrahedral phase");
    const VertexId key = *std::min_element(t.begin(), t.end());
    for (VertexId u : t) tet[u] = key;
    keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());

  // External edge of a vertex: its unique neighbour outside its tetrahedron.
  auto outside = [&](VertexId v) {
    for (VertexId w : g.neighbors(v))
      if (tet[w] != tet[v]) return w;
    throw AssertionFailure("tetrahedron vertex without an external edge");
  };
  auto members = [&](VertexId key) {
    std::vector<VertexId> out{key};
    for (VertexId w : g.neighbors(key))
      if (tet[w] == key) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  };

  // (c)(iii): two tetrahedra joined by at least two edges.
  for (VertexId key : keys) {
    std::vector<std::pair<VertexId, VertexId>> ext;  // (x in T, y outside)
    for (VertexId x : members(key)) ext.push_back({x, outside(x)});
    VertexId best = kNoTetra;
    for (std::size_t i = 0; i < ext.size(); ++i)
      for (std::size_t j = i + 1; j < ext.size(); ++j)
        if (tet[ext[i].second] == tet[ext[j].second])
          best = std::min(best, tet[ext[i].second]);
    if (best == kNoTetra) continue;
    std::vector<std::pair<VertexId, VertexId>> joined;
    for (const auto& e : ext)
      if (tet[e.second] == best) joined.push_back(e);
    CaseDescriptor d;
    d.label = StepKind::FourRegC3;
    d.anchor = key;
    d.deleted = {joined[1].first, joined[0].second};
    return d;
  }

  // (c)(iv): find a cycle in the tetrahedron graph by depth-first search.
  std::vector<VertexId> parent(bound, kNoTetra);
  std::vector<char> state(bound, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::vector<VertexId>> next(bound);
  auto tetra_nbrs = [&](VertexId key) {
    std::vector<VertexId> out;
    for (VertexId x : members(key)) out.push_back(tet[outside(x)]);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (VertexId root : keys) {
    if (state[root]) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    next[root] = tetra_nbrs(root);
    while (!stack.empty()) {
      auto& [t, i] = stack.back();
      if (i == next[t].size()) {
        state[t] = 2;
        stack.pop_back();
        continue;
      }
      const VertexId u = next[t][i++];
      if (u == parent[t]) continue;
      if (state[u] == 1) {
        // back edge t -> u closes the cycle u ... t
        std::vector<VertexId> cycle;
        for (VertexId w = t; w != u; w = parent[w]) cycle.push_back(w);
        cycle.push_back(u);
        const std::size_t len = cycle.size();
        std::size_t pick = 0;
        for (std::size_t k = 1; k < len; ++k)
          if (cycle[k] < cycle[pick]) pick = k;
        const VertexId self = cycle[pick];
        const VertexId prev = cycle[(pick + len - 1) % len];
        const VertexId succ = cycle[(pick + 1) % len];
        CaseDescriptor d;
        d.label = StepKind::FourRegC4;
        d.anchor = self;
        for (VertexId x : members(self)) {
          const VertexId y = tet[outside(x)];
          if (y != prev && y != succ) d.deleted.push_back(x);
        }
        PLANARIZE_CHECK(d.deleted.size() == 2, "cycle tetrahedron has no two "
                                               "off-cycle vertices");
        return d;
      }
      if (state[u] == 2) continue;
      parent[u] = t;
      state[u] = 1;
      next[u] = tetra_nbrs(u);
      stack.push_back({u, 0});
    }
  }
  throw CaseAnalysisIncomplete("tetrahedral phase without joined pair or cycle");
}

CaseDescriptor plan(const MultiGraph& g, VertexId anchor, int priority) {
  return priority == kTetra ? plan_tetrahedra(g) : plan_local(g, anchor, priority);
}

// Vertices whose adjacency the step will change (still-present ones only).
std::vector<VertexId> touched_by(const MultiGraph& g, const CaseDescriptor& d) {
  std::vector<VertexId> out;
  for (VertexId v : d.deleted) {
    auto nb = g.neighbors(v);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  for (const Contraction& c : d.contracted) {
    out.push_back(c.survivor);
    out.push_back(c.gone);
    auto nb = g.neighbors(c.gone);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  for (const Edge& e : d.removed) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Runs the operations, harvests newly isolated vertices, records the step.
// Returns the touched vertices that are still present afterwards.
std::vector<VertexId> execute(MultiGraph& g, const CaseDescriptor& d,
                              ReductionSolution& sol) {
  std::vector<VertexId> touched = touched_by(g, d);
  TraceStep step;
  step.kind = d.label;
  step.anchor = d.anchor;
  step.deleted = d.deleted;
  step.contracted = d.contracted;
  step.removed = d.removed;
  step.s_added = d.s_added;
  execute_step(g, step);
  std::vector<VertexId> alive;
  for (VertexId v : touched) {
    if (!g.contains(v)) continue;
    if (g.degree(v) == 0) {
      g.delete_vertex(v);
      step.s_added.push_back(v);
    } else {
      alive.push_back(v);
    }
  }
  PLANARIZE_CHECK(step.removed_edges > 0 || !step.deleted.empty(),
                  "step made no progress");
  sol.s.insert(sol.s.end(), step.s_added.begin(), step.s_added.end());
  sol.trace.push_back(std::move(step));
  return alive;
}

ReductionSolution start(MultiGraph& g) {
  ReductionSolution sol;
  sol.bound = kPseudoforestBound;
  sol.n = g.num_vertices();
  sol.m = g.num_edges();
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
  return sol;
}

void finish(ReductionSolution& sol) {
  std::sort(sol.s.begin(), sol.s.end());
  if (!sol.bound_holds())
    throw BoundViolation("pseudoforest bound violated: |S| = " +
                         std::to_string(sol.s.size()));
}

}  // namespace

std::optional<CaseDescriptor> first_applicable_case(const MultiGraph& g) {
  if (g.num_edges() == 0) return std::nullopt;
  int best = detail::CaseQueue::kNone;
  VertexId anchor = 0;
  for (VertexId v : g.vertices()) {
    const int p = classify(g, v);
    if (p != detail::CaseQueue::kNone &&
        (best == detail::CaseQueue::kNone || p < best)) {
      best = p;
      anchor = v;
    }
  }
  if (best == detail::CaseQueue::kNone)
    throw CaseAnalysisIncomplete("edges remain but no case applies");
  return plan(g, anchor, best);
}

void apply_case(MultiGraph& g, const CaseDescriptor& d, ReductionSolution& sol) {
  std::optional<CaseDescriptor> fresh;
  try {
    fresh = first_applicable_case(g);
  } catch (const UnknownVertex&) {
  }
  if (!fresh || !(*fresh == d))
    throw StaleDescriptor("descriptor " + to_string(d.label) + " at vertex " +
                          std::to_string(d.anchor) + " no longer matches");
  execute(g, d, sol);
}

ReductionSolution reduce_pseudoforest_reference(const MultiGraph& input) {
  MultiGraph g = input;
  ReductionSolution sol = start(g);
  while (auto d = first_applicable_case(g)) execute(g, *d, sol);
  PLANARIZE_CHECK(g.empty(), "vertices left after the last case");
  finish(sol);
  return sol;
}

ReductionSolution reduce_pseudoforest(const MultiGraph& input) {
  MultiGraph g = input;
  ReductionSolution sol = start(g);
  detail::CaseQueue queue(g.id_bound());
  for (VertexId v : g.vertices()) queue.set(v, classify(g, v));

  while (auto top = queue.top()) {
    const auto [priority, anchor] = *top;
    const CaseDescriptor d = plan(g, anchor, priority);
    for (VertexId v : d.deleted) queue.clear(v);
    for (const Contraction& c : d.contracted) queue.clear(c.gone);
    for (VertexId v : d.s_added) queue.clear(v);
    const auto touched = execute(g, d, sol);

    std::vector<VertexId> dirty;
    for (VertexId v : touched) {
      dirty.push_back(v);
      auto nb = g.neighbors(v);
      dirty.insert(dirty.end(), nb.begin(), nb.end());
    }
    std::sort(dirty.begin(), dirty.end());
    dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
    for (VertexId v : d.s_added) queue.clear(v);
    for (VertexId v : dirty) queue.set(v, classify(g, v));
    // harvested vertices are gone from g
    for (const TraceStep& s = sol.trace.back(); VertexId v : s.s_added)
      if (!g.contains(v)) queue.clear(v);
  }
  PLANARIZE_CHECK(g.num_edges() == 0 && g.empty(),
                  "incremental dispatcher stopped with work left");
  finish(sol);
  return sol;
}

}  // namespace planarize
