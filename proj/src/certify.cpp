#include "planarize/certify.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace planarize {

MultiGraph restrict_to(const MultiGraph& g, std::span<const VertexId> keep) {
  std::vector<char> in(g.id_bound(), 0);
  for (VertexId v : keep) {
    if (!g.contains(v))
      throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
    in[v] = 1;
  }
  MultiGraph h(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v)
    if (!in[v]) h.delete_vertex(v);
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!in[v]) continue;
    for (const Incidence& inc : g.incidences(v))
      if (in[inc.to] && inc.to >= v) h.add_edge(v, inc.to, inc.mult);
  }
  return h;
}

MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> s) {
  return restrict_to(g, s);
}

bool is_pseudoforest(const MultiGraph& g) {
  for (const auto& comp : g.components()) {
    std::size_t twice_edges = 0;
    for (VertexId v : comp) twice_edges += g.degree(v);
    if (twice_edges > 2 * comp.size()) return false;
  }
  return true;
}

namespace {

// Exhaustive series-parallel rewriting; returns the irreducible residue.
MultiGraph sp_residue(const MultiGraph& g, std::optional<std::uint64_t> order_seed) {
  MultiGraph h = g;
  std::vector<VertexId> work = h.vertices();
  std::mt19937_64 rng(order_seed.value_or(0));
  if (order_seed) std::shuffle(work.begin(), work.end(), rng);
  while (!work.empty()) {
    std::size_t pick = work.size() - 1;
    if (order_seed) pick = std::uniform_int_distribution<std::size_t>(0, pick)(rng);
    const VertexId v = work[pick];
    work[pick] = work.back();
    work.pop_back();
    if (!h.contains(v)) continue;
    if (h.simplify_at(v) > 0) {
      for (VertexId w : h.neighbors(v)) work.push_back(w);
      work.push_back(v);
      continue;
    }
    const std::uint32_t d = h.degree(v);
    if (d <= 1) {
      const auto nbrs = h.neighbors(v);
      h.delete_vertex(v);
      work.insert(work.end(), nbrs.begin(), nbrs.end());
    } else if (d == 2) {
      const auto nbrs = h.neighbors(v);  // simple at v, so two distinct
      h.delete_vertex(v);
      h.add_edge(nbrs[0], nbrs[1]);
      work.insert(work.end(), nbrs.begin(), nbrs.end());
    }
  }
  return h;
}

}  // namespace

bool is_partial_2_tree(const MultiGraph& g,
                       std::optional<std::uint64_t> order_seed) {
  return sp_residue(g, order_seed).empty();
}

bool reduces_to_k4_or_empty(const MultiGraph& g) {
  for (const auto& comp : g.components()) {
    const MultiGraph r = sp_residue(restrict_to(g, comp), std::nullopt);
    if (r.empty()) continue;
    if (!(r.num_vertices() == 4 && r.num_edges() == 6 && r.is_simple() &&
          r.is_d_regular(3)))
      return false;
  }
  return true;
}

bool is_planar(const MultiGraph& g) {
  const auto verts = g.vertices();
  if (verts.size() <= 4) return true;
  std::unordered_map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = i;
  using BGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(verts.size());
  std::size_t simple_edges = 0;
  for (VertexId u : verts)
    for (const Incidence& inc : g.incidences(u))
      if (inc.to > u) {
        boost::add_edge(idx[u], idx[inc.to], bg);
        ++simple_edges;
      }
  if (simple_edges > 3 * verts.size() - 6) return false;
  return boost::boyer_myrvold_planarity_test(bg);
}

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Empty: return "Empty";
    case ComponentKind::SingleVertex: return "SingleVertex";
    case ComponentKind::LoopVertex: return "LoopVertex";
    case ComponentKind::DipoleD3: return "DipoleD3";
    case ComponentKind::K4: return "K4";
    case ComponentKind::Reject: return "Reject";
  }
  return "Reject";
}

ComponentClass classify_component(const MultiGraph& component) {
  MultiGraph h = component;
  if (h.empty()) return {ComponentKind::Empty, {}};
  std::vector<VertexId> work = h.vertices();
  std::reverse(work.begin(), work.end());
  while (!work.empty()) {
    const VertexId v = work.back();
    work.pop_back();
    if (!h.contains(v)) continue;
    const std::uint32_t d = h.degree(v);
    if (d <= 1 && h.num_vertices() > 1) {
      const auto nbrs = h.neighbors(v);
      h.delete_vertex(v);
      work.insert(work.end(), nbrs.begin(), nbrs.end());
    } else if (d == 2 && h.loops(v) == 0) {
      const auto ends = h.neighbor_multiset(v);
      h.delete_vertex(v);
      h.add_edge(ends[0], ends[1]);  // a loop when both ends coincide
      work.push_back(ends[0]);
      work.push_back(ends[1]);
    }
  }
  const auto verts = h.vertices();
  if (verts.size() == 1) {
    const auto loops = h.loops(verts[0]);
    if (loops == 0) return {ComponentKind::SingleVertex, {}};
    if (loops == 1) return {ComponentKind::LoopVertex, {}};
    return {ComponentKind::Reject, "single vertex with several loops"};
  }
  if (verts.size() == 2 && h.num_edges() == 3 &&
      h.multiplicity(verts[0], verts[1]) == 3)
    return {ComponentKind::DipoleD3, {}};
  if (verts.size() == 4 && h.num_edges() == 6 && h.is_simple() &&
      h.is_d_regular(3))
    return {ComponentKind::K4, {}};
  return {ComponentKind::Reject,
          "residue with " + std::to_string(verts.size()) + " vertices and " +
              std::to_string(h.num_edges()) + " edges"};
}

bool all_components_subdivide_k4_or_d3(const MultiGraph& g) {
  for (const auto& comp : g.components())
    if (classify_component(restrict_to(g, comp)).kind == ComponentKind::Reject)
      return false;
  return true;
}

}  // namespace planarize
