#include "planarize/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace planarize {

MultiGraph::MultiGraph(std::size_t n)
    : adj_(n), deg_(n, 0), alive_(n, 1), origin_(n), n_(n) {
  for (std::size_t i = 0; i < n; ++i) origin_[i] = static_cast<VertexId>(i);
}

MultiGraph MultiGraph::from_edge_list(std::span<const Edge> edges,
                                      std::size_t n_hint) {
  std::size_t n = n_hint;
  for (const Edge& e : edges) {
    if (e.u == e.v)
      throw LoopInInput("loop at vertex " + std::to_string(e.u) +
                        " in simple-graph input");
    n = std::max<std::size_t>(n, std::size_t{std::max(e.u, e.v)} + 1);
  }
  MultiGraph g(n);
  for (const Edge& e : edges)
    if (!g.adjacent(e.u, e.v)) g.add_edge(e.u, e.v);
  return g;
}

void MultiGraph::require(VertexId v) const {
  if (!contains(v)) throw UnknownVertex("unknown vertex " + std::to_string(v));
}

Incidence* MultiGraph::find(VertexId u, VertexId v) {
  for (Incidence& inc : adj_[u])
    if (inc.to == v) return &inc;
  return nullptr;
}

const Incidence* MultiGraph::find(VertexId u, VertexId v) const {
  for (const Incidence& inc : adj_[u])
    if (inc.to == v) return &inc;
  return nullptr;
}

// Adjusts the multiplicity of the half-entry u -> v, creating or erasing it.
void MultiGraph::bump(VertexId u, VertexId v, std::int64_t delta) {
  auto& list = adj_[u];
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].to != v) continue;
    std::int64_t next = static_cast<std::int64_t>(list[i].mult) + delta;
    if (next == 0) {
      list[i] = list.back();
      list.pop_back();
    } else {
      list[i].mult = static_cast<std::uint32_t>(next);
    }
    return;
  }
  list.push_back({v, static_cast<std::uint32_t>(delta)});
}

VertexId MultiGraph::add_vertex() {
  const auto id = static_cast<VertexId>(adj_.size());
  adj_.emplace_back();
  deg_.push_back(0);
  alive_.push_back(1);
  origin_.push_back(id);
  ++n_;
  return id;
}

void MultiGraph::add_edge(VertexId u, VertexId v, std::uint32_t count) {
  require(u);
  require(v);
  if (count == 0) return;
  if (u == v) {
    bump(u, u, count);
    deg_[u] += 2 * count;
  } else {
    bump(u, v, count);
    bump(v, u, count);
    deg_[u] += count;
    deg_[v] += count;
  }
  m_ += count;
}

std::uint32_t MultiGraph::remove_edge(VertexId u, VertexId v,
                                      std::uint32_t count) {
  require(u);
  require(v);
  const Incidence* inc = find(u, v);
  if (inc == nullptr)
    throw NoSuchEdge("no edge " + std::to_string(u) + "-" + std::to_string(v));
  const std::uint32_t k = std::min(count, inc->mult);
  if (k == 0) return 0;
  if (u == v) {
    bump(u, u, -static_cast<std::int64_t>(k));
    deg_[u] -= 2 * k;
  } else {
    bump(u, v, -static_cast<std::int64_t>(k));
    bump(v, u, -static_cast<std::int64_t>(k));
    deg_[u] -= k;
    deg_[v] -= k;
  }
  m_ -= k;
  return k;
}

std::uint32_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
  require(u);
  require(v);
  const Incidence* inc = find(u, v);
  return inc ? inc->mult : 0;
}

std::uint32_t MultiGraph::degree(VertexId v) const {
  require(v);
  return deg_[v];
}

std::uint32_t MultiGraph::loops(VertexId v) const {
  require(v);
  const Incidence* inc = find(v, v);
  return inc ? inc->mult : 0;
}

std::span<const Incidence> MultiGraph::incidences(VertexId v) const {
  require(v);
  return adj_[v];
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
  require(v);
  std::vector<VertexId> out;
  out.reserve(adj_[v].size());
  for (const Incidence& inc : adj_[v])
    if (inc.to != v) out.push_back(inc.to);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> MultiGraph::neighbor_multiset(VertexId v) const {
  require(v);
  std::vector<VertexId> out;
  for (const Incidence& inc : adj_[v])
    out.insert(out.end(), inc.mult, inc.to);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MultiGraph::delete_vertex(VertexId v) {
  require(v);
  std::size_t removed = 0;
  for (const Incidence& inc : adj_[v]) {
    removed += inc.mult;
    if (inc.to == v) continue;
    bump(inc.to, v, -static_cast<std::int64_t>(inc.mult));
    deg_[inc.to] -= inc.mult;
  }
  adj_[v].clear();
  adj_[v].shrink_to_fit();
  deg_[v] = 0;
  alive_[v] = 0;
  --n_;
  m_ -= removed;
  return removed;
}

void MultiGraph::contract_edge(VertexId u, VertexId v, VertexId survivor) {
  require(u);
  require(v);
  if (u == v) throw NoSuchEdge("cannot contract a loop");
  if (survivor != u && survivor != v)
    throw InputError("survivor must be an endpoint of the contracted edge");
  const std::uint32_t k = multiplicity(u, v);
  if (k == 0)
    throw NoSuchEdge("no edge " + std::to_string(u) + "-" + std::to_string(v));
  const VertexId gone = survivor == u ? v : u;
  remove_edge(u, v, k);
  // Move the remaining incidences of `gone` over to the survivor.
  std::vector<Incidence> moved = adj_[gone];
  for (const Incidence& inc : moved) {
    if (inc.to == gone) {
      remove_edge(gone, gone, inc.mult);
      add_edge(survivor, survivor, inc.mult);
    } else {
      remove_edge(gone, inc.to, inc.mult);
      add_edge(survivor, inc.to, inc.mult);
    }
  }
  alive_[gone] = 0;
  --n_;
  adj_[gone].clear();
  adj_[gone].shrink_to_fit();
  if (k > 1) add_edge(survivor, survivor, k - 1);
}

std::size_t MultiGraph::simplify_at(VertexId v) {
  require(v);
  std::size_t removed = 0;
  std::vector<Incidence> snapshot = adj_[v];
  for (const Incidence& inc : snapshot) {
    if (inc.to == v)
      removed += remove_edge(v, v, inc.mult);
    else if (inc.mult > 1)
      removed += remove_edge(v, inc.to, inc.mult - 1);
  }
  return removed;
}

std::size_t MultiGraph::simplify() {
  std::size_t removed = 0;
  for (VertexId v = 0; v < adj_.size(); ++v)
    if (alive_[v]) removed += simplify_at(v);
  return removed;
}

std::vector<VertexId> MultiGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(n_);
  for (VertexId v = 0; v < adj_.size(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<Edge> MultiGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 0; u < adj_.size(); ++u) {
    if (!alive_[u]) continue;
    for (const Incidence& inc : adj_[u])
      if (inc.to >= u) out.insert(out.end(), inc.mult, Edge{u, inc.to});
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexId MultiGraph::origin(VertexId v) const {
  require(v);
  return origin_[v];
}

std::vector<std::vector<VertexId>> MultiGraph::components() const {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(adj_.size(), 0);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < adj_.size(); ++s) {
    if (!alive_[s] || seen[s]) continue;
    out.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (const Incidence& inc : adj_[x])
        if (!seen[inc.to]) {
          seen[inc.to] = 1;
          stack.push_back(inc.to);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool MultiGraph::is_d_regular(std::uint32_t d) const {
  for (VertexId v = 0; v < adj_.size(); ++v)
    if (alive_[v] && deg_[v] != d) return false;
  return true;
}

bool MultiGraph::is_simple() const {
  for (VertexId v = 0; v < adj_.size(); ++v) {
    if (!alive_[v]) continue;
    for (const Incidence& inc : adj_[v])
      if (inc.to == v || inc.mult > 1) return false;
  }
  return true;
}

std::uint32_t MultiGraph::max_degree() const {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < adj_.size(); ++v)
    if (alive_[v]) best = std::max(best, deg_[v]);
  return best;
}

void MultiGraph::audit() const {
  std::size_t alive = 0;
  std::size_t degree_sum = 0;
  for (VertexId v = 0; v < adj_.size(); ++v) {
    if (!alive_[v]) {
      PLANARIZE_CHECK(adj_[v].empty(), "dead vertex keeps incidences");
      continue;
    }
    ++alive;
    std::size_t d = 0;
    for (const Incidence& inc : adj_[v]) {
      PLANARIZE_CHECK(inc.mult > 0, "zero-multiplicity incidence");
      PLANARIZE_CHECK(inc.to < adj_.size() && alive_[inc.to],
                      "incidence to a dead vertex");
      if (inc.to == v) {
        d += 2 * inc.mult;
      } else {
        d += inc.mult;
        const Incidence* back = find(inc.to, v);
        PLANARIZE_CHECK(back && back->mult == inc.mult,
                        "asymmetric adjacency");
      }
    }
    PLANARIZE_CHECK(d == deg_[v], "cached degree out of date");
    degree_sum += d;
  }
  PLANARIZE_CHECK(alive == n_, "vertex count out of date");
  PLANARIZE_CHECK(degree_sum == 2 * m_, "edge count out of date");
  std::vector<char> used(adj_.size(), 0);
  for (VertexId v = 0; v < adj_.size(); ++v) {
    if (!alive_[v]) continue;
    PLANARIZE_CHECK(!used[origin_[v]], "origin map is not injective");
    used[origin_[v]] = 1;
  }
}

std::optional<std::size_t> girth(const MultiGraph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto verts = g.vertices();
  for (VertexId v : verts) {
    for (const Incidence& inc : g.incidences(v)) {
      if (inc.to == v) return 1;
      if (inc.mult > 1) best = std::min<std::size_t>(best, 2);
    }
  }
  if (best == 2) return 2;
  // Simple from here on: BFS from every root, closing edges between
  // non-parent neighbours bound the shortest cycle through the root.
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.id_bound(), kUnseen);
  std::vector<VertexId> parent(g.id_bound());
  std::vector<VertexId> touched;
  for (VertexId root : verts) {
    for (VertexId t : touched) dist[t] = kUnseen;
    touched.clear();
    std::queue<VertexId> q;
    dist[root] = 0;
    parent[root] = root;
    touched.push_back(root);
    q.push(root);
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      if (2 * dist[x] >= best) break;
      for (const Incidence& inc : g.incidences(x)) {
        const VertexId y = inc.to;
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          touched.push_back(y);
          q.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

}  // namespace planarize
