#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "planarize/errors.hpp"

namespace planarize {

// Vertex identities are dense indices into a graph's id space. An id is never
// reused after deletion within one graph instance.
using VertexId = std::uint32_t;

struct Incidence {
  VertexId to;
  std::uint32_t mult;  // parallel copies; for to == self, the number of loops
};

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Mutable undirected multigraph. Adjacency is multiplicity-keyed: every vertex
// holds one Incidence per distinct neighbour. A loop contributes 2 to the
// degree of its vertex and 1 to the edge count.
//
// Working vertices always keep the id of the input vertex they were created
// from; the survivor of a contraction keeps its own id. origin() exposes that
// mapping explicitly so callers never have to rely on it implicitly.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t n);

  // Simple graph from a list of pairs. Duplicates collapse; a loop throws
  // LoopInInput. The id space is max(n_hint, 1 + largest label).
  static MultiGraph from_edge_list(std::span<const Edge> edges,
                                   std::size_t n_hint = 0);

  std::size_t id_bound() const { return adj_.size(); }
  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }
  bool empty() const { return n_ == 0; }
  bool contains(VertexId v) const { return v < alive_.size() && alive_[v]; }

  VertexId add_vertex();
  void add_edge(VertexId u, VertexId v, std::uint32_t count = 1);
  // Removes up to `count` copies; returns the number removed.
  std::uint32_t remove_edge(VertexId u, VertexId v, std::uint32_t count = 1);

  std::uint32_t multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }
  std::uint32_t degree(VertexId v) const;
  std::uint32_t loops(VertexId v) const;
  std::span<const Incidence> incidences(VertexId v) const;
  // Distinct neighbours other than v itself, sorted by id.
  std::vector<VertexId> neighbors(VertexId v) const;
  // Neighbour multiset, sorted; loops appear as v itself once per loop.
  std::vector<VertexId> neighbor_multiset(VertexId v) const;

  // Removes v with all incident edge units; returns how many were removed.
  std::size_t delete_vertex(VertexId v);
  // Merges the endpoint that is not `survivor` into `survivor`. One copy of
  // (u,v) vanishes, further copies become loops at the survivor.
  void contract_edge(VertexId u, VertexId v, VertexId survivor);
  // Drops all loops and surplus parallel copies; returns units removed.
  std::size_t simplify();
  std::size_t simplify_at(VertexId v);

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;  // one entry per unit, u <= v, sorted
  VertexId origin(VertexId v) const;

  std::vector<std::vector<VertexId>> components() const;
  bool is_d_regular(std::uint32_t d) const;
  bool is_simple() const;
  std::uint32_t max_degree() const;

  // Throws AssertionFailure if any structural invariant is broken.
  void audit() const;

 private:
  void require(VertexId v) const;
  Incidence* find(VertexId u, VertexId v);
  const Incidence* find(VertexId u, VertexId v) const;
  void bump(VertexId u, VertexId v, std::int64_t delta);

  std::vector<std::vector<Incidence>> adj_;
  std::vector<std::uint32_t> deg_;
  std::vector<char> alive_;
  std::vector<VertexId> origin_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
};

// Shortest cycle length (loop = 1, parallel pair = 2); nullopt for forests.
std::optional<std::size_t> girth(const MultiGraph& g);

}  // namespace planarize
