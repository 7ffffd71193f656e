#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "planarize/graph.hpp"

namespace planarize {

// G[S]: keeps the ids of `g`, drops every vertex outside `s`.
MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> s);

// Every component has at most as many edge units as vertices.
bool is_pseudoforest(const MultiGraph& g);

// Series-parallel rewriting (loop deletion, parallel merging, removal of
// degree <= 1 vertices, smoothing of degree-2 vertices) empties the graph
// exactly when the treewidth is at most 2. The rewriting is confluent; the
// optional seed shuffles the rule order so tests can check that.
bool is_partial_2_tree(const MultiGraph& g,
                       std::optional<std::uint64_t> order_seed = std::nullopt);

// Every component either vanishes under the same rewriting or stops at a
// simple K4. Such graphs are K4 with series-parallel pieces glued along edges
// and pendant trees: planar, treewidth at most 3.
bool reduces_to_k4_or_empty(const MultiGraph& g);

// Exact planarity (Boyer-Myrvold). Loops and parallel edges are ignored since
// they never affect planarity.
bool is_planar(const MultiGraph& g);

enum class ComponentKind { Empty, SingleVertex, LoopVertex, DipoleD3, K4, Reject };

struct ComponentClass {
  ComponentKind kind = ComponentKind::Reject;
  std::string reason;  // set only for Reject
};

std::string to_string(ComponentKind kind);

// Strips pendant trees, smooths degree-2 vertices (multigraph-aware) and
// names the residue. The input must be connected (or empty).
ComponentClass classify_component(const MultiGraph& component);

// Every connected component of g, classified; true iff none is Reject.
bool all_components_subdivide_k4_or_d3(const MultiGraph& g);

// Copy of g restricted to one vertex set, keeping ids.
MultiGraph restrict_to(const MultiGraph& g, std::span<const VertexId> keep);

}  // namespace planarize
