#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "planarize/graph.hpp"

namespace planarize {

enum class PropertyId {
  IndependentSet,
  Matching,
  LinearForest,
  Forest,
  Pseudoforest,
  Treewidth2,
  Outerplanar,
  Planar,
};

std::string to_string(PropertyId p);
PropertyId parse_property(const std::string& name);  // throws InvalidSpec

struct InducedMax {
  std::size_t size = 0;
  std::vector<VertexId> witness;  // sorted, lexicographically smallest
};

// Default 16; PLANARIZE_ORACLE_CAP overrides.
std::size_t oracle_cap();

// Decides the property on the whole graph with the oracle's own predicates
// (no code shared with the certifiers).
bool oracle_has_property(const MultiGraph& g, PropertyId p);

// Largest S with G[S] in p; subsets visited by decreasing size, then
// lexicographically. Throws TooLarge above the cap.
InducedMax max_induced(const MultiGraph& g, PropertyId p);
// Same answer, subsets of each size split across OpenMP threads.
InducedMax max_induced_parallel(const MultiGraph& g, PropertyId p);

// Exact treewidth by dynamic programming over elimination prefixes.
int exact_treewidth(const MultiGraph& g, std::size_t cap = 10);

struct KuratowskiWitness {
  enum class Kind { K5, K33 } kind = Kind::K5;
  std::vector<VertexId> branch;  // K33: first three one side, last three other
  std::vector<std::vector<VertexId>> paths;  // endpoint to endpoint, inclusive
};

// A K5 or K3,3 subdivision if one exists. Throws TooLarge above n = 12.
std::optional<KuratowskiWitness> find_kuratowski(const MultiGraph& g,
                                                 std::size_t cap = 12);

// True iff the witness is a genuine subdivision inside g.
bool check_kuratowski(const MultiGraph& g, const KuratowskiWitness& w);

}  // namespace planarize
