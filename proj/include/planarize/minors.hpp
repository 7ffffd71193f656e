#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "planarize/graph.hpp"
#include "planarize/rational.hpp"

namespace planarize {

struct MinorResult {
  MultiGraph minor;  // simple; ids are the kept vertices' input ids
  std::size_t girth = 0;
  std::size_t ell = 0;       // floor((girth - 3) / 4)
  std::size_t offset_a = 0;  // in [0, ell)
  VertexId root = 0;
  std::vector<VertexId> kept;            // sorted
  std::vector<VertexId> parent;          // BFS tree; parent[root] == root
  std::vector<std::size_t> level;        // BFS distance from root
  std::vector<VertexId> representative;  // input vertex -> kept vertex
  std::size_t n = 0, m = 0;
  std::size_t n_prime = 0, m_prime = 0;
};

// Contracts every vertex outside root + levels a, a + ell, a + 2 ell, ... of a
// breadth-first tree into its parent. Requires a connected input of girth
// at least 7 (InsufficientGirth, Disconnected otherwise).
MinorResult level_contract(const MultiGraph& g,
                           std::optional<VertexId> root = std::nullopt);

struct DensityReport {
  std::size_t n_prime = 0, m_prime = 0;
  long long surplus = 0;          // m' - n'
  Rational surplus_ratio;         // surplus * girth / n
  bool within_level_bound = true;  // n' <= ceil(n / ell) + 1
  bool within_girth_bound = true;  // n' <= ceil(5n / g) + 1 (informational)
};

DensityReport verify_minor_density(const MinorResult& r);

}  // namespace planarize
