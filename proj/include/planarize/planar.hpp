#pragma once

#include <cstddef>
#include <optional>

#include "planarize/graph.hpp"
#include "planarize/ledger.hpp"
#include "planarize/solution.hpp"

namespace planarize {

struct PlanarOptions {
  std::optional<ChargeParams> params;  // reference values when empty
  bool strict_ledger = true;           // NegativeCharge on the first violation
};

struct PlanarResult {
  ReductionSolution solution;
  LedgerState ledger;
};

// S with |S| >= n - 23m/120 whose induced subgraph is planar of treewidth at
// most 3. Case order, evaluated on connected components: degree <= 2 vertex
// (contract), K4 or three-edge dipole component (accept), parallel pair
// (drop one copy), 3-regular component, degree-5 vertex, degree-4 vertex
// next to a degree-3 vertex, 4-regular component (each: delete a vertex).
// Vertices of degree >= 6 are deleted first. Throws InfeasibleParams for
// parameters outside the LP, NegativeCharge if a step's charge is negative.
PlanarResult reduce_planar(const MultiGraph& g, const PlanarOptions& opts = {});

// Deletes vertices of degree >= 6, smallest id first, until none is left.
std::size_t preprocess_high_degree(MultiGraph& g);

}  // namespace planarize
