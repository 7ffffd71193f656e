#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "planarize/graph.hpp"
#include "planarize/ledger.hpp"
#include "planarize/rational.hpp"
#include "planarize/solution.hpp"

namespace planarize {

enum class Algorithm { Pseudoforest, Treewidth2, Planar };

std::string to_string(Algorithm a);     // pseudoforest, tw2, planar
Algorithm parse_algorithm(const std::string& name);  // throws InvalidSpec
BoundRatio bound_ratio(Algorithm a);

struct AlgorithmRun {
  ReductionSolution solution;
  std::optional<LedgerState> ledger;  // planar only
  double wall_ms = 0;
};

// Runs one reducer on g. Library assertions propagate.
AlgorithmRun run_algorithm(Algorithm a, const MultiGraph& g,
                           const std::optional<ChargeParams>& params = std::nullopt);

struct CertificateVerdict {
  std::string name;
  bool passed = false;
  bool required = true;  // informational verdicts never fail a run
};

// Checks G_input[S] with the certifiers that apply to the algorithm.
std::vector<CertificateVerdict> certify_solution(Algorithm a, const MultiGraph& input,
                                                 const std::vector<VertexId>& s);

struct LedgerSummary {
  std::size_t steps = 0;
  std::size_t negative_steps = 0;
  Rational min_charge;
  Rational total_charge;
  std::vector<LedgerEntry> entries;
};

struct RunReport {
  Algorithm algorithm = Algorithm::Pseudoforest;
  std::size_t n = 0, m = 0;
  std::vector<VertexId> s;  // sorted
  Rational bound_value;     // n - (num/den) m
  bool bound_satisfied = false;
  std::vector<CertificateVerdict> certificates;
  std::optional<LedgerSummary> ledger;
  double wall_ms = 0;

  // Bound and every required certificate hold.
  bool ok() const;
};

// The bound verdict is recomputed here from n, m and |S| of the input.
RunReport build_report(Algorithm a, const MultiGraph& input, const AlgorithmRun& run);

nlohmann::json to_json(const RunReport& r, bool with_ledger_entries = false);
nlohmann::json to_json(const std::vector<TraceStep>& trace);

}  // namespace planarize
