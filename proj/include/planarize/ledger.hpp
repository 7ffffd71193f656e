#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "planarize/graph.hpp"
#include "planarize/rational.hpp"
#include "planarize/solution.hpp"

namespace planarize {

// Credit limits c_d and the per-step slack epsilon. c2 is fixed at 1,
// c_d = 0 above degree 4, c1 = c2 / 2 and c0 = 0. The reduced limit below
// degree 2 keeps a single-edge component able to pay both endpoint debts.
struct ChargeParams {
  Rational epsilon;
  Rational c2 = 1;
  Rational c3;
  Rational c4;
  Rational tau;

  static ChargeParams reference();  // 5/23, 1, 9/46, 1/23, 15/23
  Rational cap(std::uint32_t degree) const;
  Rational delta(std::uint32_t d) const { return cap(d) - cap(d + 1); }
};

// Throws InfeasibleParams unless c2 = 1 and every LP constraint holds.
void validate_params(const ChargeParams& p);
// "e,c3,c4,tau" in p/q notation.
ChargeParams parse_params(std::string_view text);

struct DegreeDrop {
  VertexId v;
  std::uint32_t from;
  std::uint32_t to;
};

// What one reduction step did, in the terms the charge rule needs.
struct StepEvents {
  StepKind kind = StepKind::Preprocess;
  std::size_t edge_units = 0;       // removed, contracted, deleted with vertices
  std::size_t deleted = 0;          // vertices deleted (not joining S)
  std::vector<VertexId> leaving;    // every vertex leaving the working graph
  std::vector<DegreeDrop> drops;    // surviving vertices whose degree fell
  std::size_t tau_issued = 0;
  std::size_t tau_cleared = 0;
  bool issue_debts = true;          // off during high-degree preprocessing
};

struct LedgerEntry {
  std::size_t step = 0;
  StepKind kind = StepKind::Preprocess;
  Rational charge;
};

struct LedgerState {
  ChargeParams params;
  std::vector<Rational> debt;  // by vertex id
  std::size_t tau_outstanding = 0;
  std::vector<LedgerEntry> entries;
  bool strict = true;  // throw NegativeCharge on the first negative step
  std::size_t negative_steps = 0;

  LedgerState() = default;
  LedgerState(ChargeParams p, std::size_t id_bound);
};

// charge = edges - (5 + eps) * deleted - debts of leaving vertices
//        + debt raised to the cap on every drop to degree 2, 3 or 4
//        - debt above the cap after a drop to degree 1
//        + tau * (issued - cleared)
// Applies the debt changes, appends an entry and returns the charge.
Rational ledger_step(LedgerState& ledger, const StepEvents& ev);

}  // namespace planarize
