#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "planarize/errors.hpp"
#include "planarize/rational.hpp"

namespace planarize {

enum class Relation { Le, Ge };

struct LpConstraint {
  std::string name;
  std::vector<Rational> coeffs;  // one per variable
  Relation rel = Relation::Le;
  Rational rhs;
};

// Maximise variables[objective] subject to the constraints.
struct RationalLp {
  std::vector<std::string> variables;
  std::size_t objective = 0;
  std::vector<LpConstraint> constraints;
};

using Assignment = std::map<std::string, Rational>;

// The credit-scheme LP: variables epsilon, c3, c4, tau; maximise epsilon.
// Constraint names: delta2_ge_delta3, delta3_ge_delta4, c4_nonneg,
// tau_nonneg, planar, three_regular, degree5, mixed_a, mixed_b, four_regular.
RationalLp default_lp();

// The optimum the case analysis is built around.
Assignment reference_point();

// Copy without the named constraint; throws InvalidSpec if absent.
RationalLp drop_constraint(const RationalLp& lp, const std::string& name);

struct SlackEntry {
  std::string name;
  Rational slack;  // >= 0 iff satisfied; 0 means tight
};

struct FeasibilityReport {
  std::vector<SlackEntry> slacks;
  bool feasible = true;
  std::vector<std::string> tight() const;
};

// Throws MissingVariable if a variable has no value.
FeasibilityReport check_feasible(const RationalLp& lp, const Assignment& x);

struct LpSolution {
  Rational optimum;
  Assignment assignment;
  std::size_t bases_examined = 0;
  std::size_t feasible_bases = 0;
};

// Exact optimum by enumerating every basis (square subsystem of tight
// constraints) and keeping the best feasible point. Ties prefer points off
// the auxiliary bounding box, then the lexicographically smallest values in
// variable order. Throws Infeasible or Unbounded.
LpSolution solve(const RationalLp& lp);

// Every feasible basic solution of lp (within the auxiliary box), for the
// exhaustion check in tests.
std::vector<Assignment> basic_feasible_solutions(const RationalLp& lp);

}  // namespace planarize
