#include <doctest.h>

#include <algorithm>

#include "planarize/ledger.hpp"
#include "planarize/lp.hpp"

using namespace planarize;

namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }

Rational slack(const FeasibilityReport& r, const std::string& name) {
  for (const auto& s : r.slacks)
    if (s.name == name) return s.slack;
  FAIL("no constraint " << name);
  return 0;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("reference point is feasible and tight where expected") {
  const auto x = reference_point();
  CHECK(x.at("epsilon") == R(5, 23));
  CHECK(x.at("c3") == R(9, 46));
  CHECK(x.at("c4") == R(1, 23));
  CHECK(x.at("tau") == R(15, 23));
  const auto r = check_feasible(default_lp(), x);
  CHECK(r.feasible);
  const auto tight = r.tight();
  for (const char* name : {"three_regular", "degree5", "mixed_a", "four_regular"})
    CHECK(contains(tight, name));
  CHECK_FALSE(contains(tight, "planar"));
}

TEST_CASE("violations are reported by name") {
  const Assignment zero{{"epsilon", 0}, {"c3", 0}, {"c4", 0}, {"tau", 0}};
  const auto r = check_feasible(default_lp(), zero);
  CHECK_FALSE(r.feasible);
  CHECK(slack(r, "four_regular") == -1);

  auto x = reference_point();
  x["epsilon"] += R(1, 1000);
  const auto bumped = check_feasible(default_lp(), x);
  CHECK_FALSE(bumped.feasible);
  CHECK(slack(bumped, "three_regular") < 0);

  CHECK_THROWS_AS(check_feasible(default_lp(), Assignment{{"epsilon", 0}}), MissingVariable);
}

TEST_CASE("solve the credit LP") {
  const auto sol = solve(default_lp());
  CHECK(sol.optimum == R(5, 23));
  CHECK(sol.assignment == reference_point());
  CHECK(sol.feasible_bases > 0);
  CHECK(sol.bases_examined >= sol.feasible_bases);
  CHECK_NOTHROW(validate_params(ChargeParams::reference()));
}

TEST_CASE("the optimum is the best basic feasible solution") {
  const auto lp = default_lp();
  const auto corners = basic_feasible_solutions(lp);
  REQUIRE_FALSE(corners.empty());
  Rational best = corners.front().at("epsilon");
  for (const auto& x : corners) {
    CHECK(check_feasible(lp, x).feasible);
    best = std::max(best, x.at("epsilon"));
  }
  CHECK(best == R(5, 23));
}

TEST_CASE("without the 4-regular constraint") {
  const auto sol = solve(drop_constraint(default_lp(), "four_regular"));
  CHECK(sol.optimum == R(5, 23));
  CHECK(sol.assignment.at("tau") == 0);
  CHECK_THROWS_AS(drop_constraint(default_lp(), "nope"), InvalidSpec);
}

TEST_CASE("small hand-made programs") {
  RationalLp lp;
  lp.variables = {"x"};
  lp.constraints = {{"cap", {R(1)}, Relation::Le, R(1)}};
  CHECK(solve(lp).optimum == 1);

  RationalLp open = lp;
  open.constraints = {{"floor", {R(1)}, Relation::Ge, R(0)}};
  CHECK_THROWS_AS(solve(open), Unbounded);

  RationalLp empty = lp;
  empty.constraints = {{"lo", {R(1)}, Relation::Ge, R(2)}, {"hi", {R(1)}, Relation::Le, R(1)}};
  CHECK_THROWS_AS(solve(empty), Infeasible);

  RationalLp two;
  two.variables = {"x", "y"};
  two.constraints = {{"a", {R(1), R(2)}, Relation::Le, R(4)},
                     {"b", {R(3), R(1)}, Relation::Le, R(6)},
                     {"y", {R(0), R(1)}, Relation::Ge, R(0)}};
  const auto s = solve(two);
  CHECK(s.optimum == 2);
  CHECK(s.assignment.at("y") == 0);
}

TEST_CASE("credit limits decrease") {
  const auto p = ChargeParams::reference();
  CHECK(p.delta(2) >= p.delta(3));
  CHECK(p.delta(3) >= p.delta(4));
  CHECK(p.cap(2) > p.cap(3));
  CHECK(p.cap(3) > p.cap(4));
  CHECK(p.cap(4) > p.cap(5));
}

TEST_CASE("rationals round-trip") {
  for (const char* text : {"5/23", "-7/3", "0/1", "12/1", "9/46"})
    CHECK(format_rational(parse_rational(text)) == text);
  CHECK(parse_rational("10/4") == R(5, 2));
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(parse_rational_list("1/2,3") == std::vector<Rational>{R(1, 2), R(3)});
}

}  // TEST_SUITE
