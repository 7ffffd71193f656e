#include <doctest.h>

#include "corpus.hpp"
#include "planarize/certify.hpp"
#include "planarize/generators.hpp"
#include "planarize/lp.hpp"
#include "planarize/oracle.hpp"
#include "planarize/planar.hpp"

using namespace planarize;

namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }

std::vector<StepKind> kinds(const ReductionSolution& s) {
  std::vector<StepKind> out;
  for (const auto& t : s.trace) out.push_back(t.kind);
  return out;
}

void check_run(const MultiGraph& g, const PlanarResult& r) {
  const auto& sol = r.solution;
  CHECK(120 * sol.s.size() + 23 * g.num_edges() >= 120 * g.num_vertices());
  const auto h = induced_subgraph(g, sol.s);
  CHECK(is_planar(h));
  CHECK(reduces_to_k4_or_empty(h));
  CHECK(r.ledger.negative_steps == 0);
  CHECK(r.ledger.tau_outstanding == 0);
  for (const auto& e : r.ledger.entries) CHECK(e.charge >= 0);
  CHECK(replay_trace(g, sol.trace).s == sol.s);
}

}  // namespace

TEST_SUITE("planar") {

TEST_CASE("K4 is accepted whole") {
  const auto g = generate(FamilySpec::complete(4));
  const auto r = reduce_planar(g);
  CHECK(r.solution.s == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(kinds(r.solution) == std::vector<StepKind>{StepKind::PlanarAccept});
  check_run(g, r);
}

TEST_CASE("K3,3 becomes K2,3") {
  const auto g = generate(FamilySpec::fixture("k33"));
  const auto r = reduce_planar(g);
  CHECK(r.solution.s.size() == 5);
  CHECK(corpus::is_k23(induced_subgraph(g, r.solution.s)));
  CHECK(kinds(r.solution) ==
        std::vector<StepKind>{StepKind::CubicComponent, StepKind::DegreeTwo,
                              StepKind::DegreeTwo, StepKind::DegreeTwo, StepKind::PlanarAccept});
  // delete a pristine cubic vertex: 3 - (5 + 5/23) + 3 * (1 - 0)
  CHECK(r.ledger.entries[0].charge == R(18, 23));
  check_run(g, r);
}

TEST_CASE("K6 walk-through") {
  const auto g = generate(FamilySpec::complete(6));
  const auto r = reduce_planar(g);
  CHECK(r.solution.s.size() == 4);
  CHECK(kinds(r.solution) == std::vector<StepKind>{StepKind::DegreeFive,
                                                   StepKind::QuarticComponent,
                                                   StepKind::PlanarAccept});
  // degree 5: -eps + 5 c4; 4-regular at the extremal debts: zero
  CHECK(r.ledger.entries[0].charge == 0);
  CHECK(r.ledger.entries[1].charge == 0);
  check_run(g, r);
}

TEST_CASE("pristine 4-regular deletion") {
  const auto r = reduce_planar(generate(FamilySpec::complete(5)));
  // -1 - eps + 4 c3 + tau with no prior debts
  CHECK(r.ledger.entries[0].charge == R(-1) - R(5, 23) + 4 * R(9, 46) + R(15, 23));
}

TEST_CASE("ledger_step arithmetic") {
  const ChargeParams p = ChargeParams::reference();
  LedgerState ledger(p, 8);

  StepEvents contract;
  contract.kind = StepKind::DegreeTwo;
  contract.edge_units = 1;
  contract.leaving = {0};
  CHECK(ledger_step(ledger, contract) == 1);

  StepEvents quartic;
  quartic.kind = StepKind::QuarticComponent;
  quartic.edge_units = 4;
  quartic.deleted = 1;
  quartic.leaving = {1};
  for (VertexId v : {2u, 3u, 4u, 5u}) {
    ledger.debt[v] = p.c4;
    quartic.drops.push_back({v, 4, 3});
  }
  ledger.debt[1] = p.c4;
  quartic.tau_issued = 1;
  const Rational expected = -p.epsilon - 1 + p.tau + 4 * p.delta(3) - p.c4;
  CHECK(expected == 0);
  CHECK(ledger_step(ledger, quartic) == expected);
  CHECK(ledger.tau_outstanding == 1);
  CHECK(ledger.debt[2] == p.c3);

  StepEvents bad;
  bad.kind = StepKind::CubicComponent;
  bad.deleted = 1;
  bad.leaving = {6};
  CHECK_THROWS_AS(ledger_step(ledger, bad), NegativeCharge);
  ledger.strict = false;
  CHECK(ledger_step(ledger, bad) < 0);
  CHECK(ledger.negative_steps == 2);
}

TEST_CASE("credit limits") {
  const ChargeParams p = ChargeParams::reference();
  CHECK(p.cap(0) == 0);
  CHECK(p.cap(1) == R(1, 2));
  CHECK(p.cap(2) == 1);
  CHECK(p.cap(3) == R(9, 46));
  CHECK(p.cap(4) == R(1, 23));
  CHECK(p.cap(5) == 0);
  CHECK(p.cap(9) == 0);
  CHECK(p.delta(2) == R(37, 46));
}

TEST_CASE("a drop to degree 1 pays the excess debt") {
  LedgerState ledger(ChargeParams::reference(), 3);
  ledger.debt[1] = 1;
  StepEvents ev;
  ev.kind = StepKind::DegreeTwo;
  ev.edge_units = 1;
  ev.leaving = {0};
  ev.drops = {{1, 2, 1}};
  CHECK(ledger_step(ledger, ev) == R(1, 2));
  CHECK(ledger.debt[1] == R(1, 2));
}

TEST_CASE("tree components end with non-negative charges") {
  // a spider whose last edge joins two indebted vertices
  const auto g = MultiGraph::from_edge_list(
      std::vector<Edge>{{0, 5}, {1, 5}, {2, 4}, {3, 4}, {4, 5}});
  check_run(g, reduce_planar(g));
}

TEST_CASE("high-degree preprocessing") {
  // every vertex of K7 has degree 6; one deletion leaves K6 (degree 5)
  auto k7 = generate(FamilySpec::complete(7));
  CHECK(preprocess_high_degree(k7) == 1);
  CHECK(k7.max_degree() == 5);

  auto low = random_regular(20, 5, 2);
  CHECK(preprocess_high_degree(low) == 0);

  auto star = generate(FamilySpec::complete_bipartite(1, 10));
  CHECK(preprocess_high_degree(star) == 1);
  CHECK(star.num_vertices() == 10);
  CHECK(star.num_edges() == 0);

  const auto r = reduce_planar(generate(FamilySpec::complete(7)));
  CHECK(r.solution.trace.front().kind == StepKind::Preprocess);
  CHECK(r.ledger.entries.front().charge == R(6) - 5 - R(5, 23));
}

TEST_CASE("parameters outside the LP are rejected") {
  ChargeParams greedy = ChargeParams::reference();
  greedy.epsilon = 1;
  PlanarOptions opts;
  opts.params = greedy;
  CHECK_THROWS_AS(reduce_planar(generate(FamilySpec::complete(4)), opts), InfeasibleParams);
  CHECK_THROWS_AS(parse_params("1/2,1"), ParseError);
  const auto p = parse_params("5/23,9/46,1/23,15/23");
  CHECK(p.tau == R(15, 23));
  CHECK_NOTHROW(validate_params(p));
}

TEST_CASE("ledger stays non-negative and within limits on random graphs") {
  for (const auto& g : corpus::bound_corpus(250)) check_run(g, reduce_planar(g));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_regular(40, 4, seed);
    check_run(g, reduce_planar(g));
  }
}

TEST_CASE("other feasible parameter points") {
  const auto corners = basic_feasible_solutions(default_lp());
  std::size_t used = 0;
  for (const auto& x : corners) {
    ChargeParams p;
    p.epsilon = x.at("epsilon");
    p.c3 = x.at("c3");
    p.c4 = x.at("c4");
    p.tau = x.at("tau");
    bool on_box = false;  // corners of the solver's auxiliary bounding box
    for (const auto& [name, v] : x) on_box = on_box || abs(v) >= 1000;
    if (on_box) continue;
    ++used;
    PlanarOptions opts;
    opts.params = p;
    for (const auto& g : corpus::bound_corpus(40)) check_run(g, reduce_planar(g, opts));
  }
  CHECK(used > 0);
}

TEST_CASE("between the bound and the oracle on small graphs") {
  for (const auto& g : corpus::small_corpus(120)) {
    const auto r = reduce_planar(g);
    const auto best = max_induced(g, PropertyId::Planar);
    CHECK(r.solution.s.size() <= best.size);
    CHECK(oracle_has_property(induced_subgraph(g, r.solution.s), PropertyId::Planar));
  }
}

}  // TEST_SUITE
