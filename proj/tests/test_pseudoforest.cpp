#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "planarize/certify.hpp"
#include "planarize/generators.hpp"
#include "planarize/oracle.hpp"
#include "planarize/pseudoforest.hpp"

using namespace planarize;

namespace {

MultiGraph two_k4_matched() {
  MultiGraph g(8);
  for (VertexId base : {0u, 4u})
    for (VertexId i = 0; i < 4; ++i)
      for (VertexId j = i + 1; j < 4; ++j) g.add_edge(base + i, base + j);
  for (VertexId i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

// Five tetrahedra, every pair joined by one edge between distinct ports.
MultiGraph tetrahedra_ring() {
  MultiGraph g(20);
  for (VertexId t = 0; t < 5; ++t)
    for (VertexId i = 0; i < 4; ++i)
      for (VertexId j = i + 1; j < 4; ++j) g.add_edge(4 * t + i, 4 * t + j);
  auto port = [](VertexId i, VertexId j) { return j < i ? j : j - 1; };
  for (VertexId i = 0; i < 5; ++i)
    for (VertexId j = i + 1; j < 5; ++j) g.add_edge(4 * i + port(i, j), 4 * j + port(j, i));
  return g;
}

void check_solution(const MultiGraph& g, const ReductionSolution& sol) {
  CHECK(9 * sol.s.size() + 2 * g.num_edges() >= 9 * g.num_vertices());
  CHECK(sol.bound_holds());
  CHECK(is_pseudoforest(induced_subgraph(g, sol.s)));
  const ReplayTotals totals = replay_trace(g, sol.trace);
  CHECK(totals.s == sol.s);
  CHECK(2 * totals.edge_units >= 9 * totals.deletions);
  CHECK(totals.deletions + sol.s.size() == g.num_vertices());
}

}  // namespace

TEST_SUITE("pseudoforest") {

TEST_CASE("single K3,3 keeps four vertices") {
  const auto g = generate(FamilySpec::fixture("k33"));
  CHECK(first_applicable_case(g)->label == StepKind::ThreeRegular);
  const auto sol = reduce_pseudoforest(g);
  CHECK(sol.s.size() == 4);
  check_solution(g, sol);
}

TEST_CASE("isolated triangle is taken whole") {
  const auto g = generate(FamilySpec::cycle(3));
  const auto d = first_applicable_case(g);
  REQUIRE(d);
  CHECK(d->label == StepKind::DeltaA);
  CHECK(d->s_added == std::vector<VertexId>{0, 1, 2});
  CHECK(d->removed.size() == 3);
  const auto sol = reduce_pseudoforest(g);
  CHECK(sol.s == std::vector<VertexId>{0, 1, 2});
  REQUIRE(sol.trace.size() == 1);
  CHECK(sol.trace[0].removed_edges == 3);
}

TEST_CASE("edgeless graph") {
  const MultiGraph g(7);
  CHECK_FALSE(first_applicable_case(g).has_value());
  const auto sol = reduce_pseudoforest(g);
  CHECK(sol.s.size() == 7);
}

TEST_CASE("K5 leaves a triangle") {
  const auto g = generate(FamilySpec::complete(5));
  // degree 4 everywhere, so preprocessing does not fire
  CHECK(first_applicable_case(g)->label == StepKind::FourRegC1);
  const auto sol = reduce_pseudoforest(g);
  CHECK(sol.s.size() == 3);
  CHECK(sol.trace.back().kind == StepKind::DeltaA);
  check_solution(g, sol);
}

TEST_CASE("path starts with a leaf") {
  const auto d = first_applicable_case(generate(FamilySpec::path(5)));
  REQUIRE(d);
  CHECK(d->label == StepKind::Leaf);
  CHECK(d->anchor == 0);
}

TEST_CASE("tetrahedra joined by two or more edges") {
  const auto g = two_k4_matched();
  CHECK(g.is_d_regular(4));
  const auto d = first_applicable_case(g);
  REQUIRE(d);
  CHECK(d->label == StepKind::FourRegC3);
  CHECK(d->deleted.size() == 2);
  check_solution(g, reduce_pseudoforest(g));
}

TEST_CASE("cycle of tetrahedra joined by single edges") {
  const auto g = tetrahedra_ring();
  CHECK(g.is_d_regular(4));
  const auto d = first_applicable_case(g);
  REQUIRE(d);
  CHECK(d->label == StepKind::FourRegC4);
  REQUIRE(d->deleted.size() == 2);
  // both deleted vertices come from one tetrahedron
  CHECK(d->deleted[0] / 4 == d->deleted[1] / 4);
  check_solution(g, reduce_pseudoforest(g));
}

TEST_CASE("triangle-free 4-regular neighbourhood deletes a non-adjacent pair") {
  const auto g = generate(FamilySpec::complete_bipartite(4, 4));
  const auto d = first_applicable_case(g);
  REQUIRE(d);
  CHECK(d->label == StepKind::FourRegA);
  REQUIRE(d->deleted.size() == 2);
  CHECK(g.adjacent(d->anchor, d->deleted[0]));
  CHECK(g.adjacent(d->anchor, d->deleted[1]));
  CHECK_FALSE(g.adjacent(d->deleted[0], d->deleted[1]));
  // the anchor is left with degree 2 and no triangle
  MultiGraph h = g;
  ReductionSolution sol;
  apply_case(h, *d, sol);
  CHECK(first_applicable_case(h)->label == StepKind::Deg2NoTriangle);
}

TEST_CASE("preprocessing removes degree five and above") {
  const auto g = generate(FamilySpec::complete_bipartite(1, 6));
  const auto d = first_applicable_case(g);
  CHECK(d->label == StepKind::Preprocess);
  CHECK(d->deleted == std::vector<VertexId>{0});
  CHECK(reduce_pseudoforest(g).s.size() == 6);
}

TEST_CASE("stale descriptors are rejected") {
  MultiGraph g = generate(FamilySpec::fixture("k33"));
  const auto d = first_applicable_case(g);
  g.delete_vertex(5);
  ReductionSolution sol;
  CHECK_THROWS_AS(apply_case(g, *d, sol), StaleDescriptor);
}

TEST_CASE("disjoint K3,3 copies are tight") {
  for (std::size_t t : {1u, 3u, 17u}) {
    const auto g = generate(FamilySpec::disjoint_copies(FamilySpec::fixture("k33"), t));
    const auto sol = reduce_pseudoforest(g);
    CHECK(sol.s.size() == 4 * t);
    CHECK(9 * sol.s.size() == 9 * g.num_vertices() - 2 * g.num_edges());
  }
}

TEST_CASE("incremental dispatcher reproduces the full-scan reference") {
  std::vector<MultiGraph> graphs = corpus::bound_corpus(150);
  graphs.push_back(two_k4_matched());
  graphs.push_back(tetrahedra_ring());
  graphs.push_back(generate(FamilySpec::disjoint_copies(FamilySpec::complete(5), 3)));
  for (std::uint64_t seed = 0; seed < 40; ++seed) graphs.push_back(random_regular(24, 4, seed));
  for (const auto& g : graphs) {
    const auto fast = reduce_pseudoforest(g);
    const auto ref = reduce_pseudoforest_reference(g);
    CHECK(fast.s == ref.s);
    CHECK(fast.trace == ref.trace);
  }
}

TEST_CASE("bound, certificate and replay on random graphs") {
  std::set<StepKind> seen;
  for (const auto& g : corpus::bound_corpus(200)) {
    const auto sol = reduce_pseudoforest(g);
    check_solution(g, sol);
    for (const auto& s : sol.trace) seen.insert(s.kind);
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_regular(30, 4, seed);
    const auto sol = reduce_pseudoforest(g);
    check_solution(g, sol);
    for (const auto& s : sol.trace) seen.insert(s.kind);
  }
  for (StepKind k : {StepKind::Leaf, StepKind::Deg2NoTriangle, StepKind::DeltaA,
                     StepKind::ThreeRegular, StepKind::FourRegA})
    CHECK(seen.count(k) == 1);
}

TEST_CASE("same input gives the same trace") {
  const auto g = random_regular(40, 3, 11);
  CHECK(reduce_pseudoforest(g).trace == reduce_pseudoforest(g).trace);
}

TEST_CASE("tampered traces do not replay") {
  const auto g = generate(FamilySpec::fixture("petersen"));
  auto sol = reduce_pseudoforest(g);
  auto trace = sol.trace;
  trace[0].removed_edges += 1;
  CHECK_THROWS_AS(replay_trace(g, trace), TraceMismatch);
  trace = sol.trace;
  trace.pop_back();
  CHECK_THROWS_AS(replay_trace(g, trace), TraceMismatch);
}

TEST_CASE("between the bound and the oracle on small graphs") {
  for (const auto& g : corpus::small_corpus(120)) {
    const auto sol = reduce_pseudoforest(g);
    const auto best = max_induced(g, PropertyId::Pseudoforest);
    CHECK(sol.s.size() <= best.size);
    CHECK(9 * best.size + 2 * g.num_edges() >= 9 * g.num_vertices());
    CHECK(oracle_has_property(induced_subgraph(g, sol.s), PropertyId::Pseudoforest));
  }
}

}  // TEST_SUITE
