#include <doctest.h>

#include "corpus.hpp"
#include "planarize/certify.hpp"
#include "planarize/generators.hpp"
#include "planarize/oracle.hpp"
#include "planarize/treewidth2.hpp"

using namespace planarize;

TEST_SUITE("treewidth2") {

TEST_CASE("K5 keeps a triangle") {
  const auto g = generate(FamilySpec::complete(5));
  const auto sol = reduce_treewidth2(g);
  CHECK(sol.s.size() == 3);
  const auto h = induced_subgraph(g, sol.s);
  CHECK(h.num_edges() == 3);
  CHECK(h.is_d_regular(2));
  const auto replay = replay_trace_tw2(g, sol.trace);
  CHECK(replay.edge_events == 10);
  CHECK(replay.deletions == 2);
  CHECK(replay.total == 0);
}

TEST_CASE("C4 is kept whole") {
  const auto g = generate(FamilySpec::cycle(4));
  const auto sol = reduce_treewidth2(g);
  CHECK(sol.s.size() == 4);
  const auto replay = replay_trace_tw2(g, sol.trace);
  CHECK(replay.edge_events == 4);
  CHECK(replay.deletions == 0);
  CHECK(replay.total == 4);
}

TEST_CASE("Petersen graph") {
  const auto g = generate(FamilySpec::fixture("petersen"));
  const auto sol = reduce_treewidth2(g);
  CHECK(sol.s.size() >= 7);
  CHECK(is_partial_2_tree(induced_subgraph(g, sol.s)));
  // exhaustive optimum from the oracle: 8
  CHECK(max_induced(g, PropertyId::Treewidth2).size == 8);
  CHECK(sol.s.size() == 8);
}

TEST_CASE("tampered traces") {
  const auto g = generate(FamilySpec::complete(5));
  const auto sol = reduce_treewidth2(g);
  auto extra = sol.trace;
  TraceStep del;
  del.kind = StepKind::DeleteMaxDeg;
  del.deleted = {0};
  extra.insert(extra.begin(), del);
  CHECK_THROWS_AS(replay_trace_tw2(g, extra), TraceMismatch);
  auto miscount = sol.trace;
  miscount.back().removed_edges += 2;
  CHECK_THROWS_AS(replay_trace_tw2(g, miscount), TraceMismatch);
}

TEST_CASE("first step priorities") {
  const auto k6 = generate(FamilySpec::complete(6));
  CHECK(reduce_treewidth2(k6).trace.front().kind == StepKind::Preprocess);
  const auto path = generate(FamilySpec::path(4));
  const auto sol = reduce_treewidth2(path);
  CHECK(sol.trace.front().kind == StepKind::ContractDeg12);
  CHECK(sol.s.size() == 4);
  // the largest degree over all vertices next to a degree-3 vertex wins
  const auto k4 = reduce_treewidth2(generate(FamilySpec::complete(4)));
  CHECK(k4.trace.front().kind == StepKind::DeleteAdjDeg3);
  CHECK(k4.trace.front().deleted == std::vector<VertexId>{0});
  // 0 has degree 3; 1 (degree 4) and 2 (degree 3) both touch it
  MultiGraph g = MultiGraph::from_edge_list(std::vector<Edge>{
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  REQUIRE(g.degree(1) == 4);
  const auto mixed = reduce_treewidth2(g);
  CHECK(mixed.trace.front().kind == StepKind::DeleteAdjDeg3);
  CHECK(mixed.trace.front().deleted == std::vector<VertexId>{1});
}

TEST_CASE("empty and edgeless inputs") {
  CHECK(reduce_treewidth2(MultiGraph()).s.empty());
  CHECK(reduce_treewidth2(MultiGraph(5)).s.size() == 5);
}

TEST_CASE("disjoint K5 copies are tight") {
  for (std::size_t t : {1u, 4u, 25u}) {
    const auto g = generate(FamilySpec::disjoint_copies(FamilySpec::complete(5), t));
    const auto sol = reduce_treewidth2(g);
    CHECK(sol.s.size() == 3 * t);
    CHECK(is_partial_2_tree(induced_subgraph(g, sol.s)));
  }
}

TEST_CASE("bound, certificate and aggregate charge on random graphs") {
  for (const auto& g : corpus::bound_corpus(200)) {
    const auto sol = reduce_treewidth2(g);
    CHECK(5 * sol.s.size() + g.num_edges() >= 5 * g.num_vertices());
    CHECK(is_partial_2_tree(induced_subgraph(g, sol.s)));
    const auto replay = replay_trace_tw2(g, sol.trace);
    CHECK(replay.total >= 0);
  }
}

TEST_CASE("between the bound and the oracle on small graphs") {
  for (const auto& g : corpus::small_corpus(200)) {
    const auto sol = reduce_treewidth2(g);
    const auto best = max_induced(g, PropertyId::Treewidth2);
    CHECK(sol.s.size() <= best.size);
    CHECK(5 * sol.s.size() + g.num_edges() >= 5 * g.num_vertices());
    CHECK(oracle_has_property(induced_subgraph(g, sol.s), PropertyId::Treewidth2));
  }
}

}  // TEST_SUITE
