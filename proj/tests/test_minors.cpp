#include <doctest.h>

#include "corpus.hpp"
#include "planarize/generators.hpp"
#include "planarize/minors.hpp"

using namespace planarize;

namespace {

void check_identities(const MultiGraph& g, const MinorResult& r) {
  CHECK(r.n == g.num_vertices());
  CHECK(r.m == g.num_edges());
  CHECK(r.n_prime == r.kept.size());
  CHECK(r.minor.vertices() == r.kept);
  CHECK(r.minor.is_simple());
  CHECK(r.m_prime + r.n == r.m + r.n_prime);
  CHECK(r.offset_a < r.ell);
  CHECK(r.ell == (r.girth - 3) / 4);
  const auto d = verify_minor_density(r);
  CHECK(d.surplus == static_cast<long long>(g.num_edges()) -
                         static_cast<long long>(g.num_vertices()));
  CHECK(d.within_level_bound);
  // every edge outside the breadth-first tree survives between representatives
  for (const auto& e : g.edges()) {
    if (r.parent[e.u] == e.v || r.parent[e.v] == e.u) continue;
    CHECK(r.minor.adjacent(r.representative[e.u], r.representative[e.v]));
  }
}

}  // namespace

TEST_SUITE("minors") {

TEST_CASE("long cycles") {
  const auto c19 = generate(FamilySpec::cycle(19));
  const auto r = level_contract(c19);
  CHECK(r.girth == 19);
  CHECK(r.ell == 4);
  CHECK(r.offset_a == 0);
  CHECK(r.n_prime == 5);
  CHECK(r.m_prime == 5);
  check_identities(c19, r);

  const auto r31 = level_contract(generate(FamilySpec::cycle(31)));
  CHECK(r31.ell == 7);
  CHECK(r31.n_prime == 5);
  const auto r101 = level_contract(generate(FamilySpec::cycle(101)));
  CHECK(r101.ell == 24);
  CHECK(r101.n_prime == 5);
}

TEST_CASE("cages") {
  const auto tc = generate(FamilySpec::fixture("tutte-coxeter"));
  const auto r = level_contract(tc);
  CHECK(r.girth == 8);
  CHECK(r.ell == 1);
  CHECK(r.n_prime == 30);
  CHECK(verify_minor_density(r).surplus == 15);
  check_identities(tc, r);

  const auto mc = generate(FamilySpec::fixture("mcgee"));
  const auto rm = level_contract(mc);
  CHECK(rm.n_prime == 24);
  const auto d = verify_minor_density(rm);
  CHECK(d.within_level_bound);
  CHECK_FALSE(d.within_girth_bound);  // 24 > ceil(5 * 24 / 7) + 1
  check_identities(mc, rm);
}

TEST_CASE("every root gives a valid minor") {
  const auto c = generate(FamilySpec::cycle(23));
  for (VertexId root = 0; root < 23; ++root) {
    const auto r = level_contract(c, root);
    CHECK(r.root == root);
    CHECK(r.parent[root] == root);
    check_identities(c, r);
  }
}

TEST_CASE("subdivided cubic graphs") {
  for (const auto& g : corpus::high_girth_corpus(30)) check_identities(g, level_contract(g));
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS_AS(level_contract(generate(FamilySpec::fixture("petersen"))), InsufficientGirth);
  CHECK_THROWS_AS(level_contract(generate(FamilySpec::path(9))), InsufficientGirth);
  CHECK_THROWS_AS(level_contract(disjoint_union(generate(FamilySpec::cycle(9)), 2)),
                  Disconnected);
  CHECK_THROWS_AS(level_contract(MultiGraph{}), Disconnected);
  CHECK_THROWS_AS(level_contract(generate(FamilySpec::cycle(9)), VertexId{40}), UnknownVertex);
}

}  // TEST_SUITE
