#include <random>

#include "catch_amalgamated.hpp"

#include "test_support.hpp"

using namespace kcore;

TEST_CASE("gamma graphs of the small fixtures") {
  auto g = gamma_graph(test::fixture_m().core());
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 2);
  for (auto const& n : g.nodes) {
    CHECK_FALSE(n.nontrivial_vertex_group);
  }

  g = gamma_graph(test::fixture_v().core());
  REQUIRE(g.nodes.size() == 3);
  CHECK(g.edges.size() == 2);
  CHECK(g.nodes[0].tag == FactorTag::A);
  CHECK(g.nodes[0].nontrivial_vertex_group);
  CHECK(g.nodes[1].tag == FactorTag::A);
  CHECK(g.nodes[1].nontrivial_vertex_group);
  CHECK(g.nodes[2].tag == FactorTag::B);
  CHECK_FALSE(g.nodes[2].nontrivial_vertex_group);

  auto const fp = test::z2z3();
  g = gamma_graph(build_core(fp, test::words(fp, "a1; b1")));
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.nodes[0].nontrivial_vertex_group);
  CHECK(g.nodes[1].nontrivial_vertex_group);
}

TEST_CASE("Kurosh rank of the small fixtures") {
  auto k = kurosh_rank(test::fixture_dinf().core());
  CHECK(k.krank == 1);
  CHECK(k.graph_rank == 1);
  CHECK(k.vertex_groups.empty());

  k = kurosh_rank(test::fixture_m().core());
  CHECK(k.krank == 1);
  CHECK(k.graph_rank == 1);

  k = kurosh_rank(test::fixture_v().core());
  CHECK(k.krank == 2);
  CHECK(k.graph_rank == 0);
  REQUIRE(k.vertex_groups.size() == 2);
  for (auto const& s : k.vertex_groups) {
    CHECK(s.parent == FactorTag::A);
    CHECK(s.size() == 2);
  }
  CHECK(to_string(k)
        == "krank=2; graph_rank=0; vertex_groups=[A:order2, A:order2]");

  auto const fp = test::z2z3();
  k = kurosh_rank(build_core(fp, test::words(fp, "a1 a1")));
  CHECK(k.krank == 0);
}

TEST_CASE("finite-index ranks agree with the coset table and Euler characteristic") {
  for (auto const& f : test::finite_index_fixtures()) {
    CAPTURE(f.name);
    auto const c     = f.core();
    auto const slice = full_cover_bfs(*f.fp, test::words(f.fp, f.gens), 500);
    REQUIRE(slice.complete);
    auto const k = kurosh_rank(c);
    CHECK(k.krank == test::krank_from_coset_table(*f.fp, slice));
    CHECK(test::euler_characteristic_holds(*f.fp, k, slice.index));
  }
}

TEST_CASE("Kurosh rank properties on random subgroups") {
  std::mt19937_64 rng(99);
  auto const      pairs = test::group_pairs();
  for (int i = 0; i < 1000; ++i) {
    auto const& fp   = pairs[i % pairs.size()];
    auto const  gens = test::random_gens(*fp, rng);
    auto const  c    = build_core(fp, gens);
    auto const  k    = kurosh_rank(c);
    CAPTURE(i);
    CHECK(k.krank == k.graph_rank + k.vertex_groups.size());
    CHECK(gamma_graph(c).edges.size() == c.vertex_count());

    // at most one free factor per generator
    CHECK(k.krank <= gens.size());

    // a cyclic subgroup has Kurosh rank 1
    CHECK(kurosh_rank(build_core(fp, {gens[0]})).krank == 1);

    // conjugation invariance
    vertex_type const v = uniform_below(rng, c.vertex_count());
    CHECK(kurosh_rank(rebase(c, v)).krank == k.krank);

    if (auto const n = index(c)) {
      CHECK(test::euler_characteristic_holds(*fp, k, *n));
      auto const slice = full_cover_bfs(*fp, gens, 4 * *n + 64);
      REQUIRE(slice.complete);
      CHECK(slice.index == *n);
      CHECK(k.krank == test::krank_from_coset_table(*fp, slice));
    }
  }
}
