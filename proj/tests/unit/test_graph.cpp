#include <doctest.h>

#include <algorithm>

#include "bipmc/graph.hpp"
#include "bipmc/isomorphism.hpp"
#include "bipmc/tree.hpp"
#include "support.hpp"

using namespace bipmc;
using namespace bipmc::testing;

TEST_SUITE("core") {
  TEST_CASE("build") {
    const BipGraph c4 = build(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(c4.n() == 4);
    CHECK(c4.m() == 4);
    CHECK(are_isomorphic(c4, cycle(2)));
    const BipGraph k13 = build(1, 3, {{0, 0}, {0, 1}, {0, 2}});
    CHECK(k13.degree(vertex_a(0)) == 3);
    CHECK(k13.max_degree() == 3);
    CHECK(k13.min_degree() == 1);
    try {
      build(2, 2, {{0, 5}});
      FAIL("expected InvalidEdge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidEdge);
    }
  }

  TEST_CASE("parallel edges") {
    const BipGraph g = build(1, 1, {{0, 0}, {0, 0}});
    CHECK(g.m() == 2);
    CHECK_FALSE(g.is_simple());
    CHECK(g.degree(vertex_a(0)) == 2);
  }

  TEST_CASE("remove") {
    const BipGraph c4 = cycle(2);
    const Removal r1 = remove(c4, {vertex_a(0)}, {});
    CHECK(r1.graph.n() == 3);
    CHECK(r1.graph.m() == 2);
    CHECK(is_connected(r1.graph));
    const Removal r2 = remove(c4, {}, {0});
    CHECK(r2.graph.n() == 4);
    CHECK(r2.graph.m() == 3);
    CHECK(is_connected(r2.graph));
    CHECK(r2.graph.max_degree() == 2);
    const Removal r3 = remove(build(1, 3, {{0, 0}, {0, 1}, {0, 2}}), {vertex_a(0)}, {});
    CHECK(r3.graph.n() == 3);
    CHECK(r3.graph.m() == 0);
    CHECK(component_count(r3.graph) == 3);
  }

  TEST_CASE("removal maps are bijections onto survivors") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
      const BipGraph g = random_bipartite(rng, 5, 6, 0.5);
      std::vector<Vertex> del = {vertex_a(it % 5), vertex_b(it % 6)};
      const Removal r = remove(g, del, {});
      check_handshake(r.graph);
      CHECK(r.graph.n() == g.n() - 2);
      for (int f = 0; f < r.graph.n(); ++f) {
        const Vertex old = r.to_parent[f];
        REQUIRE(r.vertex_map[g.flat(old)].has_value());
        CHECK(*r.vertex_map[g.flat(old)] == r.graph.vertex(f));
      }
      for (EdgeId e = 0; e < r.graph.m(); ++e) {
        const EdgeId old = r.edge_to_parent[e];
        CHECK(r.edge_map[old] == e);
        CHECK(g.edge(old).a == r.to_parent[r.graph.flat(r.graph.end(e, Side::A))].index);
      }
    }
  }

  TEST_CASE("components") {
    CHECK(components(cycle(2)).size() == 1);
    CHECK(components(build(2, 2, {{0, 0}, {1, 1}})).size() == 2);
    CHECK(components(build(0, 0, {})).empty());
    CHECK(is_connected(cycle(3)));
    CHECK(is_two_connected(cycle(3)));
    CHECK_FALSE(is_two_connected(path4()));
  }

  TEST_CASE("boundary") {
    const BipGraph c4 = cycle(2);
    const EdgeCut t = boundary(c4, {vertex_a(0)});
    CHECK(t.size() == 2);
    CHECK(t.trivial);
    CHECK(t.a_side_count == 2);
    CHECK_FALSE(t.balanced());
    const EdgeCut nt = boundary(c4, {vertex_a(0), vertex_b(0)});
    CHECK(nt.size() == 2);
    CHECK_FALSE(nt.trivial);
    CHECK(nt.balanced());
    const BipGraph c6 = cycle(3);
    const EdgeCut c = boundary(c6, {vertex_a(1), vertex_b(1)});
    CHECK(c.size() == 2);
    CHECK(c.balanced());
  }

  TEST_CASE("boundary is symmetric in the shore") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
      const BipGraph g = random_bipartite(rng, 4, 5, 0.6);
      std::vector<Vertex> shore;
      for (Vertex v : g.vertices())
        if (rng() % 2) shore.push_back(v);
      auto x = boundary(g, shore).edge_ids;
      auto y = boundary(g, complement(g, shore)).edge_ids;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      CHECK(x == y);
    }
  }
}

TEST_SUITE("tree") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(Tree(3, {{0, 1}}), Error);
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 0}}), Error);
    CHECK_NOTHROW(Tree(1, {}));
  }

  TEST_CASE("named trees") {
    const Tree s = Tree::star(4);
    CHECK(s.size() == 5);
    CHECK(s.leaves().size() == 4);
    const Tree p = Tree::path(4);
    CHECK(p.leaves().size() == 2);
    CHECK(p.centers().size() == 2);
    const Tree d = Tree::double_star(4, 5);
    CHECK(d.size() == 9);
    CHECK(d.leaves().size() == 7);
    CHECK(canonical_code(Tree::double_star(2, 2)) == canonical_code(Tree::path(4)));
  }

  TEST_CASE("canonical code is a relabelling invariant") {
    const Tree t1(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}});
    const Tree t2(6, {{5, 4}, {4, 3}, {3, 2}, {4, 1}, {1, 0}});
    CHECK(canonical_code(t1) == canonical_code(t2));
    CHECK(canonical_code(t1) != canonical_code(Tree::path(6)));
  }
}
