#include <doctest.h>

#include <algorithm>
#include <set>

#include "bipmc/matching.hpp"
#include "support.hpp"

using namespace bipmc;
using namespace bipmc::testing;

TEST_SUITE("matching") {
  TEST_CASE("max_matching") {
    CHECK(max_matching(complete(3, 3)).size() == 3);
    CHECK(max_matching(complete(1, 3)).size() == 1);
    CHECK(max_matching(cycle(3)).size() == 3);
    CHECK(is_matching(cycle(3), max_matching(cycle(3))));
  }

  TEST_CASE("is_matchable with certificates") {
    const auto c4 = is_matchable(cycle(2));
    CHECK(c4.verdict);
    CHECK(c4.perfect.size() == 2);
    CHECK(is_perfect_matching(cycle(2), c4.perfect));
    const BipGraph k13 = complete(1, 3);
    const auto s = is_matchable(k13);
    CHECK_FALSE(s.verdict);
    CHECK(s.violator.size() == 3);
    CHECK(s.neighbors.size() == 1);
    for (Vertex v : s.violator) CHECK(v.side == Side::B);
    CHECK(validate_certificate(k13, s));
    CHECK(is_matchable(fixture("ear_example.bip")).verdict);
    CHECK(is_matchable(build(0, 0, {})).verdict);
  }

  TEST_CASE("certificates validate on random graphs") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
      const int a = 2 + it % 5;
      const BipGraph g = random_bipartite(rng, a, a + (it % 3 == 0), 0.4);
      const auto c = is_matchable(g);
      CHECK(validate_certificate(g, c));
    }
  }

  TEST_CASE("is_matchable_edge") {
    const BipGraph c4 = cycle(2);
    for (EdgeId e = 0; e < c4.m(); ++e) CHECK(is_matchable_edge(c4, e));
    const BipGraph p = path4();
    CHECK(is_matchable_edge(p, 0));
    CHECK_FALSE(is_matchable_edge(p, 1));
    CHECK(is_matchable_edge(p, 2));
    const BipGraph k33 = complete(3, 3);
    for (EdgeId e = 0; e < k33.m(); ++e) CHECK(is_matchable_edge(k33, e));
  }

  TEST_CASE("edge matchability agrees with enumeration") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 300; ++it) {
      const int a = 2 + it % 5;
      BipGraph g = random_bipartite(rng, a, a, 0.5);
      const auto all = enumerate_perfect_matchings(g, -1);
      REQUIRE_FALSE(all.truncated);
      std::set<EdgeId> used;
      for (const Matching& m : all.matchings) {
        CHECK(is_perfect_matching(g, m));
        used.insert(m.edge_ids.begin(), m.edge_ids.end());
      }
      const auto flags = matchable_edges(g);
      for (EdgeId e = 0; e < g.m(); ++e) {
        CHECK(is_matchable_edge(g, e) == (used.count(e) == 1));
        CHECK(flags[e] == (used.count(e) == 1));
      }
    }
  }

  TEST_CASE("is_matching_covered") {
    CHECK(is_matching_covered(cycle(2)));
    CHECK_FALSE(is_matching_covered(path4()));
    CHECK(is_matching_covered(theta()));
    CHECK_FALSE(is_matching_covered(build(1, 1, {{0, 0}})));
  }

  TEST_CASE("matching covered implies 2-connected") {
    std::mt19937_64 rng(9);
    int seen = 0;
    for (int it = 0; it < 400; ++it) {
      const int a = 2 + it % 5;
      const BipGraph g = random_bipartite(rng, a, a, 0.55);
      if (!is_matching_covered(g)) continue;
      ++seen;
      CHECK(is_two_connected(g));
    }
    CHECK(seen > 20);
  }

  TEST_CASE("doubled edge in a matching covered graph is removable") {
    std::mt19937_64 rng(13);
    int seen = 0;
    for (int it = 0; it < 300 && seen < 40; ++it) {
      const int a = 2 + it % 4;
      const BipGraph g = random_bipartite(rng, a, a, 0.6);
      if (!is_matching_covered(g)) continue;
      ++seen;
      auto edges = g.edges();
      const EdgeId e = static_cast<EdgeId>(rng() % edges.size());
      edges.push_back(edges[e]);
      const BipGraph doubled(g.a_count(), g.b_count(), edges);
      CHECK(is_matching_covered(doubled));
      CHECK(is_matching_covered(remove(doubled, {}, {e}).graph));
    }
    CHECK(seen >= 20);
  }

  TEST_CASE("is_conformal") {
    const BipGraph c6 = cycle(3);
    CHECK(is_conformal(c6, c6.vertices()));
    CHECK(is_conformal(c6, {vertex_a(1), vertex_b(1)}));
    const BipGraph t = theta();
    CHECK(is_conformal(t, theta_cycle().vertices));
  }

  TEST_CASE("enumerate_perfect_matchings") {
    CHECK(enumerate_perfect_matchings(cycle(2), -1).matchings.size() == 2);
    CHECK(enumerate_perfect_matchings(cycle(3), -1).matchings.size() == 2);
    CHECK(enumerate_perfect_matchings(complete(3, 3), -1).matchings.size() == 6);
    const auto lim = enumerate_perfect_matchings(complete(4, 4), 5);
    CHECK(lim.truncated);
    CHECK(lim.matchings.size() == 5);
  }

  TEST_CASE("conformal cycle through a vertex avoiding an edge") {
    const BipGraph t = theta();
    for (Vertex u : t.vertices()) {
      if (t.degree(u) != 3) continue;
      for (EdgeId e : t.incident(u)) {
        const Cycle c = conformal_cycle_through_vertex_avoiding_edge(t, u, e);
        CHECK(c.vertices.size() == 6);
        CHECK(std::find(c.edges.begin(), c.edges.end(), e) == c.edges.end());
        CHECK(std::find(c.vertices.begin(), c.vertices.end(), u) != c.vertices.end());
        CHECK(is_conformal(t, c.vertices));
      }
    }
    const BipGraph k33 = complete(3, 3);
    for (Vertex u : k33.vertices()) {
      for (EdgeId e : k33.incident(u)) {
        const Cycle c = conformal_cycle_through_vertex_avoiding_edge(k33, u, e);
        CHECK(c.vertices.size() % 2 == 0);
        CHECK(is_conformal(k33, c.vertices));
      }
    }
    const BipGraph c4 = cycle(2);
    try {
      conformal_cycle_through_vertex_avoiding_edge(c4, vertex_a(0), c4.incident(vertex_a(0))[0]);
      FAIL("expected NoSuchCycle");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNoSuchCycle);
    }
  }
}
