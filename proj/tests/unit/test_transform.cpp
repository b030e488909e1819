#include <doctest.h>

#include <algorithm>

#include "bipmc/classify.hpp"
#include "bipmc/isomorphism.hpp"
#include "bipmc/matching.hpp"
#include "bipmc/recognize.hpp"
#include "bipmc/transform.hpp"
#include "support.hpp"

using namespace bipmc;
using namespace bipmc::testing;

namespace {

EdgeId first_two_edge(const BipGraph& g) {
  for (EdgeId e = 0; e < g.m(); ++e)
    if (g.degree(g.end(e, Side::A)) == 2 && g.degree(g.end(e, Side::B)) == 2) return e;
  return -1;
}

std::vector<EdgeId> two_edges(const BipGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e)
    if (g.degree(g.end(e, Side::A)) == 2 && g.degree(g.end(e, Side::B)) == 2) out.push_back(e);
  return out;
}

// Degree-2 vertices whose neighbours both have degree at least 3.
std::vector<Vertex> isolated_two_vertices(const BipGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != 2) continue;
    bool ok = true;
    for (Vertex w : g.neighbors(v)) ok = ok && g.degree(w) >= 3;
    if (ok) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("bicontract") {
    const BipGraph c6 = cycle(3);
    for (Vertex v : c6.vertices()) CHECK(are_isomorphic(bicontract(c6, v, false).graph, cycle(2)));
    const BipGraph t = theta();
    for (Vertex v : t.vertices()) {
      if (t.degree(v) != 2) continue;
      try {
        bicontract(t, v, true);
        FAIL("expected RestrictionViolated");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kRestrictionViolated);
      }
    }
    for (Vertex v : t.vertices()) {
      if (t.degree(v) != 3) continue;
      try {
        bicontract(t, v, false);
        FAIL("expected NotDegreeTwo");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kNotDegreeTwo);
      }
    }
  }

  TEST_CASE("restricted bicontractions reach the retract") {
    BipGraph g = fixture("h1_member.bip");
    for (;;) {
      const auto iso = isolated_two_vertices(g);
      if (iso.empty()) break;
      g = bicontract(g, iso.front(), true).graph;
    }
    CHECK(are_isomorphic(g, fixture("h1_member_retract.bip")));
  }

  TEST_CASE("bisplit") {
    const BipGraph c4 = cycle(2);
    for (Vertex v : c4.vertices()) {
      const auto inc = c4.incident(v);
      const Split s = bisplit(c4, v, {inc[0]}, {inc[1]}, false);
      CHECK(are_isomorphic(s.graph, cycle(3)));
      CHECK(s.graph.degree(s.center) == 2);
      CHECK(are_isomorphic(bicontract(s.graph, s.center, false).graph, c4));
    }
    try {
      const auto inc = c4.incident(vertex_a(0));
      bisplit(c4, vertex_a(0), {inc[0]}, {inc[1]}, true);
      FAIL("expected RestrictionViolated");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kRestrictionViolated);
    }
  }

  TEST_CASE("restricted bisplit of a star leaf matching retracts back") {
    const Construction c = leaf_matching(Tree::star(4));
    const BipGraph& g = c.graph;
    REQUIRE(g.n() == 10);
    const Vertex center = c.witness.copies[0][0];
    const auto inc = g.incident(center);
    REQUIRE(inc.size() == 4);
    const Split s = bisplit(g, center, {inc[0], inc[1]}, {inc[2], inc[3]}, true);
    CHECK(is_minimal_mc(s.graph));
    CHECK(are_isomorphic(partial_retract(s.graph).graph, g));
  }

  TEST_CASE("bisplit and bicontract are inverse on random splits") {
    std::mt19937_64 rng(21);
    int done = 0;
    for (int it = 0; it < 2000 && done < 200; ++it) {
      const int a = 3 + static_cast<int>(rng() % 4);
      const BipGraph g = random_bipartite(rng, a, a, 0.5);
      if (!is_connected(g)) continue;
      std::vector<Vertex> cands;
      for (Vertex v : g.vertices())
        if (g.degree(v) >= 2) cands.push_back(v);
      if (cands.empty()) continue;
      const Vertex v = cands[rng() % cands.size()];
      std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
      std::shuffle(inc.begin(), inc.end(), rng);
      const std::size_t cut = 1 + rng() % (inc.size() - 1);
      const std::vector<EdgeId> f1(inc.begin(), inc.begin() + cut), f2(inc.begin() + cut, inc.end());
      const bool restricted = f1.size() >= 2 && f2.size() >= 2;
      const Split s = bisplit(g, v, f1, f2, restricted);
      CHECK(are_isomorphic(bicontract(s.graph, s.center, restricted).graph, g));
      ++done;
    }
    CHECK(done == 200);
  }

  TEST_CASE("unrestricted bicontraction preserves matching covered both ways") {
    std::mt19937_64 rng(23);
    int done = 0;
    for (int it = 0; it < 5000 && done < 150; ++it) {
      const int a = 3 + static_cast<int>(rng() % 4);
      const BipGraph g = random_bipartite(rng, a, a, 0.5);
      if (!is_connected(g) || g.min_degree() < 2) continue;
      for (Vertex v : g.vertices()) {
        if (g.degree(v) != 2) continue;
        const auto nb = g.neighbors(v);
        if (nb[0] == nb[1]) continue;
        const Contraction c = bicontract(g, v, false);
        CHECK(is_matching_covered(g) == is_matching_covered(c.graph));
        ++done;
        break;
      }
    }
    CHECK(done >= 100);
  }

  TEST_CASE("restricted bicontraction preserves E3, minimality and H0") {
    std::vector<BipGraph> gs = {fixture("h0_member.bip"), fixture("h1_member.bip"), fixture("h0_mismatched_trees.bip")};
    for (const BipGraph& g : gs) {
      const auto before = classify_extremal(g);
      for (Vertex v : isolated_two_vertices(g)) {
        const BipGraph h = bicontract(g, v, true).graph;
        CHECK(is_minimal_mc(h));
        const auto after = classify_extremal(h);
        CHECK(after.e3 == before.e3);
        CHECK(after.flags[kH0] == before.flags[kH0]);
      }
    }
  }

  TEST_CASE("partial retract") {
    CHECK(partial_retract(cycle(3)).graph == cycle(3));
    CHECK(partial_retract(cycle(3)).trace.empty());
    CHECK(partial_retract(theta()).graph == theta());
    CHECK(are_isomorphic(partial_retract(fixture("h0_member.bip")).graph, fixture("h0_member_retract.bip")));
    CHECK(are_isomorphic(partial_retract(fixture("h1_member.bip")).graph, fixture("h1_member_retract.bip")));
  }

  TEST_CASE("retract is order independent") {
    const BipGraph g = fixture("h0_member.bip");
    const BipGraph ref = partial_retract(g).graph;
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
      CHECK(are_isomorphic(partial_retract_shuffled(g, seed).graph, ref));
  }

  TEST_CASE("balanced 2-cut through a tree edge uses its mirror") {
    const BipGraph g = fixture("halin14_leafmatch.bip");
    const auto w = recognize_h2(g);
    REQUIRE(w);
    int tested = 0;
    for (auto [x, y] : w->tree.edges()) {
      if (w->tree.is_leaf(x) || w->tree.is_leaf(y)) continue;
      const EdgeId e = find_edge(g, w->tree_to_host[x], w->tree_to_host[y]);
      const EdgeId mirror = find_edge(g, w->tree_prime_to_host[w->iso[x]], w->tree_prime_to_host[w->iso[y]]);
      REQUIRE(e >= 0);
      REQUIRE(mirror >= 0);
      const EdgeCut cut = find_balanced_2cut_with(g, e);
      CHECK(cut.balanced());
      CHECK(cut.size() == 2);
      CHECK(std::find(cut.edge_ids.begin(), cut.edge_ids.end(), mirror) != cut.edge_ids.end());
      ++tested;
    }
    CHECK(tested > 0);
  }

  TEST_CASE("balanced 2-cut search fails on the minimal non-extremal graph") {
    const BipGraph g = fixture("minimal_not_leafmatch.bip");
    const EdgeId e = find_edge(g, 5, 4);
    REQUIRE(e >= 0);
    CHECK(is_minimal_mc(g));
    try {
      find_balanced_2cut_with(g, e);
      FAIL("expected NotFound");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::kNotFound);
    }
  }

  TEST_CASE("splice") {
    const BipGraph c6 = cycle(3);
    const Splice s = two_edge_splice(make_splice_spec(c6, 0, c6, 0));
    CHECK(are_isomorphic(s.graph, cycle(4)));
    const BipGraph t = theta();
    const EdgeId te = first_two_edge(t);
    const Splice tt = two_edge_splice(make_splice_spec(t, te, t, te));
    CHECK(tt.graph.n() == 12);
    CHECK(tt.graph.m() == 14);
    CHECK(classify_extremal(tt.graph).flags[kH2]);
    const EdgeCut cut = find_balanced_2cut_with(tt.graph, tt.a1b2);
    CHECK(std::find(cut.edge_ids.begin(), cut.edge_ids.end(), tt.a2b1) != cut.edge_ids.end());
    for (const BipGraph& g : {theta(), fixture("h1_member.bip"), fixture("h0_member.bip")}) {
      const EdgeId e = first_two_edge(g);
      REQUIRE(e >= 0);
      CHECK(are_isomorphic(two_edge_splice(make_splice_spec(cycle(2), 0, g, e)).graph, g));
    }
  }

  TEST_CASE("two cut decomposition") {
    const BipGraph c8 = cycle(4);
    const EdgeCut cut = boundary(c8, {vertex_a(0), vertex_b(0), vertex_a(1), vertex_b(1)});
    REQUIRE(cut.balanced());
    const auto [g1, g2] = two_cut_decompose(c8, cut);
    CHECK(are_isomorphic(g1.graph, cycle(3)));
    CHECK(are_isomorphic(g2.graph, cycle(3)));
    CHECK(g1.graph.degree(g1.u) == 2);
    CHECK(g1.graph.degree(g1.v) == 2);

    const BipGraph c4 = cycle(2);
    const auto [h1, h2] = two_cut_decompose(c4, boundary(c4, {vertex_a(0), vertex_b(0)}));
    CHECK(are_isomorphic(h1.graph, c4));
    CHECK(are_isomorphic(h2.graph, c4));

    const BipGraph t = theta();
    const EdgeId te = first_two_edge(t);
    const Splice tt = two_edge_splice(make_splice_spec(t, te, t, te));
    const auto [p1, p2] = two_cut_decompose(tt.graph, find_balanced_2cut_with(tt.graph, tt.a1b2));
    CHECK(are_isomorphic(p1.graph, t));
    CHECK(are_isomorphic(p2.graph, t));

    try {
      two_cut_decompose(c4, boundary(c4, {vertex_a(0)}));
      FAIL("expected NotBalanced2Cut");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotBalanced2Cut);
    }
  }

  TEST_CASE("splice and decompose round trip on leaf matchings") {
    std::vector<BipGraph> pool;
    for (const Tree& t : enumerate_trees(7))
      if (t.size() >= 3) pool.push_back(leaf_matching(t).graph);
    std::mt19937_64 rng(29);
    for (int it = 0; it < 60; ++it) {
      const BipGraph& g1 = pool[rng() % pool.size()];
      const BipGraph& g2 = pool[rng() % pool.size()];
      const auto t1 = two_edges(g1), t2 = two_edges(g2);
      const Splice s = two_edge_splice(make_splice_spec(g1, t1[rng() % t1.size()], g2, t2[rng() % t2.size()]));
      const EdgeCut cut = boundary(s.graph, [&] {
        std::vector<Vertex> shore;
        for (int f = 0; f < s.graph.n(); ++f) {
          const Vertex v = s.graph.vertex(f);
          if (v.index < (v.side == Side::A ? g1.a_count() : g1.b_count()) - 1) shore.push_back(v);
        }
        return shore;
      }());
      REQUIRE(cut.size() == 2);
      const auto [d1, d2] = two_cut_decompose(s.graph, cut);
      const bool straight = are_isomorphic(d1.graph, g1) && are_isomorphic(d2.graph, g2);
      const bool crossed = are_isomorphic(d1.graph, g2) && are_isomorphic(d2.graph, g1);
      CHECK((straight || crossed));
    }
  }
}
