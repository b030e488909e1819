#include <doctest.h>

#include <map>

#include "bipmc/classify.hpp"
#include "bipmc/isomorphism.hpp"
#include "bipmc/kext.hpp"
#include "bipmc/matching.hpp"
#include "bipmc/recognize.hpp"
#include "support.hpp"

using namespace bipmc;
using namespace bipmc::testing;

TEST_SUITE("construct") {
  TEST_CASE("leaf matching") {
    CHECK(are_isomorphic(leaf_matching(Tree(2, {{0, 1}})).graph, cycle(2)));
    const BipGraph t = leaf_matching(Tree::star(3)).graph;
    CHECK(t.n() == 8);
    CHECK(t.m() == 9);
    for (int p = 2; p <= 8; ++p) {
      const BipGraph g = leaf_matching(Tree::star(p)).graph;
      CHECK(g.n() == 2 * (p + 1));
      CHECK(g.m() == 3 * p);
    }
    try {
      leaf_matching(Tree(1, {}));
      FAIL("expected TrivialTree");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kTrivialTree);
    }
  }

  TEST_CASE("k-leaf matching counts and witnesses") {
    for (const Tree& t : enumerate_trees(7)) {
      if (t.size() < 2) continue;
      const int leaves = static_cast<int>(t.leaves().size());
      const int inner = t.size() - leaves;
      CHECK(are_isomorphic(k_leaf_matching(t, 1).graph, leaf_matching(t).graph));
      for (int k = 1; k <= 3; ++k) {
        const Construction c = k_leaf_matching(t, k);
        CHECK(c.graph.n() == 2 * (leaves + k * inner));
        CHECK(c.graph.m() == 2 * k * (t.size() - 1) + leaves);
        CHECK(replay(c.witness) == c.graph);
      }
    }
    const BipGraph j = k_leaf_matching(Tree::star(4), 3).graph;
    CHECK(j.n() == 14);
    CHECK(j.m() == 28);
    CHECK(are_isomorphic(j, J(3, 4).graph));
    CHECK(are_isomorphic(j, fixture("j_3_4.bip")));
  }

  TEST_CASE("2-leaf matching of a cubic tree matches the fixture") {
    const BipGraph f = fixture("cubic_tree8_k2.bip");
    int hits = 0;
    for (const Tree& t : enumerate_trees(8, {TreeFilter::kRegularRTree, 3}))
      if (t.size() == 8 && are_isomorphic(k_leaf_matching(t, 2).graph, f)) ++hits;
    CHECK(hits == 1);
  }

  TEST_CASE("J") {
    const BipGraph j0 = J(0, 3).graph;
    CHECK(j0.n() == 6);
    CHECK(j0.m() == 3);
    CHECK(component_count(j0) == 3);
    CHECK(are_isomorphic(J(1, 2).graph, cycle(3)));
    const JGraph j24 = J(2, 4);
    CHECK(j24.graph.n() == 12);
    CHECK(j24.graph.m() == 20);
    CHECK(j24.a_u.size() == 2);
    CHECK(j24.b_v.size() == 2);
    CHECK(j24.a_r.size() == 4);
    CHECK(j24.b_r.size() == 4);
    try {
      J(3, 2);
      FAIL("expected BadParams");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kBadParams);
    }
  }

  TEST_CASE("double star graphs") {
    const BipGraph d = double_star_graph(4, 5, 2);
    CHECK(d.n() == 22);
    CHECK(d.m() == 39);
    CHECK(are_isomorphic(d, fixture("double_star_4_5_k2.bip")));
    CHECK(are_isomorphic(double_star_graph(2, 2, 1), cycle(4)));
    for (int p = 2; p <= 5; ++p)
      for (int q = 2; q <= 5; ++q)
        for (int k = 1; k <= 3; ++k)
          CHECK(are_isomorphic(double_star_graph(p, q, k), k_leaf_matching(Tree::double_star(p, q), k).graph));
    CHECK_THROWS_AS(double_star_graph(1, 3, 1), Error);
  }

  TEST_CASE("replace an edge with J") {
    const BipGraph c6 = cycle(3);
    const Construction c = replace_edge_with_J(c6, 0, 1, 2);
    CHECK(c.graph.n() == 10);
    CHECK(is_matching_covered(c.graph));
    CHECK(replay(c.witness) == c.graph);
    const BipGraph k44 = complete(4, 4);
    const Construction r = replace_edge_with_J(k44, 0, 3, 4);
    CHECK(r.graph.n() == 20);
    CHECK(is_k_extendable(r.graph, 3).verdict);
    const Construction same = replace_edge_with_J(k44, 5, 3, 3);
    CHECK(same.graph.n() == 18);
    try {
      replace_edge_with_J(c6, 0, 2, 3);
      FAIL("expected DegreeMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kDegreeMismatch);
    }
  }

  TEST_CASE("tree enumeration") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    std::map<int, int> by_size;
    for (const Tree& t : enumerate_trees(12)) ++by_size[t.size()];
    for (int n = 1; n <= 12; ++n) CHECK(by_size[n] == expected[n - 1]);
    const auto halin = enumerate_trees(7, {TreeFilter::kHalin});
    for (const Tree& t : halin) CHECK(is_halin(t));
    std::map<std::string, int> codes;
    for (const Tree& t : halin) ++codes[canonical_code(t)];
    CHECK(codes.count(canonical_code(Tree(2, {{0, 1}}))));
    for (int p = 3; p <= 6; ++p) CHECK(codes.count(canonical_code(Tree::star(p))));
    CHECK(codes.count(canonical_code(Tree::double_star(3, 3))));
    CHECK_FALSE(codes.count(canonical_code(Tree::path(3))));
    CHECK(enumerate_trees(2, {TreeFilter::kStar}).empty());
    CHECK(enumerate_trees(3, {TreeFilter::kStar}).size() == 1);
  }

  TEST_CASE("tree specs") {
    CHECK(canonical_code(parse_tree_spec("star 3")) == canonical_code(Tree::star(3)));
    CHECK(parse_tree_spec("path 5").size() == 5);
    CHECK(parse_tree_spec("doublestar 4 5").size() == 9);
    CHECK(canonical_code(parse_tree_spec("edges 4 0-1 1-2 1-3")) == canonical_code(Tree::star(3)));
    CHECK_THROWS_AS(parse_tree_spec("bogus"), Error);
  }

  TEST_CASE("2k-cuts from tree edges") {
    for (int k = 1; k <= 3; ++k) {
      const Construction c = k_leaf_matching(Tree::double_star(k + 2, k + 2), k);
      const auto& w = c.witness;
      for (auto [x, y] : w.tree.edges()) {
        std::vector<EdgeId> ids;
        for (const auto* side : {&w.copies, &w.copies_prime}) {
          for (int i = 0; i < k; ++i) {
            const EdgeId e = find_edge(c.graph, (*side)[i][x], (*side)[i][y]);
            REQUIRE(e >= 0);
            ids.push_back(e);
          }
        }
        CHECK(ids.size() == static_cast<std::size_t>(2 * k));
        CHECK(component_count(remove(c.graph, {}, ids).graph) == 2);
      }
    }
  }
}
