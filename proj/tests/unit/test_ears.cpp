#include <doctest.h>

#include <algorithm>
#include <set>

#include "bipmc/classify.hpp"
#include "bipmc/ears.hpp"
#include "bipmc/matching.hpp"
#include "support.hpp"

using namespace bipmc;
using namespace bipmc::testing;

namespace {

std::set<EdgeId> edge_set(const std::vector<EdgeId>& v) { return {v.begin(), v.end()}; }

std::vector<BipGraph> random_mc_graphs(int count, std::uint64_t seed, int max_a) {
  std::mt19937_64 rng(seed);
  std::vector<BipGraph> out;
  for (int it = 0; static_cast<int>(out.size()) < count && it < 100000; ++it) {
    const int a = 2 + static_cast<int>(rng() % (max_a - 1));
    BipGraph g = random_bipartite(rng, a, a, 0.45);
    if (is_matching_covered(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_SUITE("ears") {
  TEST_CASE("C4 has no ears") {
    const auto ed = find_ear_decomposition(cycle(2));
    CHECK(ed.initial_cycle.vertices.size() == 4);
    CHECK(ed.ears.empty());
    CHECK(verify_ear_decomposition(cycle(2), ed).ok);
  }

  TEST_CASE("ear example fixture") {
    const BipGraph g = fixture("ear_example.bip");
    const auto ed = find_ear_decomposition(g);
    CHECK(verify_ear_decomposition(g, ed).ok);
    CHECK(ed.ears.size() == 4);
    CHECK(static_cast<int>(ed.ears.size()) == g.m() - g.n());
  }

  TEST_CASE("theta has one ear of length 3") {
    const BipGraph t = theta();
    const auto ed = find_ear_decomposition(t);
    CHECK(ed.initial_cycle.vertices.size() == 6);
    REQUIRE(ed.ears.size() == 1);
    CHECK(ed.ears[0].length() == 3);
  }

  TEST_CASE("decomposition through a conformal subgraph") {
    const BipGraph t = theta();
    const auto h = theta_cycle();
    const auto ed = find_ear_decomposition_through(t, h.vertices, h.edges);
    CHECK(verify_ear_decomposition(t, ed).ok);
    CHECK(edge_set(ed.initial_cycle.edges) == edge_set(h.edges));

    const BipGraph k33 = complete(3, 3);
    const std::vector<Vertex> cv = {vertex_a(0), vertex_b(0), vertex_a(1), vertex_b(1)};
    const std::vector<EdgeId> ce = {find_edge(k33, 0, 0), find_edge(k33, 1, 0), find_edge(k33, 1, 1),
                                    find_edge(k33, 0, 1)};
    REQUIRE(is_conformal(k33, cv));
    const auto ek = find_ear_decomposition_through(k33, cv, ce);
    CHECK(verify_ear_decomposition(k33, ek).ok);
    CHECK(ek.ears.size() == 3);
    CHECK(edge_set(ek.initial_cycle.edges) == edge_set(ce));

    const BipGraph c6 = cycle(3);
    std::vector<EdgeId> all(c6.m());
    for (EdgeId e = 0; e < c6.m(); ++e) all[e] = e;
    const auto e6 = find_ear_decomposition_through(c6, c6.vertices(), all);
    CHECK(e6.ears.empty());
    CHECK(verify_ear_decomposition(c6, e6).ok);
  }

  TEST_CASE("decomposition through a larger conformal subgraph") {
    const BipGraph g = fixture("ear_example.bip");
    const auto ed = find_ear_decomposition(g);
    std::set<Vertex> vs(ed.initial_cycle.vertices.begin(), ed.initial_cycle.vertices.end());
    std::vector<EdgeId> es = ed.initial_cycle.edges;
    for (const Vertex& v : ed.ears[0].vertices) vs.insert(v);
    es.insert(es.end(), ed.ears[0].edges.begin(), ed.ears[0].edges.end());
    const std::vector<Vertex> hv(vs.begin(), vs.end());
    const auto through = find_ear_decomposition_through(g, hv, es);
    CHECK(verify_ear_decomposition(g, through).ok);
    std::set<EdgeId> prefix(through.initial_cycle.edges.begin(), through.initial_cycle.edges.end());
    bool found = prefix == edge_set(es);
    for (const Ear& e : through.ears) {
      prefix.insert(e.edges.begin(), e.edges.end());
      found = found || prefix == edge_set(es);
    }
    CHECK(found);
  }

  TEST_CASE("verifier") {
    const BipGraph t = theta();
    auto ed = find_ear_decomposition(t);
    auto rev = ed;
    std::reverse(rev.ears[0].vertices.begin(), rev.ears[0].vertices.end());
    std::reverse(rev.ears[0].edges.begin(), rev.ears[0].edges.end());
    CHECK(verify_ear_decomposition(t, rev).ok);
    auto bad = ed;
    Ear even;
    const Vertex u = bad.initial_cycle.vertices[0];
    const Vertex w = bad.initial_cycle.vertices[1];
    even.vertices = {u, w, u};
    even.edges = {bad.initial_cycle.edges[0], bad.initial_cycle.edges[0]};
    bad.ears.insert(bad.ears.begin(), even);
    const auto v = verify_ear_decomposition(t, bad);
    CHECK_FALSE(v.ok);
    CHECK(v.violation.find("odd") != std::string::npos);
  }

  TEST_CASE("random matching covered graphs decompose") {
    for (const BipGraph& g : random_mc_graphs(150, 17, 7)) {
      const auto ed = find_ear_decomposition(g);
      const auto v = verify_ear_decomposition(g, ed);
      CHECK_MESSAGE(v.ok, v.violation);
      CHECK(static_cast<int>(ed.ears.size()) == g.m() - g.n());
      for (const Ear& e : ed.ears) {
        if (e.length() != 1) continue;
        CHECK(is_matching_covered(remove(g, {}, {e.edges[0]}).graph));
      }
    }
  }

  TEST_CASE("prefix unions of minimal graphs are induced") {
    std::vector<BipGraph> gs = {theta(), fixture("halin14_leafmatch.bip"), fixture("minimal_not_leafmatch.bip"),
                                fixture("h1_member.bip"), fixture("h0_member.bip")};
    for (const Tree& t : enumerate_trees(8))
      if (t.size() >= 2) gs.push_back(leaf_matching(t).graph);
    for (const BipGraph& g : gs) {
      REQUIRE(is_minimal_mc(g));
      const auto ed = find_ear_decomposition(g);
      REQUIRE(verify_ear_decomposition(g, ed).ok);
      std::set<Vertex> vs(ed.initial_cycle.vertices.begin(), ed.initial_cycle.vertices.end());
      std::set<EdgeId> es(ed.initial_cycle.edges.begin(), ed.initial_cycle.edges.end());
      auto induced = [&] {
        for (EdgeId e = 0; e < g.m(); ++e) {
          if (vs.count(g.end(e, Side::A)) && vs.count(g.end(e, Side::B)) && !es.count(e)) return false;
        }
        return true;
      };
      CHECK(induced());
      for (const Ear& ear : ed.ears) {
        vs.insert(ear.vertices.begin(), ear.vertices.end());
        es.insert(ear.edges.begin(), ear.edges.end());
        CHECK(induced());
      }
    }
  }
}
