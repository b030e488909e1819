#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bipmc/cli/graph_file.hpp"
#include "bipmc/construct.hpp"
#include "bipmc/graph.hpp"

namespace bipmc::testing {

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline BipGraph fixture(const std::string& name) { return cli::read_graph_file(fixture_path(name)); }

// Even cycle a0 b0 a1 b1 ... on 2k vertices.
inline BipGraph cycle(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) {
    e.push_back({i, i});
    e.push_back({(i + 1) % k, i});
  }
  return build(k, k, e);
}

inline BipGraph complete(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, j});
  return build(a, b, e);
}

// a0 - b0 - a1 - b1
inline BipGraph path4() { return build(2, 2, {{0, 0}, {1, 0}, {1, 1}}); }

inline BipGraph theta() { return leaf_matching(Tree::star(3)).graph; }

inline EdgeId find_edge(const BipGraph& g, Vertex x, Vertex y) {
  for (EdgeId e : g.incident(x))
    if (g.other_end(e, x) == y) return e;
  return -1;
}

// The 6-cycle of theta through leaves 1 and 2 of both stars.
struct VertexEdgeSet {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

inline VertexEdgeSet theta_cycle() {
  const Construction c = leaf_matching(Tree::star(3));
  const auto& h = c.witness.copies[0];
  const auto& hp = c.witness.copies_prime[0];
  VertexEdgeSet out;
  out.vertices = {h[0], h[1], hp[1], hp[0], hp[2], h[2]};
  for (int i = 0; i < 6; ++i) out.edges.push_back(find_edge(c.graph, out.vertices[i], out.vertices[(i + 1) % 6]));
  return out;
}

inline BipGraph random_bipartite(std::mt19937_64& rng, int a, int b, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (coin(rng)) e.push_back({i, j});
  return build(a, b, e);
}

inline EdgeId find_edge(const BipGraph& g, int a, int b) {
  for (EdgeId e = 0; e < g.m(); ++e)
    if (g.edge(e).a == a && g.edge(e).b == b) return e;
  return -1;
}

}  // namespace bipmc::testing
