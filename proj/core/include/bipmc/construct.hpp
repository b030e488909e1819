#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bipmc/graph.hpp"
#include "bipmc/tree.hpp"

namespace bipmc {

enum class ConstructionKind { kLeafMatching, kKLeafMatching, kJ, kDoubleStar, kReplaceEdge };

struct ConstructionWitness {
  ConstructionKind kind = ConstructionKind::kLeafMatching;
  Tree tree;
  int k = 1;
  int p = 0;
  int q = 0;
  int r = 0;
  EdgeId replaced = -1;
  BipGraph source;  // host of an edge replacement
  // copies[c][x]: host vertex of tree vertex x in copy c of H (leaves shared by all copies).
  std::vector<std::vector<Vertex>> copies;
  std::vector<std::vector<Vertex>> copies_prime;
  std::vector<EdgeId> pairing;  // leaf pairing edges, ascending leaf order
};

struct Construction {
  BipGraph graph;
  ConstructionWitness witness;
};

Construction leaf_matching(const Tree& t);
Construction k_leaf_matching(const Tree& t, int k);

// Rebuilds the graph described by a witness.
BipGraph replay(const ConstructionWitness& w);

struct JGraph {
  BipGraph graph;
  std::vector<Vertex> a_u;  // centre copies in H
  std::vector<Vertex> b_r;  // leaves of H
  std::vector<Vertex> a_r;  // leaves of H'
  std::vector<Vertex> b_v;  // centre copies in H'
};

JGraph J(int p, int r);

BipGraph double_star_graph(int p, int q, int k);

Construction replace_edge_with_J(const BipGraph& g, EdgeId uv, int p, int r);

enum class TreeFilter { kAll, kHalin, kCubicHalin, kRTree, kRegularRTree, kStar };

struct TreePredicate {
  TreeFilter filter = TreeFilter::kAll;
  int r = 0;

  bool operator()(const Tree& t) const;
};

// One tree per isomorphism class with 1..max_n vertices, by size then canonical code.
std::vector<Tree> enumerate_trees(int max_n, TreePredicate pred = {});
void for_each_tree(int max_n, TreePredicate pred, const std::function<void(const Tree&)>& fn);

// Tree spec strings: "star P", "path N", "doublestar P Q", "edges N u-v ...".
Tree parse_tree_spec(const std::string& spec);

}  // namespace bipmc
