#pragma once

#include <optional>
#include <vector>

#include "bipmc/graph.hpp"
#include "bipmc/tree.hpp"

namespace bipmc {

bool is_halin(const Tree& t);
bool is_cubic_halin(const Tree& t);
bool is_star(const Tree& t);
bool is_r_tree(const Tree& t, int r);
bool is_regular_r_tree(const Tree& t, int r);

struct TreeFlags {
  bool is_halin = false;
  bool is_cubic_halin = false;
  bool is_star = false;
};

TreeFlags tree_predicates(const Tree& t);

// leaf_constraint[x] = required image of x, or -1. Result maps t1 vertices to t2 vertices.
std::optional<std::vector<int>> tree_isomorphism(const Tree& t1, const Tree& t2,
                                                 const std::vector<int>& leaf_constraint = {});

struct LeafMatchingWitness {
  Tree tree;
  Tree tree_prime;
  std::vector<Vertex> tree_to_host;        // by tree vertex
  std::vector<Vertex> tree_prime_to_host;  // by tree vertex
  std::vector<int> iso;                    // tree vertex -> tree_prime vertex
  std::vector<EdgeId> pairing;             // host edges joining l and iso(l)
};

std::optional<LeafMatchingWitness> recognize_leaf_matching(const BipGraph& g);
std::optional<LeafMatchingWitness> recognize_h2(const BipGraph& g);
std::optional<LeafMatchingWitness> recognize_h3(const BipGraph& g);
std::optional<LeafMatchingWitness> recognize_h4(const BipGraph& g);

struct RetractRecognition {
  bool verdict = false;
  std::optional<BipGraph> retract;
  std::optional<LeafMatchingWitness> witness;
};

RetractRecognition recognize_h0(const BipGraph& g);
RetractRecognition recognize_h1(const BipGraph& g);

}  // namespace bipmc
