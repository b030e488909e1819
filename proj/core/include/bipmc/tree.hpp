#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bipmc/error.hpp"

namespace bipmc {

class Tree {
 public:
  Tree() = default;
  Tree(int vertex_count, std::vector<std::pair<int, int>> edges);

  static Tree star(int p);
  static Tree path(int vertex_count);
  static Tree double_star(int p, int q);

  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool is_leaf(int v) const { return degree(v) == 1; }
  std::vector<int> leaves() const;
  std::vector<int> non_leaves() const;
  std::vector<int> centers() const;

  // Proper 2-coloring with vertex 0 colored 0.
  std::vector<int> coloring() const;

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Isomorphism-invariant code of a free tree.
std::string canonical_code(const Tree& t);

}  // namespace bipmc
