#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bipmc/error.hpp"

namespace bipmc {

enum class Side : std::uint8_t { A = 0, B = 1 };

constexpr Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

struct Vertex {
  Side side = Side::A;
  int index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex vertex_a(int i) { return {Side::A, i}; }
constexpr Vertex vertex_b(int i) { return {Side::B, i}; }

std::string to_string(Vertex v);

using EdgeId = int;

struct Edge {
  int a = 0;
  int b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Bipartite multigraph with fixed classes A and B. Edge ids are input positions.
class BipGraph {
 public:
  BipGraph() = default;
  BipGraph(int a_count, int b_count, std::vector<Edge> edges);

  int a_count() const { return a_count_; }
  int b_count() const { return b_count_; }
  int count(Side s) const { return s == Side::A ? a_count_ : b_count_; }
  int n() const { return a_count_ + b_count_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  Vertex end(EdgeId e, Side s) const {
    return s == Side::A ? vertex_a(edges_[e].a) : vertex_b(edges_[e].b);
  }
  Vertex other_end(EdgeId e, Vertex v) const { return end(e, opposite(v.side)); }
  bool has_vertex(Vertex v) const { return v.index >= 0 && v.index < count(v.side); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < m(); }
  bool incident_to(EdgeId e, Vertex v) const { return end(e, v.side) == v; }

  // Flat ids: A vertices first, then B vertices.
  int flat(Vertex v) const { return v.side == Side::A ? v.index : a_count_ + v.index; }
  Vertex vertex(int flat_id) const {
    return flat_id < a_count_ ? vertex_a(flat_id) : vertex_b(flat_id - a_count_);
  }
  int flat_end_a(EdgeId e) const { return edges_[e].a; }
  int flat_end_b(EdgeId e) const { return a_count_ + edges_[e].b; }

  std::span<const EdgeId> incident(Vertex v) const { return incident_flat(flat(v)); }
  std::span<const EdgeId> incident_flat(int f) const {
    return {inc_.data() + offset_[f], inc_.data() + offset_[f + 1]};
  }
  int degree(Vertex v) const { return degree_flat(flat(v)); }
  int degree_flat(int f) const { return offset_[f + 1] - offset_[f]; }
  std::vector<Vertex> neighbors(Vertex v) const;

  std::vector<Vertex> vertices() const;
  int min_degree() const;
  int max_degree() const;
  bool is_simple() const;

  friend bool operator==(const BipGraph& x, const BipGraph& y) {
    return x.a_count_ == y.a_count_ && x.b_count_ == y.b_count_ && x.edges_ == y.edges_;
  }

 private:
  int a_count_ = 0;
  int b_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offset_ = {0};
  std::vector<EdgeId> inc_;
};

BipGraph build(int a_count, int b_count, const std::vector<std::pair<int, int>>& edge_pairs);

struct Matching {
  std::vector<EdgeId> edge_ids;

  int size() const { return static_cast<int>(edge_ids.size()); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

bool is_matching(const BipGraph& g, const Matching& m);
bool is_perfect_matching(const BipGraph& g, const Matching& m);

struct Removal {
  BipGraph graph;
  std::vector<std::optional<Vertex>> vertex_map;  // indexed by old flat id
  std::vector<std::optional<EdgeId>> edge_map;    // indexed by old edge id
  std::vector<Vertex> to_parent;                  // indexed by new flat id
  std::vector<EdgeId> edge_to_parent;             // indexed by new edge id
};

Removal remove(const BipGraph& g, const std::vector<Vertex>& vertices,
               const std::vector<EdgeId>& edge_ids);

// Subgraph on the given vertices and edges (edges must have both ends listed).
Removal subgraph(const BipGraph& g, const std::vector<Vertex>& vertices,
                 const std::vector<EdgeId>& edge_ids);

Removal induced_subgraph(const BipGraph& g, const std::vector<Vertex>& vertices);

struct Component {
  BipGraph graph;
  std::vector<Vertex> to_parent;       // indexed by flat id in the component
  std::vector<EdgeId> edge_to_parent;  // indexed by edge id in the component
};

std::vector<Component> components(const BipGraph& g);
std::vector<int> component_labels(const BipGraph& g);  // by flat id; labels in order of first vertex
int component_count(const BipGraph& g);
bool is_connected(const BipGraph& g);
bool is_two_connected(const BipGraph& g);

struct EdgeCut {
  std::vector<Vertex> shore;
  std::vector<EdgeId> edge_ids;
  int a_side_count = 0;  // boundary edges whose shore end is in A
  int b_side_count = 0;
  bool trivial = true;

  int size() const { return static_cast<int>(edge_ids.size()); }
  bool balanced() const { return a_side_count == b_side_count; }
};

EdgeCut boundary(const BipGraph& g, const std::vector<Vertex>& shore);
std::vector<Vertex> complement(const BipGraph& g, const std::vector<Vertex>& shore);

void check_handshake(const BipGraph& g);

}  // namespace bipmc
