#pragma once

#include <string>
#include <vector>

#include "bipmc/graph.hpp"
#include "bipmc/matching.hpp"

namespace bipmc {

// Odd path; vertices.front() and vertices.back() lie in the union built so far.
struct Ear {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;  // edges[i] joins vertices[i] and vertices[i+1]

  int length() const { return static_cast<int>(edges.size()); }
};

struct EarDecomposition {
  Cycle initial_cycle;
  std::vector<Ear> ears;
};

EarDecomposition find_ear_decomposition(const BipGraph& g);

// Decomposition in which the subgraph (h_vertices, h_edge_ids) is one of the prefix unions.
EarDecomposition find_ear_decomposition_through(const BipGraph& g, const std::vector<Vertex>& h_vertices,
                                                const std::vector<EdgeId>& h_edge_ids);

struct EarVerification {
  bool ok = false;
  std::string violation;
};

EarVerification verify_ear_decomposition(const BipGraph& g, const EarDecomposition& ed);

}  // namespace bipmc
