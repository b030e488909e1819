#pragma once

#include <vector>

#include "bipmc/graph.hpp"

namespace bipmc {

struct MatchabilityCertificate {
  bool verdict = false;
  Matching perfect;                // when verdict is true
  std::vector<Vertex> violator;    // S, inside one class, when verdict is false
  std::vector<Vertex> neighbors;   // N(S)
};

Matching max_matching(const BipGraph& g);
MatchabilityCertificate is_matchable(const BipGraph& g);
bool validate_certificate(const BipGraph& g, const MatchabilityCertificate& c);

bool is_matchable_edge(const BipGraph& g, EdgeId e);

// Flags for every edge: true iff the edge lies in some perfect matching.
std::vector<bool> matchable_edges(const BipGraph& g);

bool is_matching_covered(const BipGraph& g);
bool is_conformal(const BipGraph& g, const std::vector<Vertex>& sub_vertices);

// A perfect matching containing e, if any.
std::optional<Matching> perfect_matching_with(const BipGraph& g, EdgeId e);

struct PerfectMatchingList {
  std::vector<Matching> matchings;
  bool truncated = false;
};

// A negative limit means no limit.
PerfectMatchingList enumerate_perfect_matchings(const BipGraph& g, long limit);

struct Cycle {
  std::vector<Vertex> vertices;  // closed implicitly
  std::vector<EdgeId> edges;     // edges[i] joins vertices[i] and vertices[i+1 mod len]
};

Cycle conformal_cycle_through_vertex_avoiding_edge(const BipGraph& g, Vertex u, EdgeId e);

// Matchability of g with some vertices and edges switched off, without copying.
class MatchingEngine {
 public:
  explicit MatchingEngine(const BipGraph& g);

  // Maximum matching size with the flagged vertices/edges ignored.
  int max_matching_size(const std::vector<char>& vertex_off, const std::vector<char>& edge_off);
  bool perfect_after(const std::vector<char>& vertex_off, const std::vector<char>& edge_off);
  const std::vector<EdgeId>& mate_a() const { return mate_a_; }
  const std::vector<EdgeId>& mate_b() const { return mate_b_; }

 private:
  bool bfs();
  bool dfs(int a);

  const BipGraph& g_;
  const std::vector<char>* vertex_off_ = nullptr;
  const std::vector<char>* edge_off_ = nullptr;
  std::vector<EdgeId> mate_a_, mate_b_;
  std::vector<int> dist_, iter_;
};

}  // namespace bipmc
