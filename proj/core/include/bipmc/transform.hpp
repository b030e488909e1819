#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bipmc/graph.hpp"

namespace bipmc {

struct Contraction {
  BipGraph graph;
  Vertex merged;                                  // the vertex replacing v1, v2 in graph
  std::vector<std::optional<Vertex>> vertex_map;  // old flat id -> new vertex (v maps to nothing)
  std::vector<std::optional<EdgeId>> edge_map;    // old edge id -> new edge id
  bool created_parallel = false;
};

Contraction bicontract(const BipGraph& g, Vertex v, bool restricted);

struct Split {
  BipGraph graph;
  Vertex v1;
  Vertex center;
  Vertex v2;
};

Split bisplit(const BipGraph& g, Vertex v, const std::vector<EdgeId>& f1, const std::vector<EdgeId>& f2,
              bool restricted);

struct Retract {
  BipGraph graph;
  std::vector<Vertex> trace;  // contracted vertex, named in the graph current at that step
  int parallel_created = 0;
};

Retract partial_retract(const BipGraph& g);
// Contracts in a random order driven by seed.
Retract partial_retract_shuffled(const BipGraph& g, std::uint64_t seed);

// A balanced 2-cut {e, f} with f a 3-edge.
EdgeCut find_balanced_2cut_with(const BipGraph& g, EdgeId e);

struct TwoCutPart {
  BipGraph graph;
  std::vector<std::optional<Vertex>> to_parent;  // by flat id; the two new vertices map to nothing
  Vertex u;                       // new A vertex
  Vertex v;                       // new B vertex
  EdgeId uv = -1;                 // the new 2-edge
};

std::pair<TwoCutPart, TwoCutPart> two_cut_decompose(const BipGraph& g, const EdgeCut& cut);

struct SpliceSpec {
  BipGraph g1;
  BipGraph g2;
  EdgeId e1 = -1;  // u1v1
  EdgeId e2 = -1;  // u2v2
  Vertex u1, v1, a1, b1;
  Vertex u2, v2, a2, b2;
};

// u_i is the A end of e_i, v_i its B end; a_i, b_i are the other neighbours of v_i, u_i.
SpliceSpec make_splice_spec(const BipGraph& g1, EdgeId e1, const BipGraph& g2, EdgeId e2);

struct Splice {
  BipGraph graph;
  EdgeId a1b2 = -1;
  EdgeId a2b1 = -1;
};

Splice two_edge_splice(const SpliceSpec& spec);

}  // namespace bipmc
