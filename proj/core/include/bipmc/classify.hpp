#pragma once

#include <array>
#include <string>
#include <vector>

#include "bipmc/graph.hpp"

namespace bipmc {

struct DegreeProfile {
  std::vector<Vertex> v2;
  std::vector<Vertex> v3;
  std::vector<EdgeId> e2;
  std::vector<EdgeId> e3;
  std::vector<EdgeId> e32;
};

DegreeProfile degree_profile(const BipGraph& g);

std::vector<EdgeId> removable_edges(const BipGraph& g);
bool is_minimal_mc(const BipGraph& g);

// Index into ExtremalReport::flags and ::slacks.
enum ExtremalClass { kH0 = 0, kH1, kH2, kH3, kH4 };

struct ExtremalReport {
  int n = 0;
  int m = 0;
  int v2 = 0;
  int e2 = 0;
  int v3 = 0;
  int e3 = 0;
  int e32 = 0;
  bool is_minimal_mc = false;
  // h0: |E2| = m-n+2, h1: 6|E2| = n+10, h2: |V2| = 2(m-n+2), h3: 2|V2| = n+4, h4: 2m = 3n-6
  std::array<bool, 5> flags{};
  // quantity minus bound; the size slack is (3n-6) - 2m
  std::array<long, 5> slacks{};
};

// Counts, flags and slacks without the minimality check.
ExtremalReport extremal_counts(const BipGraph& g);
ExtremalReport classify_extremal(const BipGraph& g);

struct BoundResult {
  std::string name;
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
  bool exempt = false;
  long slack = 0;
};

struct BoundCheck {
  std::vector<BoundResult> bounds;  // induced matching, |V2| vs m-n+2, |V2| vs n, size, |E2| vs n
  std::vector<EdgeId> induced_matching;
  bool all_hold() const;
};

// Largest induced matching made of 2-edges.
std::vector<EdgeId> induced_two_edge_matching(const BipGraph& g);
BoundCheck evaluate_bounds(const BipGraph& g);
BoundCheck check_bounds(const BipGraph& g);

struct IdentityCheck {
  bool v3 = false;   // |V3| = 3n-2m-4
  bool e32 = false;  // |E3,2| = 2m-2n+4
  bool e3 = false;   // |E3| = 3n-2m-6 = |V3|-2
  bool all() const { return v3 && e32 && e3; }
};

IdentityCheck counting_identities(const BipGraph& g);

bool e2_is_perfect_matching_of_v2(const BipGraph& g);
bool is_forest(const BipGraph& g);
// G[V_d] with V_d the vertices of degree at least d.
bool high_degree_part_is_forest(const BipGraph& g, int d);

bool is_c4(const BipGraph& g);
bool is_cycle(const BipGraph& g);

}  // namespace bipmc
