#pragma once

#include <string>
#include <vector>

#include "bipmc/graph.hpp"

namespace bipmc {

enum class KExtEngine { kDirect, kHall };

struct KExtendReport {
  int k = 0;
  bool verdict = false;
  KExtEngine engine = KExtEngine::kDirect;
  std::string reason;                 // failed clause, empty on success
  long matchings_checked = 0;         // direct engine
  std::vector<EdgeId> failing;        // a k-matching that does not extend
  std::vector<Vertex> violator;       // S inside A
  std::vector<Vertex> neighbors;      // N(S)
};

KExtendReport k_extendable_direct(const BipGraph& g, int k);
KExtendReport k_extendable_hall(const BipGraph& g, int k);
// Runs both engines; throws InvariantViolation when they disagree.
KExtendReport is_k_extendable(const BipGraph& g, int k);
bool validate_kext_certificate(const BipGraph& g, const KExtendReport& r);

std::vector<EdgeId> superfluous_edges(const BipGraph& g, int k);
bool is_minimal_k_extendable(const BipGraph& g, int k);
// Degree/cut filters that certify an edge is not superfluous.
bool edge_in_nontrivial_cut_of_size(const BipGraph& g, EdgeId e, int size);

enum class ConnectivityMethod { kAuto, kExhaustive, kFlow };

int essential_edge_connectivity(const BipGraph& g, ConnectivityMethod method = ConnectivityMethod::kAuto);

struct BoundLine {
  std::string name;
  bool conjecture = false;
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
  long slack = 0;
};

struct BoundsReport {
  int k = 0;
  bool forest = false;  // G[V_{k+2}]
  std::vector<BoundLine> lines;
  bool size_threshold_reached = false;  // n >= 4k^2 + 2k

  const BoundLine& line(const std::string& name) const;
};

BoundsReport evaluate_kext_bounds(const BipGraph& g, int k);
BoundsReport bounds_report(const BipGraph& g, int k);

struct HereditaryReport {
  bool ok = true;
  long vertex_pairs = 0;
  long edge_pairs = 0;
  std::string failure;
};

HereditaryReport hereditary_checks(const BipGraph& g, int k);

}  // namespace bipmc
