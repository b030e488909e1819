#include "bipmc/classify.hpp"

#include <algorithm>

#include "bipmc/matching.hpp"

namespace bipmc {

DegreeProfile degree_profile(const BipGraph& g) {
  DegreeProfile p;
  for (int f = 0; f < g.n(); ++f) {
    int d = g.degree_flat(f);
    if (d < 2) throw Error(ErrorCode::kDegreeTooLow, "vertex " + to_string(g.vertex(f)) + " has degree " + std::to_string(d));
    (d == 2 ? p.v2 : p.v3).push_back(g.vertex(f));
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    bool a2 = g.degree_flat(g.flat_end_a(e)) == 2, b2 = g.degree_flat(g.flat_end_b(e)) == 2;
    if (a2 && b2) p.e2.push_back(e);
    else if (!a2 && !b2) p.e3.push_back(e);
    else p.e32.push_back(e);
  }
  return p;
}

std::vector<EdgeId> removable_edges(const BipGraph& g) {
  if (!is_matching_covered(g)) throw Error(ErrorCode::kNotMatchingCovered, "input is not matching covered");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (is_matching_covered(remove(g, {}, {e}).graph)) out.push_back(e);
  }
  return out;
}

bool is_minimal_mc(const BipGraph& g) { return removable_edges(g).empty(); }

ExtremalReport extremal_counts(const BipGraph& g) {
  ExtremalReport r;
  r.n = g.n();
  r.m = g.m();
  for (int f = 0; f < g.n(); ++f) {
    int d = g.degree_flat(f);
    if (d == 2) ++r.v2;
    else if (d >= 3) ++r.v3;
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    int da = g.degree_flat(g.flat_end_a(e)), db = g.degree_flat(g.flat_end_b(e));
    if (da == 2 && db == 2) ++r.e2;
    else if (da >= 3 && db >= 3) ++r.e3;
    else ++r.e32;
  }
  const long n = r.n, m = r.m, excess = m - n + 2;
  r.slacks[kH0] = r.e2 - excess;
  r.slacks[kH1] = 6L * r.e2 - (n + 10);
  r.slacks[kH2] = r.v2 - 2 * excess;
  r.slacks[kH3] = 2L * r.v2 - (n + 4);
  r.slacks[kH4] = (3 * n - 6) - 2 * m;
  for (int i = 0; i < 5; ++i) r.flags[i] = r.slacks[i] == 0;
  return r;
}

ExtremalReport classify_extremal(const BipGraph& g) {
  if (!is_matching_covered(g)) throw Error(ErrorCode::kNotMinimal, "input is not matching covered");
  if (!is_minimal_mc(g)) throw Error(ErrorCode::kNotMinimal, "input has a removable edge");
  ExtremalReport r = extremal_counts(g);
  r.is_minimal_mc = true;
  return r;
}

bool is_cycle(const BipGraph& g) {
  if (g.n() < 2 || !is_connected(g)) return false;
  for (int f = 0; f < g.n(); ++f) {
    if (g.degree_flat(f) != 2) return false;
  }
  return true;
}

bool is_c4(const BipGraph& g) { return g.n() == 4 && is_cycle(g); }

std::vector<EdgeId> induced_two_edge_matching(const BipGraph& g) {
  std::vector<char> two(g.n(), 0);
  for (int f = 0; f < g.n(); ++f) two[f] = g.degree_flat(f) == 2;
  auto is_two_edge = [&](EdgeId e) { return two[g.flat_end_a(e)] && two[g.flat_end_b(e)]; };
  std::vector<char> seen(g.n(), 0);
  std::vector<EdgeId> out;
  auto two_edges_at = [&](int f) {
    std::vector<EdgeId> es;
    for (EdgeId e : g.incident_flat(f)) {
      if (is_two_edge(e)) es.push_back(e);
    }
    return es;
  };
  auto walk = [&](int start, EdgeId first) {
    // Follows a path or cycle of G[V2] from start, taking every third edge.
    std::vector<EdgeId> path;
    int cur = start;
    EdgeId via = first;
    seen[start] = 1;
    while (via >= 0) {
      path.push_back(via);
      int nxt = g.flat(g.other_end(via, g.vertex(cur)));
      if (seen[nxt]) break;
      seen[nxt] = 1;
      EdgeId next_edge = -1;
      for (EdgeId e : two_edges_at(nxt)) {
        if (e != via) next_edge = e;
      }
      cur = nxt;
      via = next_edge;
    }
    return path;
  };
  for (int f = 0; f < g.n(); ++f) {
    if (!two[f] || seen[f]) continue;
    auto es = two_edges_at(f);
    if (es.size() == 1) {
      auto path = walk(f, es[0]);
      for (std::size_t i = 0; i < path.size(); i += 3) out.push_back(path[i]);
    } else if (es.empty()) {
      seen[f] = 1;
    }
  }
  for (int f = 0; f < g.n(); ++f) {
    if (!two[f] || seen[f]) continue;
    auto es = two_edges_at(f);
    auto cyc = walk(f, es[0]);
    for (std::size_t i = 0; i + 2 < cyc.size(); i += 3) out.push_back(cyc[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool BoundCheck::all_hold() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundResult& b) { return b.holds || b.exempt; });
}

BoundCheck evaluate_bounds(const BipGraph& g) {
  BoundCheck bc;
  const ExtremalReport r = extremal_counts(g);
  const bool c4 = is_c4(g);
  const long n = r.n, m = r.m, excess = m - n + 2;
  bc.induced_matching = induced_two_edge_matching(g);
  auto at_least = [&](std::string name, long lhs, long rhs, bool exempt) {
    bc.bounds.push_back({std::move(name), lhs, rhs, lhs >= rhs, exempt, lhs - rhs});
  };
  at_least("induced_matching", static_cast<long>(bc.induced_matching.size()), excess, c4);
  at_least("v2_excess", r.v2, 2 * excess, false);
  at_least("v2_order", 2L * r.v2, n + 4, false);
  bc.bounds.push_back({"size", 2 * m, 3 * n - 6, 2 * m <= 3 * n - 6, c4, (3 * n - 6) - 2 * m});
  at_least("e2_order", 6L * r.e2, n + 10, false);
  return bc;
}

BoundCheck check_bounds(const BipGraph& g) {
  if (!is_matching_covered(g) || !is_minimal_mc(g)) throw Error(ErrorCode::kNotMinimal, "input is not minimal matching covered");
  return evaluate_bounds(g);
}

IdentityCheck counting_identities(const BipGraph& g) {
  if (is_c4(g)) throw Error(ErrorCode::kPreconditionFailed, "C4 is excluded");
  if (!is_matching_covered(g) || !is_minimal_mc(g) || !extremal_counts(g).flags[kH2]) {
    throw Error(ErrorCode::kPreconditionFailed, "input is not 2-vertex extremal");
  }
  const ExtremalReport r = extremal_counts(g);
  const long n = r.n, m = r.m;
  IdentityCheck ic;
  ic.v3 = r.v3 == 3 * n - 2 * m - 4;
  ic.e32 = r.e32 == 2 * m - 2 * n + 4;
  ic.e3 = r.e3 == 3 * n - 2 * m - 6 && r.e3 == r.v3 - 2;
  return ic;
}

bool e2_is_perfect_matching_of_v2(const BipGraph& g) {
  for (int f = 0; f < g.n(); ++f) {
    if (g.degree_flat(f) != 2) continue;
    int count = 0;
    for (EdgeId e : g.incident_flat(f)) {
      if (g.degree_flat(g.flat_end_a(e)) == 2 && g.degree_flat(g.flat_end_b(e)) == 2) ++count;
    }
    if (count != 1) return false;
  }
  return true;
}

bool is_forest(const BipGraph& g) { return g.m() == g.n() - component_count(g); }

bool high_degree_part_is_forest(const BipGraph& g, int d) {
  std::vector<Vertex> vs;
  for (int f = 0; f < g.n(); ++f) {
    if (g.degree_flat(f) >= d) vs.push_back(g.vertex(f));
  }
  return is_forest(induced_subgraph(g, vs).graph);
}

}  // namespace bipmc
