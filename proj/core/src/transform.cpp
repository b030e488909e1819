#include "bipmc/transform.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace bipmc {

namespace {

Edge make_edge(Vertex x, Vertex y) {
  return x.side == Side::A ? Edge{x.index, y.index} : Edge{y.index, x.index};
}

bool has_parallel_pair(const BipGraph& g, Vertex x) {
  std::set<Vertex> seen;
  for (Vertex w : g.neighbors(x)) {
    if (!seen.insert(w).second) return true;
  }
  return false;
}

}  // namespace

Contraction bicontract(const BipGraph& g, Vertex v, bool restricted) {
  if (!g.has_vertex(v)) throw Error(ErrorCode::kNotPresent, "vertex " + to_string(v));
  if (g.degree(v) != 2) throw Error(ErrorCode::kNotDegreeTwo, to_string(v) + " has degree " + std::to_string(g.degree(v)));
  auto inc = g.incident(v);
  const EdgeId e1 = inc[0], e2 = inc[1];
  const Vertex w1 = g.other_end(e1, v), w2 = g.other_end(e2, v);
  if (w1 == w2) throw Error(ErrorCode::kParallelNeighbors, "both edges of " + to_string(v) + " reach " + to_string(w1));
  if (restricted && (g.degree(w1) < 3 || g.degree(w2) < 3)) {
    throw Error(ErrorCode::kRestrictionViolated, "a neighbour of " + to_string(v) + " has degree two");
  }
  const Vertex lo = std::min(w1, w2), hi = std::max(w1, w2);
  const Side vs = v.side, ws = opposite(v.side);
  auto map_v_side = [&](int i) { return i - (i > v.index ? 1 : 0); };
  auto map_w_side = [&](int i) { return i == hi.index ? lo.index : i - (i > hi.index ? 1 : 0); };
  Contraction c;
  c.merged = lo;
  c.vertex_map.assign(g.n(), std::nullopt);
  for (int f = 0; f < g.n(); ++f) {
    Vertex x = g.vertex(f);
    if (x == v) continue;
    c.vertex_map[f] = x.side == vs ? Vertex{vs, map_v_side(x.index)} : Vertex{ws, map_w_side(x.index)};
  }
  std::vector<Edge> edges;
  c.edge_map.assign(g.m(), std::nullopt);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (e == e1 || e == e2) continue;
    Vertex x = *c.vertex_map[g.flat_end_a(e)], y = *c.vertex_map[g.flat_end_b(e)];
    c.edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.push_back(make_edge(x, y));
  }
  const int na = g.a_count() - (vs == Side::A ? 1 : 0) - (ws == Side::A ? 1 : 0);
  const int nb = g.b_count() - (vs == Side::B ? 1 : 0) - (ws == Side::B ? 1 : 0);
  c.graph = BipGraph(na, nb, std::move(edges));
  c.created_parallel = has_parallel_pair(c.graph, lo) && !has_parallel_pair(g, lo) && !has_parallel_pair(g, hi);
  check_handshake(c.graph);
  return c;
}

Split bisplit(const BipGraph& g, Vertex v, const std::vector<EdgeId>& f1, const std::vector<EdgeId>& f2,
              bool restricted) {
  if (!g.has_vertex(v)) throw Error(ErrorCode::kNotPresent, "vertex " + to_string(v));
  std::vector<EdgeId> all(g.incident(v).begin(), g.incident(v).end());
  std::vector<EdgeId> joined = f1;
  joined.insert(joined.end(), f2.begin(), f2.end());
  std::sort(joined.begin(), joined.end());
  std::sort(all.begin(), all.end());
  if (f1.empty() || f2.empty() || joined != all) {
    throw Error(ErrorCode::kBadPartition, "edge sets must partition the edges at " + to_string(v));
  }
  if (restricted && (f1.size() < 2 || f2.size() < 2)) {
    throw Error(ErrorCode::kRestrictionViolated, "restricted bisplit needs two edges on each side");
  }
  Split s;
  s.v1 = v;
  s.v2 = Vertex{v.side, g.count(v.side)};
  s.center = Vertex{opposite(v.side), g.count(opposite(v.side))};
  std::vector<Edge> edges = g.edges();
  for (EdgeId e : f2) {
    if (v.side == Side::A) edges[e].a = s.v2.index; else edges[e].b = s.v2.index;
  }
  edges.push_back(make_edge(s.center, s.v1));
  edges.push_back(make_edge(s.center, s.v2));
  s.graph = BipGraph(g.a_count() + 1, g.b_count() + 1, std::move(edges));
  check_handshake(s.graph);
  return s;
}

namespace {

// Smallest-flat candidates for restricted bicontraction; throws on a doubled edge.
std::vector<int> contractible(const BipGraph& g) {
  std::vector<int> out;
  for (int f = 0; f < g.n(); ++f) {
    if (g.degree_flat(f) != 2) continue;
    Vertex v = g.vertex(f);
    auto inc = g.incident_flat(f);
    Vertex w1 = g.other_end(inc[0], v), w2 = g.other_end(inc[1], v);
    if (w1 == w2) {
      if (g.degree(w1) >= 3) throw Error(ErrorCode::kParallelNeighbors, "doubled edge at " + to_string(v));
      continue;
    }
    if (g.degree(w1) >= 3 && g.degree(w2) >= 3) out.push_back(f);
  }
  return out;
}

Retract retract_with(const BipGraph& g, std::mt19937_64* rng) {
  Retract r;
  r.graph = g;
  for (;;) {
    auto cand = contractible(r.graph);
    if (cand.empty()) break;
    int pick = cand.front();
    if (rng) pick = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(*rng)];
    Vertex v = r.graph.vertex(pick);
    Contraction c = bicontract(r.graph, v, true);
    r.trace.push_back(v);
    if (c.created_parallel) ++r.parallel_created;
    r.graph = std::move(c.graph);
  }
  return r;
}

}  // namespace

Retract partial_retract(const BipGraph& g) { return retract_with(g, nullptr); }

Retract partial_retract_shuffled(const BipGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return retract_with(g, &rng);
}

EdgeCut find_balanced_2cut_with(const BipGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw Error(ErrorCode::kNotPresent, "edge " + std::to_string(e));
  auto three = [&](EdgeId x) { return g.degree_flat(g.flat_end_a(x)) >= 3 && g.degree_flat(g.flat_end_b(x)) >= 3; };
  if (!three(e)) throw Error(ErrorCode::kNotFound, "edge " + std::to_string(e) + " is not a 3-edge");
  for (EdgeId f = 0; f < g.m(); ++f) {
    if (f == e || !three(f)) continue;
    Removal r = remove(g, {}, {e, f});
    auto label = component_labels(r.graph);
    std::vector<Vertex> shore;
    for (int x = 0; x < g.n(); ++x) {
      if (label[x] == 0) shore.push_back(g.vertex(x));
    }
    if (static_cast<int>(shore.size()) == g.n()) continue;
    EdgeCut cut = boundary(g, shore);
    if (cut.size() == 2 && cut.balanced() && !cut.trivial) return cut;
  }
  throw Error(ErrorCode::kNotFound, "no balanced 2-cut contains edge " + std::to_string(e));
}

std::pair<TwoCutPart, TwoCutPart> two_cut_decompose(const BipGraph& g, const EdgeCut& cut) {
  if (cut.shore.empty()) throw Error(ErrorCode::kNotBalanced2Cut, "empty shore");
  EdgeCut fresh = boundary(g, cut.shore);
  if (fresh.size() != 2 || !fresh.balanced() || fresh.trivial) {
    throw Error(ErrorCode::kNotBalanced2Cut, "cut is not a balanced nontrivial 2-cut");
  }
  std::vector<char> in_x(g.n(), 0);
  for (Vertex v : fresh.shore) in_x[g.flat(v)] = 1;
  auto part = [&](bool x_side) {
    std::vector<Vertex> shore;
    for (int f = 0; f < g.n(); ++f) {
      if (static_cast<bool>(in_x[f]) == x_side) shore.push_back(g.vertex(f));
    }
    // a: shore end in A, b: shore end in B.
    Vertex a{}, b{};
    for (EdgeId e : fresh.edge_ids) {
      Vertex ea = g.end(e, Side::A), eb = g.end(e, Side::B);
      if (static_cast<bool>(in_x[g.flat(ea)]) == x_side) a = ea; else b = eb;
    }
    Removal r = induced_subgraph(g, shore);
    TwoCutPart p;
    const int na = r.graph.a_count(), nb = r.graph.b_count();
    p.u = vertex_a(na);
    p.v = vertex_b(nb);
    Vertex ra = *r.vertex_map[g.flat(a)], rb = *r.vertex_map[g.flat(b)];
    std::vector<Edge> edges = r.graph.edges();
    edges.push_back({ra.index, p.v.index});
    p.uv = static_cast<EdgeId>(edges.size());
    edges.push_back({p.u.index, p.v.index});
    edges.push_back({p.u.index, rb.index});
    p.graph = BipGraph(na + 1, nb + 1, std::move(edges));
    for (int f = 0; f < p.graph.n(); ++f) {
      Vertex x = p.graph.vertex(f);
      if (x == p.u || x == p.v) p.to_parent.push_back(std::nullopt);
      else p.to_parent.push_back(r.to_parent[r.graph.flat(x)]);
    }
    return p;
  };
  return {part(true), part(false)};
}

SpliceSpec make_splice_spec(const BipGraph& g1, EdgeId e1, const BipGraph& g2, EdgeId e2) {
  SpliceSpec s{g1, g2, e1, e2, {}, {}, {}, {}, {}, {}, {}, {}};
  auto attach = [](const BipGraph& g, EdgeId e, Vertex& u, Vertex& v, Vertex& a, Vertex& b) {
    if (!g.has_edge(e)) throw Error(ErrorCode::kNotPresent, "edge " + std::to_string(e));
    u = g.end(e, Side::A);
    v = g.end(e, Side::B);
    if (g.degree(u) != 2 || g.degree(v) != 2) {
      throw Error(ErrorCode::kPreconditionFailed, "edge " + std::to_string(e) + " is not a 2-edge");
    }
    auto other = [&](Vertex x) {
      auto inc = g.incident(x);
      return g.other_end(inc[0] == e ? inc[1] : inc[0], x);
    };
    a = other(v);
    b = other(u);
    if (a == u || b == v) throw Error(ErrorCode::kPreconditionFailed, "2-edge " + std::to_string(e) + " is doubled");
  };
  attach(g1, e1, s.u1, s.v1, s.a1, s.b1);
  attach(g2, e2, s.u2, s.v2, s.a2, s.b2);
  return s;
}

Splice two_edge_splice(const SpliceSpec& s) {
  auto strip = [](const BipGraph& g, Vertex u, Vertex v) { return remove(g, {u, v}, {}); };
  Removal r1 = strip(s.g1, s.u1, s.v1);
  Removal r2 = strip(s.g2, s.u2, s.v2);
  const int a1n = r1.graph.a_count(), b1n = r1.graph.b_count();
  std::vector<Edge> edges = r1.graph.edges();
  for (const Edge& e : r2.graph.edges()) edges.push_back({e.a + a1n, e.b + b1n});
  Vertex a1 = *r1.vertex_map[s.g1.flat(s.a1)], b1 = *r1.vertex_map[s.g1.flat(s.b1)];
  Vertex a2 = *r2.vertex_map[s.g2.flat(s.a2)], b2 = *r2.vertex_map[s.g2.flat(s.b2)];
  Splice out;
  out.a1b2 = static_cast<EdgeId>(edges.size());
  edges.push_back({a1.index, b2.index + b1n});
  out.a2b1 = static_cast<EdgeId>(edges.size());
  edges.push_back({a2.index + a1n, b1.index});
  out.graph = BipGraph(a1n + r2.graph.a_count(), b1n + r2.graph.b_count(), std::move(edges));
  check_handshake(out.graph);
  return out;
}

}  // namespace bipmc
