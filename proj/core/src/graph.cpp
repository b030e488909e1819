#include "bipmc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bipmc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kNotPresent: return "NotPresent";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kTrivialTree: return "TrivialTree";
    case ErrorCode::kNotMatchingCovered: return "NotMatchingCovered";
    case ErrorCode::kNoSuchCycle: return "NoSuchCycle";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kDegreeTooLow: return "DegreeTooLow";
    case ErrorCode::kNotMinimal: return "NotMinimal";
    case ErrorCode::kNotDegreeTwo: return "NotDegreeTwo";
    case ErrorCode::kParallelNeighbors: return "ParallelNeighbors";
    case ErrorCode::kRestrictionViolated: return "RestrictionViolated";
    case ErrorCode::kBadPartition: return "BadPartition";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kNotBalanced2Cut: return "NotBalanced2Cut";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kNotKExtendable: return "NotKExtendable";
    case ErrorCode::kNotMinimalKExtendable: return "NotMinimalKExtendable";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Error";
}

std::string to_string(Vertex v) {
  return (v.side == Side::A ? "a" : "b") + std::to_string(v.index);
}

BipGraph::BipGraph(int a_count, int b_count, std::vector<Edge> edges)
    : a_count_(a_count), b_count_(b_count), edges_(std::move(edges)) {
  if (a_count < 0 || b_count < 0) throw Error(ErrorCode::kInvalidEdge, "negative class size");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.a < 0 || e.a >= a_count_ || e.b < 0 || e.b >= b_count_) {
      throw Error(ErrorCode::kInvalidEdge, "edge " + std::to_string(i) + " (" + std::to_string(e.a) +
                                               "," + std::to_string(e.b) + ") out of range");
    }
  }
  const int n = a_count_ + b_count_;
  offset_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offset_[e.a + 1];
    ++offset_[a_count_ + e.b + 1];
  }
  for (int i = 0; i < n; ++i) offset_[i + 1] += offset_[i];
  inc_.resize(2 * edges_.size());
  std::vector<int> pos(offset_.begin(), offset_.end() - 1);
  for (int i = 0; i < m(); ++i) {
    inc_[pos[edges_[i].a]++] = i;
    inc_[pos[a_count_ + edges_[i].b]++] = i;
  }
}

std::vector<Vertex> BipGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId e : incident(v)) out.push_back(other_end(e, v));
  return out;
}

std::vector<Vertex> BipGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(n());
  for (int i = 0; i < n(); ++i) out.push_back(vertex(i));
  return out;
}

int BipGraph::min_degree() const {
  int d = n() == 0 ? 0 : m() * 2 + 1;
  for (int i = 0; i < n(); ++i) d = std::min(d, degree_flat(i));
  return d;
}

int BipGraph::max_degree() const {
  int d = 0;
  for (int i = 0; i < n(); ++i) d = std::max(d, degree_flat(i));
  return d;
}

bool BipGraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (!seen.insert({e.a, e.b}).second) return false;
  }
  return true;
}

BipGraph build(int a_count, int b_count, const std::vector<std::pair<int, int>>& edge_pairs) {
  std::vector<Edge> edges;
  edges.reserve(edge_pairs.size());
  for (auto [a, b] : edge_pairs) edges.push_back({a, b});
  return BipGraph(a_count, b_count, std::move(edges));
}

bool is_matching(const BipGraph& g, const Matching& m) {
  std::vector<char> used(g.n(), 0);
  for (EdgeId e : m.edge_ids) {
    if (!g.has_edge(e)) return false;
    int fa = g.flat_end_a(e), fb = g.flat_end_b(e);
    if (used[fa] || used[fb]) return false;
    used[fa] = used[fb] = 1;
  }
  return true;
}

bool is_perfect_matching(const BipGraph& g, const Matching& m) {
  return is_matching(g, m) && 2 * m.size() == g.n();
}

namespace {

Removal keep(const BipGraph& g, const std::vector<char>& vertex_keep, const std::vector<char>& edge_keep) {
  Removal r;
  r.vertex_map.assign(g.n(), std::nullopt);
  r.edge_map.assign(g.m(), std::nullopt);
  int na = 0, nb = 0;
  std::vector<Vertex> a_parents, b_parents;
  for (int f = 0; f < g.n(); ++f) {
    if (!vertex_keep[f]) continue;
    Vertex v = g.vertex(f);
    if (v.side == Side::A) {
      r.vertex_map[f] = vertex_a(na++);
      a_parents.push_back(v);
    } else {
      r.vertex_map[f] = vertex_b(nb++);
      b_parents.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!edge_keep[e]) continue;
    const auto& va = r.vertex_map[g.flat_end_a(e)];
    const auto& vb = r.vertex_map[g.flat_end_b(e)];
    if (!va || !vb) continue;
    r.edge_map[e] = static_cast<EdgeId>(edges.size());
    r.edge_to_parent.push_back(e);
    edges.push_back({va->index, vb->index});
  }
  r.graph = BipGraph(na, nb, std::move(edges));
  r.to_parent = a_parents;
  r.to_parent.insert(r.to_parent.end(), b_parents.begin(), b_parents.end());
  return r;
}

}  // namespace

Removal remove(const BipGraph& g, const std::vector<Vertex>& vertices, const std::vector<EdgeId>& edge_ids) {
  std::vector<char> vk(g.n(), 1), ek(g.m(), 1);
  for (Vertex v : vertices) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::kNotPresent, "vertex " + to_string(v));
    vk[g.flat(v)] = 0;
  }
  for (EdgeId e : edge_ids) {
    if (!g.has_edge(e)) throw Error(ErrorCode::kNotPresent, "edge " + std::to_string(e));
    ek[e] = 0;
  }
  return keep(g, vk, ek);
}

Removal subgraph(const BipGraph& g, const std::vector<Vertex>& vertices, const std::vector<EdgeId>& edge_ids) {
  std::vector<char> vk(g.n(), 0), ek(g.m(), 0);
  for (Vertex v : vertices) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::kNotPresent, "vertex " + to_string(v));
    vk[g.flat(v)] = 1;
  }
  for (EdgeId e : edge_ids) {
    if (!g.has_edge(e)) throw Error(ErrorCode::kNotPresent, "edge " + std::to_string(e));
    if (!vk[g.flat_end_a(e)] || !vk[g.flat_end_b(e)]) {
      throw Error(ErrorCode::kNotPresent, "edge " + std::to_string(e) + " has an end outside the subgraph");
    }
    ek[e] = 1;
  }
  return keep(g, vk, ek);
}

Removal induced_subgraph(const BipGraph& g, const std::vector<Vertex>& vertices) {
  std::vector<char> vk(g.n(), 0), ek(g.m(), 1);
  for (Vertex v : vertices) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::kNotPresent, "vertex " + to_string(v));
    vk[g.flat(v)] = 1;
  }
  return keep(g, vk, ek);
}

std::vector<int> component_labels(const BipGraph& g) {
  std::vector<int> label(g.n(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      Vertex v = g.vertex(f);
      for (EdgeId e : g.incident_flat(f)) {
        int w = g.flat(g.other_end(e, v));
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const BipGraph& g) {
  auto label = component_labels(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const BipGraph& g) { return component_count(g) <= 1; }

std::vector<Component> components(const BipGraph& g) {
  auto label = component_labels(g);
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<Component> out;
  for (int c = 0; c < count; ++c) {
    std::vector<Vertex> vs;
    for (int f = 0; f < g.n(); ++f) {
      if (label[f] == c) vs.push_back(g.vertex(f));
    }
    Removal r = induced_subgraph(g, vs);
    out.push_back({std::move(r.graph), std::move(r.to_parent), std::move(r.edge_to_parent)});
  }
  return out;
}

bool is_two_connected(const BipGraph& g) {
  const int n = g.n();
  if (n < 3 || !is_connected(g)) return false;
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
  int timer = 0;
  bool articulation = false;
  // Iterative DFS from vertex 0.
  struct Frame {
    int v;
    std::size_t i;
  };
  std::vector<Frame> st{{0, 0}};
  disc[0] = low[0] = timer++;
  int root_children = 0;
  while (!st.empty()) {
    Frame& fr = st.back();
    auto inc = g.incident_flat(fr.v);
    if (fr.i < inc.size()) {
      EdgeId e = inc[fr.i++];
      if (e == parent_edge[fr.v]) continue;
      int w = g.flat(g.other_end(e, g.vertex(fr.v)));
      if (disc[w] < 0) {
        parent_edge[w] = e;
        disc[w] = low[w] = timer++;
        if (fr.v == 0) ++root_children;
        st.push_back({w, 0});
      } else {
        low[fr.v] = std::min(low[fr.v], disc[w]);
      }
    } else {
      int v = fr.v;
      st.pop_back();
      if (!st.empty()) {
        int p = st.back().v;
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) articulation = true;
      }
    }
  }
  if (root_children > 1) articulation = true;
  return !articulation;
}

EdgeCut boundary(const BipGraph& g, const std::vector<Vertex>& shore) {
  std::vector<char> in(g.n(), 0);
  EdgeCut cut;
  for (Vertex v : shore) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::kNotPresent, "vertex " + to_string(v));
    if (!in[g.flat(v)]) cut.shore.push_back(v);
    in[g.flat(v)] = 1;
  }
  std::sort(cut.shore.begin(), cut.shore.end());
  for (EdgeId e = 0; e < g.m(); ++e) {
    bool ia = in[g.flat_end_a(e)], ib = in[g.flat_end_b(e)];
    if (ia == ib) continue;
    cut.edge_ids.push_back(e);
    if (ia) ++cut.a_side_count; else ++cut.b_side_count;
  }
  const int w = static_cast<int>(cut.shore.size());
  cut.trivial = w <= 1 || g.n() - w <= 1;
  return cut;
}

std::vector<Vertex> complement(const BipGraph& g, const std::vector<Vertex>& shore) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : shore) in[g.flat(v)] = 1;
  std::vector<Vertex> out;
  for (int f = 0; f < g.n(); ++f) {
    if (!in[f]) out.push_back(g.vertex(f));
  }
  return out;
}

void check_handshake(const BipGraph& g) {
  long sum = 0;
  for (int f = 0; f < g.n(); ++f) sum += g.degree_flat(f);
  if (sum != 2L * g.m()) throw Error(ErrorCode::kInvariantViolation, "handshake sum mismatch");
}

}  // namespace bipmc
