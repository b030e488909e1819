#include "bipmc/ears.hpp"

#include <algorithm>
#include <set>

namespace bipmc {

namespace {

struct Growth {
  const BipGraph& g;
  std::vector<char> in_v;
  std::vector<char> in_e;
  std::vector<EdgeId> mate;  // by flat id; a perfect matching respecting the current union
  int edges_in = 0;
  int vertices_in = 0;

  void add_vertex(Vertex v) {
    if (!in_v[g.flat(v)]) {
      in_v[g.flat(v)] = 1;
      ++vertices_in;
    }
  }
  void add_edge(EdgeId e) {
    if (!in_e[e]) {
      in_e[e] = 1;
      ++edges_in;
    }
  }

  Ear next_ear() {
    EdgeId e = -1;
    for (EdgeId x = 0; x < g.m(); ++x) {
      if (!in_e[x] && (in_v[g.flat_end_a(x)] || in_v[g.flat_end_b(x)])) {
        e = x;
        break;
      }
    }
    if (e < 0) throw Error(ErrorCode::kNotMatchingCovered, "graph is disconnected");
    Ear ear;
    bool a_in = in_v[g.flat_end_a(e)], b_in = in_v[g.flat_end_b(e)];
    if (a_in && b_in) {
      ear.vertices = {g.end(e, Side::A), g.end(e, Side::B)};
      ear.edges = {e};
      return ear;
    }
    auto other = perfect_matching_with(g, e);
    if (!other) throw Error(ErrorCode::kNotMatchingCovered, "edge " + std::to_string(e) + " is not matchable");
    std::vector<EdgeId> mate2(g.n(), -1);
    for (EdgeId x : other->edge_ids) mate2[g.flat_end_a(x)] = mate2[g.flat_end_b(x)] = x;
    Vertex x = a_in ? g.end(e, Side::A) : g.end(e, Side::B);
    ear.vertices.push_back(x);
    ear.edges.push_back(e);
    Vertex cur = g.other_end(e, x);
    bool use_fixed = true;
    while (!in_v[g.flat(cur)]) {
      ear.vertices.push_back(cur);
      EdgeId step = use_fixed ? mate[g.flat(cur)] : mate2[g.flat(cur)];
      ear.edges.push_back(step);
      cur = g.other_end(step, cur);
      use_fixed = !use_fixed;
    }
    ear.vertices.push_back(cur);
    return ear;
  }

  void absorb(const Ear& ear) {
    for (Vertex v : ear.vertices) add_vertex(v);
    for (EdgeId e : ear.edges) add_edge(e);
  }

  bool done() const { return edges_in == g.m(); }
};

std::vector<EdgeId> mate_table(const BipGraph& g, const Matching& m) {
  std::vector<EdgeId> mate(g.n(), -1);
  for (EdgeId x : m.edge_ids) mate[g.flat_end_a(x)] = mate[g.flat_end_b(x)] = x;
  return mate;
}

void require_mc(const BipGraph& g) {
  if (g.n() < 4) throw Error(ErrorCode::kNotMatchingCovered, "order below four");
  if (!is_connected(g)) throw Error(ErrorCode::kNotMatchingCovered, "graph is disconnected");
  auto flags = matchable_edges(g);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!flags[e]) throw Error(ErrorCode::kNotMatchingCovered, "edge " + std::to_string(e) + " is not matchable");
  }
}

Cycle initial_cycle(const BipGraph& g, std::vector<EdgeId>& mate) {
  const EdgeId e0 = 0;
  auto m0 = perfect_matching_with(g, e0);
  if (!m0) throw Error(ErrorCode::kNotMatchingCovered, "edge 0 is not matchable");
  Vertex a = g.end(e0, Side::A), b = g.end(e0, Side::B);
  std::optional<Matching> m1;
  for (EdgeId f : g.incident(a)) {
    if (g.end(f, Side::B) != b) {
      m1 = perfect_matching_with(g, f);
      if (m1) break;
    }
  }
  if (!m1) throw Error(ErrorCode::kNotMatchingCovered, "edge 0 lies in every perfect matching");
  mate = mate_table(g, *m0);
  auto mate1 = mate_table(g, *m1);
  Cycle c;
  Vertex cur = a;
  bool first = true;
  do {
    EdgeId x = first ? mate[g.flat(cur)] : mate1[g.flat(cur)];
    c.vertices.push_back(cur);
    c.edges.push_back(x);
    cur = g.other_end(x, cur);
    first = !first;
  } while (cur != a);
  return c;
}

EarDecomposition grow(Growth& gr, EarDecomposition ed) {
  while (!gr.done()) {
    Ear ear = gr.next_ear();
    gr.absorb(ear);
    ed.ears.push_back(std::move(ear));
  }
  return ed;
}

}  // namespace

EarDecomposition find_ear_decomposition(const BipGraph& g) {
  require_mc(g);
  Growth gr{g, std::vector<char>(g.n(), 0), std::vector<char>(g.m(), 0), {}, 0, 0};
  EarDecomposition ed;
  ed.initial_cycle = initial_cycle(g, gr.mate);
  for (Vertex v : ed.initial_cycle.vertices) gr.add_vertex(v);
  for (EdgeId e : ed.initial_cycle.edges) gr.add_edge(e);
  return grow(gr, std::move(ed));
}

EarDecomposition find_ear_decomposition_through(const BipGraph& g, const std::vector<Vertex>& h_vertices,
                                                const std::vector<EdgeId>& h_edge_ids) {
  require_mc(g);
  Removal h = subgraph(g, h_vertices, h_edge_ids);
  if (!is_matching_covered(h.graph)) {
    throw Error(ErrorCode::kPreconditionFailed, "subgraph is not matching covered");
  }
  if (!is_conformal(g, h_vertices)) throw Error(ErrorCode::kPreconditionFailed, "subgraph is not conformal");
  EarDecomposition inner = find_ear_decomposition(h.graph);
  auto up_v = [&](Vertex v) { return h.to_parent[h.graph.flat(v)]; };
  auto up_e = [&](EdgeId e) { return h.edge_to_parent[e]; };
  EarDecomposition ed;
  for (Vertex v : inner.initial_cycle.vertices) ed.initial_cycle.vertices.push_back(up_v(v));
  for (EdgeId e : inner.initial_cycle.edges) ed.initial_cycle.edges.push_back(up_e(e));
  for (const Ear& ear : inner.ears) {
    Ear out;
    for (Vertex v : ear.vertices) out.vertices.push_back(up_v(v));
    for (EdgeId e : ear.edges) out.edges.push_back(up_e(e));
    ed.ears.push_back(std::move(out));
  }
  Growth gr{g, std::vector<char>(g.n(), 0), std::vector<char>(g.m(), 0), {}, 0, 0};
  for (Vertex v : h_vertices) gr.add_vertex(v);
  for (EdgeId e : h_edge_ids) gr.add_edge(e);
  // Perfect matching of H together with one of G - V(H).
  Matching mh = max_matching(h.graph);
  gr.mate.assign(g.n(), -1);
  for (EdgeId e : mh.edge_ids) {
    EdgeId pe = up_e(e);
    gr.mate[g.flat_end_a(pe)] = gr.mate[g.flat_end_b(pe)] = pe;
  }
  Removal rest = remove(g, h_vertices, {});
  Matching mr = max_matching(rest.graph);
  for (EdgeId e : mr.edge_ids) {
    EdgeId pe = rest.edge_to_parent[e];
    gr.mate[g.flat_end_a(pe)] = gr.mate[g.flat_end_b(pe)] = pe;
  }
  return grow(gr, std::move(ed));
}

EarVerification verify_ear_decomposition(const BipGraph& g, const EarDecomposition& ed) {
  auto fail = [](std::string why) { return EarVerification{false, std::move(why)}; };
  std::vector<char> in_v(g.n(), 0), in_e(g.m(), 0);
  const Cycle& c = ed.initial_cycle;
  const int len = static_cast<int>(c.vertices.size());
  if (len < 4 || len % 2 != 0) return fail("initial cycle: even length of at least four required");
  if (static_cast<int>(c.edges.size()) != len) return fail("initial cycle: edge count mismatch");
  for (int i = 0; i < len; ++i) {
    Vertex v = c.vertices[i];
    EdgeId e = c.edges[i];
    if (!g.has_vertex(v) || !g.has_edge(e)) return fail("initial cycle: unknown vertex or edge");
    if (in_v[g.flat(v)]) return fail("initial cycle: repeated vertex " + to_string(v));
    if (in_e[e]) return fail("initial cycle: repeated edge " + std::to_string(e));
    Vertex w = c.vertices[(i + 1) % len];
    if (!g.incident_to(e, v) || !g.incident_to(e, w) || v.side == w.side) {
      return fail("initial cycle: edge " + std::to_string(e) + " does not join consecutive vertices");
    }
    in_v[g.flat(v)] = 1;
    in_e[e] = 1;
  }
  std::vector<Vertex> prefix = c.vertices;
  if (!is_conformal(g, prefix)) return fail("initial cycle: not conformal");
  for (std::size_t k = 0; k < ed.ears.size(); ++k) {
    const Ear& ear = ed.ears[k];
    const std::string tag = "ear " + std::to_string(k + 1) + ": ";
    const int el = ear.length();
    if (el < 1 || static_cast<int>(ear.vertices.size()) != el + 1) return fail(tag + "malformed path");
    if (el % 2 == 0) return fail(tag + "odd length required");
    for (int i = 0; i <= el; ++i) {
      Vertex v = ear.vertices[i];
      if (!g.has_vertex(v)) return fail(tag + "unknown vertex");
      bool end = i == 0 || i == el;
      if (end && !in_v[g.flat(v)]) return fail(tag + "end " + to_string(v) + " outside the union");
      if (!end && in_v[g.flat(v)]) return fail(tag + "interior vertex " + to_string(v) + " already present");
    }
    if (ear.vertices.front() == ear.vertices.back()) return fail(tag + "ends coincide");
    for (int i = 0; i < el; ++i) {
      EdgeId e = ear.edges[i];
      if (!g.has_edge(e)) return fail(tag + "unknown edge");
      if (in_e[e]) return fail(tag + "edge " + std::to_string(e) + " already present");
      if (!g.incident_to(e, ear.vertices[i]) || !g.incident_to(e, ear.vertices[i + 1]) ||
          ear.vertices[i].side == ear.vertices[i + 1].side) {
        return fail(tag + "edge " + std::to_string(e) + " does not join consecutive vertices");
      }
      in_e[e] = 1;
    }
    for (int i = 1; i < el; ++i) {
      if (in_v[g.flat(ear.vertices[i])]) return fail(tag + "interior repeats a vertex");
      in_v[g.flat(ear.vertices[i])] = 1;
      prefix.push_back(ear.vertices[i]);
    }
    if (!is_conformal(g, prefix)) return fail(tag + "prefix union not conformal");
  }
  if (std::find(in_v.begin(), in_v.end(), 0) != in_v.end()) return fail("union misses a vertex");
  if (std::find(in_e.begin(), in_e.end(), 0) != in_e.end()) return fail("union misses an edge");
  if (static_cast<int>(ed.ears.size()) != g.m() - g.n()) return fail("ear count differs from m-n");
  return {true, {}};
}

}  // namespace bipmc
