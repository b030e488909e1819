#include "bipmc/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace bipmc {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
const std::vector<char> kNone;

bool off(const std::vector<char>* mask, int i) { return mask && !mask->empty() && (*mask)[i]; }
}  // namespace

MatchingEngine::MatchingEngine(const BipGraph& g) : g_(g) {}

bool MatchingEngine::bfs() {
  std::queue<int> q;
  bool found = false;
  for (int a = 0; a < g_.a_count(); ++a) {
    if (off(vertex_off_, a)) {
      dist_[a] = kInf;
    } else if (mate_a_[a] < 0) {
      dist_[a] = 0;
      q.push(a);
    } else {
      dist_[a] = kInf;
    }
  }
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (EdgeId e : g_.incident_flat(a)) {
      if (off(edge_off_, e)) continue;
      int b = g_.edge(e).b;
      if (off(vertex_off_, g_.a_count() + b)) continue;
      EdgeId me = mate_b_[b];
      if (me < 0) {
        found = true;
      } else {
        int a2 = g_.edge(me).a;
        if (dist_[a2] == kInf) {
          dist_[a2] = dist_[a] + 1;
          q.push(a2);
        }
      }
    }
  }
  return found;
}

bool MatchingEngine::dfs(int a) {
  auto inc = g_.incident_flat(a);
  for (int& i = iter_[a]; i < static_cast<int>(inc.size()); ++i) {
    EdgeId e = inc[i];
    if (off(edge_off_, e)) continue;
    int b = g_.edge(e).b;
    if (off(vertex_off_, g_.a_count() + b)) continue;
    EdgeId me = mate_b_[b];
    if (me < 0 || (dist_[g_.edge(me).a] == dist_[a] + 1 && dfs(g_.edge(me).a))) {
      mate_a_[a] = e;
      mate_b_[b] = e;
      ++i;
      return true;
    }
  }
  dist_[a] = kInf;
  return false;
}

int MatchingEngine::max_matching_size(const std::vector<char>& vertex_off,
                                      const std::vector<char>& edge_off) {
  vertex_off_ = &vertex_off;
  edge_off_ = &edge_off;
  mate_a_.assign(g_.a_count(), -1);
  mate_b_.assign(g_.b_count(), -1);
  dist_.assign(g_.a_count(), kInf);
  int size = 0;
  while (bfs()) {
    iter_.assign(g_.a_count(), 0);
    for (int a = 0; a < g_.a_count(); ++a) {
      if (!off(vertex_off_, a) && mate_a_[a] < 0 && dfs(a)) ++size;
    }
  }
  vertex_off_ = nullptr;
  edge_off_ = nullptr;
  return size;
}

bool MatchingEngine::perfect_after(const std::vector<char>& vertex_off,
                                   const std::vector<char>& edge_off) {
  int alive_a = 0, alive_b = 0;
  for (int f = 0; f < g_.n(); ++f) {
    if (vertex_off.empty() || !vertex_off[f]) (f < g_.a_count() ? alive_a : alive_b)++;
  }
  if (alive_a != alive_b) return false;
  return max_matching_size(vertex_off, edge_off) == alive_a;
}

namespace {

Matching collect(const std::vector<EdgeId>& mate_a) {
  Matching m;
  for (EdgeId e : mate_a) {
    if (e >= 0) m.edge_ids.push_back(e);
  }
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

}  // namespace

Matching max_matching(const BipGraph& g) {
  MatchingEngine engine(g);
  engine.max_matching_size(kNone, kNone);
  return collect(engine.mate_a());
}

MatchabilityCertificate is_matchable(const BipGraph& g) {
  MatchingEngine engine(g);
  engine.max_matching_size(kNone, kNone);
  MatchabilityCertificate cert;
  const auto& ma = engine.mate_a();
  const auto& mb = engine.mate_b();
  bool a_full = std::all_of(ma.begin(), ma.end(), [](EdgeId e) { return e >= 0; });
  bool b_full = std::all_of(mb.begin(), mb.end(), [](EdgeId e) { return e >= 0; });
  if (a_full && b_full) {
    cert.verdict = true;
    cert.perfect = collect(ma);
    return cert;
  }
  // Alternating search from the unmatched vertices of a deficient class.
  const Side s = a_full ? Side::B : Side::A;
  const int cnt = g.count(s);
  const auto& mate_s = s == Side::A ? ma : mb;
  std::vector<char> in_s(cnt, 0), in_t(g.count(opposite(s)), 0);
  std::vector<int> stack;
  for (int i = 0; i < cnt; ++i) {
    if (mate_s[i] < 0) {
      in_s[i] = 1;
      stack.push_back(i);
    }
  }
  const auto& mate_t = s == Side::A ? mb : ma;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    Vertex v{s, i};
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.other_end(e, v);
      if (in_t[w.index]) continue;
      in_t[w.index] = 1;
      EdgeId me = mate_t[w.index];
      if (me >= 0) {
        int j = g.end(me, s).index;
        if (!in_s[j]) {
          in_s[j] = 1;
          stack.push_back(j);
        }
      }
    }
  }
  for (int i = 0; i < cnt; ++i) {
    if (in_s[i]) cert.violator.push_back({s, i});
  }
  for (int j = 0; j < static_cast<int>(in_t.size()); ++j) {
    if (in_t[j]) cert.neighbors.push_back({opposite(s), j});
  }
  return cert;
}

bool validate_certificate(const BipGraph& g, const MatchabilityCertificate& c) {
  if (c.verdict) return is_perfect_matching(g, c.perfect);
  if (c.violator.empty()) return false;
  const Side s = c.violator.front().side;
  std::vector<char> in(g.n(), 0), nb(g.n(), 0);
  for (Vertex v : c.violator) {
    if (v.side != s || !g.has_vertex(v)) return false;
    in[g.flat(v)] = 1;
  }
  int count_s = 0, count_n = 0;
  for (int f = 0; f < g.n(); ++f) count_s += in[f];
  for (int f = 0; f < g.n(); ++f) {
    if (!in[f]) continue;
    for (EdgeId e : g.incident_flat(f)) {
      int w = g.flat(g.other_end(e, g.vertex(f)));
      if (!nb[w]) {
        nb[w] = 1;
        ++count_n;
      }
    }
  }
  std::vector<Vertex> listed = c.neighbors;
  std::sort(listed.begin(), listed.end());
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
  if (static_cast<int>(listed.size()) != count_n) return false;
  for (Vertex v : listed) {
    if (!g.has_vertex(v) || !nb[g.flat(v)]) return false;
  }
  return count_n < count_s;
}

bool is_matchable_edge(const BipGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw Error(ErrorCode::kNotPresent, "edge " + std::to_string(e));
  std::vector<char> voff(g.n(), 0);
  voff[g.flat_end_a(e)] = 1;
  voff[g.flat_end_b(e)] = 1;
  MatchingEngine engine(g);
  return engine.perfect_after(voff, kNone);
}

std::vector<bool> matchable_edges(const BipGraph& g) {
  std::vector<bool> out(g.m(), false);
  auto cert = is_matchable(g);
  if (!cert.verdict) return out;
  const int n = g.n();
  std::vector<char> in_m(g.m(), 0);
  for (EdgeId e : cert.perfect.edge_ids) in_m[e] = 1;
  // Matching edges point A->B, the rest B->A; allowed edges lie within one SCC.
  std::vector<std::vector<int>> adj(n);
  for (EdgeId e = 0; e < g.m(); ++e) {
    int fa = g.flat_end_a(e), fb = g.flat_end_b(e);
    if (in_m[e]) adj[fa].push_back(fb); else adj[fb].push_back(fa);
  }
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stk;
  std::vector<char> on(n, 0);
  int counter = 0, comps = 0;
  struct Frame {
    int v;
    std::size_t i;
  };
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    std::vector<Frame> call{{s, 0}};
    index[s] = low[s] = counter++;
    stk.push_back(s);
    on[s] = 1;
    while (!call.empty()) {
      Frame& fr = call.back();
      if (fr.i < adj[fr.v].size()) {
        int w = adj[fr.v][fr.i++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stk.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
      } else {
        int v = fr.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          int w;
          do {
            w = stk.back();
            stk.pop_back();
            on[w] = 0;
            comp[w] = comps;
          } while (w != v);
          ++comps;
        }
      }
    }
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    out[e] = in_m[e] || comp[g.flat_end_a(e)] == comp[g.flat_end_b(e)];
  }
  return out;
}

bool is_matching_covered(const BipGraph& g) {
  if (g.n() < 4 || !is_connected(g)) return false;
  auto flags = matchable_edges(g);
  if (g.m() == 0) return false;
  return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

bool is_conformal(const BipGraph& g, const std::vector<Vertex>& sub_vertices) {
  std::vector<char> voff(g.n(), 0);
  for (Vertex v : sub_vertices) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::kNotPresent, "vertex " + to_string(v));
    voff[g.flat(v)] = 1;
  }
  MatchingEngine engine(g);
  return engine.perfect_after(voff, kNone);
}

std::optional<Matching> perfect_matching_with(const BipGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw Error(ErrorCode::kNotPresent, "edge " + std::to_string(e));
  std::vector<char> voff(g.n(), 0);
  voff[g.flat_end_a(e)] = 1;
  voff[g.flat_end_b(e)] = 1;
  MatchingEngine engine(g);
  if (!engine.perfect_after(voff, kNone)) return std::nullopt;
  Matching m = collect(engine.mate_a());
  m.edge_ids.push_back(e);
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

namespace {

struct Enumerator {
  const BipGraph& g;
  long limit;
  std::vector<char> used_b;
  std::vector<EdgeId> current;
  PerfectMatchingList out;

  bool feasible(int from_a) const {
    for (int a = from_a; a < g.a_count(); ++a) {
      bool any = false;
      for (EdgeId e : g.incident_flat(a)) {
        if (!used_b[g.edge(e).b]) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  }

  void run(int a) {
    if (out.truncated) return;
    if (a == g.a_count()) {
      if (limit >= 0 && static_cast<long>(out.matchings.size()) >= limit) {
        out.truncated = true;
        return;
      }
      Matching m{current};
      std::sort(m.edge_ids.begin(), m.edge_ids.end());
      out.matchings.push_back(std::move(m));
      return;
    }
    if (!feasible(a)) return;
    for (EdgeId e : g.incident_flat(a)) {
      int b = g.edge(e).b;
      if (used_b[b]) continue;
      used_b[b] = 1;
      current.push_back(e);
      run(a + 1);
      current.pop_back();
      used_b[b] = 0;
      if (out.truncated) return;
    }
  }
};

}  // namespace

PerfectMatchingList enumerate_perfect_matchings(const BipGraph& g, long limit) {
  Enumerator en{g, limit, std::vector<char>(g.b_count(), 0), {}, {}};
  if (g.a_count() != g.b_count()) return en.out;
  en.run(0);
  return en.out;
}

Cycle conformal_cycle_through_vertex_avoiding_edge(const BipGraph& g, Vertex u, EdgeId e) {
  if (!g.has_vertex(u) || !g.has_edge(e) || !g.incident_to(e, u)) {
    throw Error(ErrorCode::kNoSuchCycle, "edge is not incident to the vertex");
  }
  if (g.degree(u) < 3) throw Error(ErrorCode::kNoSuchCycle, "degree of " + to_string(u) + " is below 3");
  if (!is_matching_covered(g)) throw Error(ErrorCode::kNoSuchCycle, "graph is not matching covered");
  std::vector<EdgeId> others;
  for (EdgeId f : g.incident(u)) {
    if (f != e) others.push_back(f);
  }
  EdgeId f1 = others[0], f2 = others[1];
  bool found = false;
  for (std::size_t i = 0; i < others.size() && !found; ++i) {
    for (std::size_t j = i + 1; j < others.size() && !found; ++j) {
      if (g.other_end(others[i], u) != g.other_end(others[j], u)) {
        f1 = others[i];
        f2 = others[j];
        found = true;
      }
    }
  }
  auto m1 = perfect_matching_with(g, f1);
  auto m2 = perfect_matching_with(g, f2);
  if (!m1 || !m2) throw Error(ErrorCode::kNoSuchCycle, "edge not matchable");
  // Walk the symmetric difference starting along f1.
  std::vector<EdgeId> mate1(g.n(), -1), mate2(g.n(), -1);
  for (EdgeId x : m1->edge_ids) mate1[g.flat_end_a(x)] = mate1[g.flat_end_b(x)] = x;
  for (EdgeId x : m2->edge_ids) mate2[g.flat_end_a(x)] = mate2[g.flat_end_b(x)] = x;
  Cycle c;
  Vertex cur = u;
  bool use_first = true;
  do {
    EdgeId x = use_first ? mate1[g.flat(cur)] : mate2[g.flat(cur)];
    c.vertices.push_back(cur);
    c.edges.push_back(x);
    cur = g.other_end(x, cur);
    use_first = !use_first;
  } while (cur != u);
  if (std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end() || !is_conformal(g, c.vertices)) {
    throw Error(ErrorCode::kInvariantViolation, "constructed cycle is not conformal");
  }
  return c;
}

}  // namespace bipmc
