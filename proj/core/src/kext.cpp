#include "bipmc/kext.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "bipmc/matching.hpp"

namespace bipmc {

namespace {

const std::vector<char> kNone;

struct KMatchings {
  const BipGraph& g;
  int k;
  MatchingEngine engine;
  std::vector<char> off;
  std::vector<EdgeId> chosen;
  long checked = 0;
  bool failed = false;

  KMatchings(const BipGraph& graph, int kk) : g(graph), k(kk), engine(graph), off(graph.n(), 0) {}

  void run(EdgeId from) {
    if (failed) return;
    if (static_cast<int>(chosen.size()) == k) {
      ++checked;
      if (!engine.perfect_after(off, kNone)) failed = true;
      return;
    }
    for (EdgeId e = from; e < g.m() && !failed; ++e) {
      int fa = g.flat_end_a(e), fb = g.flat_end_b(e);
      if (off[fa] || off[fb]) continue;
      off[fa] = off[fb] = 1;
      chosen.push_back(e);
      run(e + 1);
      if (failed) return;
      chosen.pop_back();
      off[fa] = off[fb] = 0;
    }
  }
};

}  // namespace

KExtendReport k_extendable_direct(const BipGraph& g, int k) {
  KExtendReport r;
  r.k = k;
  r.engine = KExtEngine::kDirect;
  if (k < 0) throw Error(ErrorCode::kBadParams, "k must be non-negative");
  if (k == 0) {
    r.verdict = is_matchable(g).verdict;
    if (!r.verdict) r.reason = "not matchable";
    return r;
  }
  if (!is_connected(g)) {
    r.reason = "disconnected";
    return r;
  }
  if (g.n() < 2 * k + 2) {
    r.reason = "order below 2k+2";
    return r;
  }
  KMatchings km(g, k);
  km.run(0);
  r.matchings_checked = km.checked;
  if (km.failed) {
    r.reason = "a k-matching does not extend";
    r.failing = km.chosen;
    return r;
  }
  if (km.checked == 0) {
    r.reason = "no k-matching";
    return r;
  }
  r.verdict = true;
  return r;
}

KExtendReport k_extendable_hall(const BipGraph& g, int k) {
  KExtendReport r;
  r.k = k;
  r.engine = KExtEngine::kHall;
  if (k < 0) throw Error(ErrorCode::kBadParams, "k must be non-negative");
  if (k > 0 && !is_connected(g)) {
    r.reason = "disconnected";
    return r;
  }
  if (g.n() < 2 * k + 2 && k > 0) {
    r.reason = "order below 2k+2";
    return r;
  }
  if (g.a_count() != g.b_count()) {
    r.reason = "unequal classes";
    return r;
  }
  const int na = g.a_count();
  if (na > 20) throw Error(ErrorCode::kBudgetExceeded, "Hall engine handles at most 20 vertices per class");
  std::vector<std::uint32_t> nbr(na, 0);
  for (const Edge& e : g.edges()) nbr[e.a] |= 1u << e.b;
  const std::uint32_t full = na == 32 ? ~0u : (1u << na) - 1;
  std::vector<std::uint32_t> n_of(std::size_t{1} << na, 0);
  for (std::uint32_t s = 1; s < (1u << na); ++s) {
    int low = std::countr_zero(s);
    std::uint32_t ns = n_of[s & (s - 1)] | nbr[low];
    n_of[s] = ns;
    if (ns == full && k > 0) continue;
    int size_s = std::popcount(s), size_n = std::popcount(ns);
    if (size_n < size_s + k) {
      r.reason = "Hall condition fails";
      for (int i = 0; i < na; ++i) {
        if (s >> i & 1u) r.violator.push_back(vertex_a(i));
        if (ns >> i & 1u) r.neighbors.push_back(vertex_b(i));
      }
      return r;
    }
  }
  r.verdict = true;
  return r;
}

KExtendReport is_k_extendable(const BipGraph& g, int k) {
  KExtendReport direct = k_extendable_direct(g, k);
  if (g.a_count() == g.b_count() && g.a_count() > 20) return direct;
  KExtendReport hall = k_extendable_hall(g, k);
  if (direct.verdict != hall.verdict) {
    throw Error(ErrorCode::kInvariantViolation,
                "k-extendability engines disagree for k=" + std::to_string(k) + " (direct: " +
                    (direct.reason.empty() ? "yes" : direct.reason) + ", Hall: " + (hall.reason.empty() ? "yes" : hall.reason) + ")");
  }
  if (!direct.verdict) {
    direct.violator = hall.violator;
    direct.neighbors = hall.neighbors;
  }
  return direct;
}

bool validate_kext_certificate(const BipGraph& g, const KExtendReport& r) {
  if (r.verdict) return true;
  if (!r.failing.empty()) {
    Matching m{r.failing};
    if (m.size() != r.k || !is_matching(g, m)) return false;
    std::vector<Vertex> ends;
    for (EdgeId e : r.failing) {
      ends.push_back(g.end(e, Side::A));
      ends.push_back(g.end(e, Side::B));
    }
    return !is_conformal(g, ends);
  }
  if (!r.violator.empty()) {
    std::vector<char> in_n(g.b_count(), 0), in_s(g.a_count(), 0);
    for (Vertex v : r.violator) {
      if (v.side != Side::A || !g.has_vertex(v)) return false;
      in_s[v.index] = 1;
    }
    for (const Edge& e : g.edges()) {
      if (in_s[e.a]) in_n[e.b] = 1;
    }
    std::vector<Vertex> nb;
    for (int b = 0; b < g.b_count(); ++b) {
      if (in_n[b]) nb.push_back(vertex_b(b));
    }
    std::vector<Vertex> listed = r.neighbors;
    std::sort(listed.begin(), listed.end());
    if (listed != nb) return false;
    int s = 0;
    for (char c : in_s) s += c;
    bool all_b = static_cast<int>(nb.size()) == g.b_count();
    return !all_b && static_cast<int>(nb.size()) < s + r.k;
  }
  if (r.reason == "disconnected") return !is_connected(g);
  if (r.reason == "order below 2k+2") return g.n() < 2 * r.k + 2;
  if (r.reason == "unequal classes") return g.a_count() != g.b_count();
  if (r.reason == "not matchable") return !is_matchable(g).verdict;
  if (r.reason == "no k-matching") return max_matching(g).size() < r.k;
  return false;
}

namespace {

// Max flow with unit capacities per edge copy; stops once the value exceeds limit.
struct FlowNet {
  int n;
  std::vector<int> cap;  // n*n residual capacities
  explicit FlowNet(const BipGraph& g) : n(g.n()), cap(static_cast<std::size_t>(g.n()) * g.n(), 0) {
    for (EdgeId e = 0; e < g.m(); ++e) {
      int x = g.flat_end_a(e), y = g.flat_end_b(e);
      ++cap[x * n + y];
      ++cap[y * n + x];
    }
  }

  int max_flow(const std::vector<int>& sources, const std::vector<int>& sinks, int limit) const {
    std::vector<int> res = cap;
    std::vector<char> is_src(n, 0), is_snk(n, 0);
    for (int s : sources) is_src[s] = 1;
    for (int t : sinks) is_snk[t] = 1;
    int flow = 0;
    std::vector<int> prev(n);
    std::vector<int> queue;
    while (flow <= limit) {
      std::fill(prev.begin(), prev.end(), -2);
      queue.clear();
      for (int s : sources) {
        prev[s] = -1;
        queue.push_back(s);
      }
      int hit = -1;
      for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
        int x = queue[qi];
        for (int y = 0; y < n; ++y) {
          if (prev[y] != -2 || res[x * n + y] <= 0) continue;
          prev[y] = x;
          if (is_snk[y]) {
            hit = y;
            break;
          }
          queue.push_back(y);
        }
      }
      if (hit < 0) break;
      for (int y = hit; prev[y] != -1; y = prev[y]) {
        int x = prev[y];
        --res[x * n + y];
        ++res[y * n + x];
      }
      ++flow;
    }
    return flow;
  }
};

int min_cut_containing(const BipGraph& g, const FlowNet& net, int x, int y, int limit) {
  int best = std::numeric_limits<int>::max();
  for (int x2 = 0; x2 < g.n(); ++x2) {
    if (x2 == x || x2 == y) continue;
    for (int y2 = 0; y2 < g.n(); ++y2) {
      if (y2 == x || y2 == y || y2 == x2) continue;
      best = std::min(best, net.max_flow({x, x2}, {y, y2}, std::min(best, limit + 1)));
      if (best <= limit) return best;
    }
  }
  return best;
}

}  // namespace

bool edge_in_nontrivial_cut_of_size(const BipGraph& g, EdgeId e, int size) {
  if (g.n() < 4) return false;
  FlowNet net(g);
  return min_cut_containing(g, net, g.flat_end_a(e), g.flat_end_b(e), size) <= size;
}

std::vector<EdgeId> superfluous_edges(const BipGraph& g, int k) {
  if (!is_k_extendable(g, k).verdict) throw Error(ErrorCode::kNotKExtendable, "input is not " + std::to_string(k) + "-extendable");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (g.degree_flat(g.flat_end_a(e)) == k + 1 || g.degree_flat(g.flat_end_b(e)) == k + 1) continue;
    if (k > 0 && edge_in_nontrivial_cut_of_size(g, e, 2 * k)) continue;
    if (is_k_extendable(remove(g, {}, {e}).graph, k).verdict) out.push_back(e);
  }
  return out;
}

bool is_minimal_k_extendable(const BipGraph& g, int k) { return superfluous_edges(g, k).empty(); }

int essential_edge_connectivity(const BipGraph& g, ConnectivityMethod method) {
  const int n = g.n();
  if (n < 4) throw Error(ErrorCode::kPreconditionFailed, "order below four");
  if (method == ConnectivityMethod::kAuto) method = n <= 20 ? ConnectivityMethod::kExhaustive : ConnectivityMethod::kFlow;
  if (method == ConnectivityMethod::kExhaustive) {
    if (n > 24) throw Error(ErrorCode::kTooLarge, "exhaustive shore search handles at most 24 vertices");
    int best = std::numeric_limits<int>::max();
    std::vector<std::pair<int, int>> ends;
    for (EdgeId e = 0; e < g.m(); ++e) ends.push_back({g.flat_end_a(e), g.flat_end_b(e)});
    // Shores contain vertex 0.
    for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
      std::uint32_t w = (rest << 1) | 1u;
      int size = std::popcount(w);
      if (size < 2 || n - size < 2) continue;
      int cut = 0;
      for (auto [x, y] : ends) cut += ((w >> x) ^ (w >> y)) & 1u;
      best = std::min(best, cut);
    }
    return best;
  }
  FlowNet net(g);
  int best = std::numeric_limits<int>::max();
  for (int s2 = 1; s2 < n; ++s2) {
    for (int t = 1; t < n; ++t) {
      if (t == s2) continue;
      for (int t2 = t + 1; t2 < n; ++t2) {
        if (t2 == s2) continue;
        best = std::min(best, net.max_flow({0, s2}, {t, t2}, best));
      }
    }
  }
  return best;
}

const BoundLine& BoundsReport::line(const std::string& name) const {
  for (const auto& l : lines) {
    if (l.name == name) return l;
  }
  throw Error(ErrorCode::kNotFound, "no bound named " + name);
}

BoundsReport evaluate_kext_bounds(const BipGraph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kBadParams, "k must be positive");
  BoundsReport r;
  r.k = k;
  r.forest = false;
  long v = 0;
  std::vector<Vertex> high;
  for (int f = 0; f < g.n(); ++f) {
    if (g.degree_flat(f) == k + 1) ++v;
    if (g.degree_flat(f) >= k + 2) high.push_back(g.vertex(f));
  }
  Removal h = induced_subgraph(g, high);
  r.forest = h.graph.m() == h.graph.n() - component_count(h.graph);
  const long n = g.n(), m = g.m(), kk = k;
  auto at_least = [&](std::string name, bool conj, long lhs, long rhs) {
    r.lines.push_back({std::move(name), conj, lhs, rhs, lhs >= rhs, lhs - rhs});
  };
  auto at_most = [&](std::string name, bool conj, long lhs, long rhs) {
    r.lines.push_back({std::move(name), conj, lhs, rhs, lhs <= rhs, rhs - lhs});
  };
  at_least("lou_order", false, (2 * kk + 1) * v, kk * n + 2);
  at_least("lou_excess", false, kk * v, m - n + 1);
  at_most("lou_size", false, m, (kk + 1) * n - 1);
  at_least("conj_excess", true, (2 * kk - 1) * v, 2 * (m - n + 2 * kk));
  at_least("conj_order", true, 2 * v, n + 4);
  at_most("conj_size", true, 2 * m, (2 * kk + 1) * (n - 2 * kk));
  r.size_threshold_reached = n >= 4 * kk * kk + 2 * kk;
  return r;
}

BoundsReport bounds_report(const BipGraph& g, int k) {
  if (!is_k_extendable(g, k).verdict || !is_minimal_k_extendable(g, k)) {
    throw Error(ErrorCode::kNotMinimalKExtendable, "input is not minimal " + std::to_string(k) + "-extendable");
  }
  return evaluate_kext_bounds(g, k);
}

HereditaryReport hereditary_checks(const BipGraph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kBadParams, "k must be positive");
  if (!is_k_extendable(g, k).verdict) throw Error(ErrorCode::kNotKExtendable, "input is not " + std::to_string(k) + "-extendable");
  HereditaryReport rep;
  for (int a = 0; a < g.a_count() && rep.ok; ++a) {
    for (int b = 0; b < g.b_count(); ++b) {
      ++rep.vertex_pairs;
      if (!is_k_extendable(remove(g, {vertex_a(a), vertex_b(b)}, {}).graph, k - 1).verdict) {
        rep.ok = false;
        rep.failure = "G-a" + std::to_string(a) + "-b" + std::to_string(b) + " is not " + std::to_string(k - 1) + "-extendable";
        break;
      }
    }
  }
  for (EdgeId e = 0; e < g.m() && rep.ok; ++e) {
    const Edge x = g.edge(e);
    for (EdgeId f = e + 1; f < g.m(); ++f) {
      const Edge y = g.edge(f);
      if (x.a == y.a || x.b == y.b) continue;
      bool linked = false;
      for (EdgeId z = 0; z < g.m() && !linked; ++z) {
        const Edge w = g.edge(z);
        linked = (w.a == x.a && w.b == y.b) || (w.a == y.a && w.b == x.b);
      }
      if (!linked) continue;
      ++rep.edge_pairs;
      if (!is_k_extendable(remove(g, {}, {e, f}).graph, k - 1).verdict) {
        rep.ok = false;
        rep.failure = "G-e" + std::to_string(e) + "-e" + std::to_string(f) + " is not " + std::to_string(k - 1) + "-extendable";
        break;
      }
    }
  }
  return rep;
}

}  // namespace bipmc
