#include "bipmc/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace bipmc {

namespace {

using Adj = std::vector<std::vector<std::pair<int, int>>>;  // (neighbour, multiplicity)

void multi_adjacency(const BipGraph& g, int offset, Adj& adj) {
  std::map<std::pair<int, int>, int> mult;
  for (EdgeId e = 0; e < g.m(); ++e) ++mult[{g.flat_end_a(e), g.flat_end_b(e)}];
  for (auto [key, c] : mult) {
    adj[offset + key.first].push_back({offset + key.second, c});
    adj[offset + key.second].push_back({offset + key.first, c});
  }
}

struct Search {
  Adj adj;
  int n;

  // Refines the joint colouring of both halves; false if the halves become unbalanced.
  bool refine(std::vector<int>& color) const {
    const int total = 2 * n;
    int classes = -1;
    for (;;) {
      std::vector<std::pair<std::vector<int>, int>> sig(total);
      for (int v = 0; v < total; ++v) {
        std::vector<int> s{color[v]};
        std::vector<int> nb;
        for (auto [w, c] : adj[v]) nb.push_back(color[w] * 64 + std::min(c, 63));
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        sig[v] = {std::move(s), v};
      }
      std::vector<std::vector<int>> keys;
      for (auto& s : sig) keys.push_back(s.first);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (int v = 0; v < total; ++v) {
        color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
      }
      std::vector<int> count(keys.size(), 0);
      for (int v = 0; v < n; ++v) ++count[color[v]];
      for (int v = n; v < total; ++v) --count[color[v]];
      if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;
      int now = static_cast<int>(keys.size());
      if (now == classes) return true;
      classes = now;
    }
  }

  bool twins(int x, int y) const {
    auto a = adj[x], b = adj[y];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool check(const std::vector<int>& color, std::vector<int>& map) const {
    std::vector<int> where(2 * n + 1, -1);
    for (int v = n; v < 2 * n; ++v) where[color[v]] = v - n;
    map.assign(n, -1);
    for (int v = 0; v < n; ++v) map[v] = where[color[v]];
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> a, b;
      for (auto [w, c] : adj[v]) a.push_back({map[w], c});
      for (auto [w, c] : adj[n + map[v]]) b.push_back({w - n, c});
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
    return true;
  }

  bool run(std::vector<int> color, std::vector<int>& map) const {
    if (!refine(color)) return false;
    std::vector<int> size(2 * n + 1, 0);
    for (int v = 0; v < n; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < 2 * n; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) return check(color, map);
    int x = -1;
    for (int v = 0; v < n && x < 0; ++v) {
      if (color[v] == target) x = v;
    }
    std::vector<int> tried;
    for (int y = n; y < 2 * n; ++y) {
      if (color[y] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, y); })) continue;
      tried.push_back(y);
      std::vector<int> next(color.size());
      for (std::size_t v = 0; v < color.size(); ++v) next[v] = 2 * color[v] + 1;
      next[x] = next[y] = 2 * target;
      if (run(next, map)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const BipGraph& g, const BipGraph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
  const int n = g.n();
  if (n == 0) return std::vector<int>{};
  Search s{Adj(2 * n), n};
  multi_adjacency(g, 0, s.adj);
  multi_adjacency(h, n, s.adj);
  std::vector<int> color(2 * n, 0);
  std::vector<int> map;
  if (!s.run(color, map)) return std::nullopt;
  return map;
}

bool are_isomorphic(const BipGraph& g, const BipGraph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace bipmc
