#include "bipmc/tree.hpp"

#include <algorithm>
#include <functional>

namespace bipmc {

Tree::Tree(int vertex_count, std::vector<std::pair<int, int>> edges)
    : edges_(std::move(edges)), adj_(vertex_count) {
  if (vertex_count < 1) throw Error(ErrorCode::kNotATree, "empty vertex set");
  if (static_cast<int>(edges_.size()) != vertex_count - 1) {
    throw Error(ErrorCode::kNotATree, "edge count must be vertex count minus one");
  }
  for (auto [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count || u == v) {
      throw Error(ErrorCode::kNotATree, "bad edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) throw Error(ErrorCode::kNotATree, "not connected");
}

Tree Tree::star(int p) {
  if (p < 1) throw Error(ErrorCode::kBadParams, "star needs at least one leaf");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= p; ++i) e.push_back({0, i});
  return Tree(p + 1, e);
}

Tree Tree::path(int vertex_count) {
  if (vertex_count < 1) throw Error(ErrorCode::kBadParams, "path needs a vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < vertex_count; ++i) e.push_back({i, i + 1});
  return Tree(vertex_count, e);
}

// Non-leaves 0 and 1 of degrees p and q, then their leaves.
Tree Tree::double_star(int p, int q) {
  if (p < 2 || q < 2) throw Error(ErrorCode::kBadParams, "double star needs degrees of at least two");
  std::vector<std::pair<int, int>> e{{0, 1}};
  int next = 2;
  for (int i = 0; i + 1 < p; ++i) e.push_back({0, next++});
  for (int i = 0; i + 1 < q; ++i) e.push_back({1, next++});
  return Tree(next, e);
}

std::vector<int> Tree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> Tree::non_leaves() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (!is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> Tree::centers() const {
  const int n = size();
  if (n <= 2) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> deg(n), layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int u : layer) {
      for (int w : adj_[u]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::vector<int> Tree::coloring() const {
  std::vector<int> color(size(), -1);
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj_[u]) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        stack.push_back(w);
      }
    }
  }
  return color;
}

namespace {

std::string rooted_code(const Tree& t, int root, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(root)) {
    if (w != parent) kids.push_back(rooted_code(t, w, root));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::string canonical_code(const Tree& t) {
  auto c = t.centers();
  if (c.size() == 1) return rooted_code(t, c[0], -1);
  std::string x = rooted_code(t, c[0], c[1]);
  std::string y = rooted_code(t, c[1], c[0]);
  if (y < x) std::swap(x, y);
  return "[" + x + y + "]";
}

}  // namespace bipmc
