#include "bipmc/recognize.hpp"

#include <algorithm>
#include <map>

#include "bipmc/classify.hpp"
#include "bipmc/transform.hpp"

namespace bipmc {

bool is_halin(const Tree& t) {
  if (t.size() < 2) return false;
  for (int v = 0; v < t.size(); ++v) {
    if (t.degree(v) == 2) return false;
  }
  return true;
}

bool is_cubic_halin(const Tree& t) { return is_halin(t) && is_regular_r_tree(t, 3); }

bool is_star(const Tree& t) {
  if (t.size() < 3) return false;
  for (int v = 0; v < t.size(); ++v) {
    if (t.degree(v) == t.size() - 1) return true;
  }
  return false;
}

bool is_r_tree(const Tree& t, int r) {
  if (t.size() < 2) return false;
  for (int v : t.non_leaves()) {
    if (t.degree(v) < r) return false;
  }
  return true;
}

bool is_regular_r_tree(const Tree& t, int r) {
  if (t.size() < 2) return false;
  for (int v : t.non_leaves()) {
    if (t.degree(v) != r) return false;
  }
  return true;
}

TreeFlags tree_predicates(const Tree& t) { return {is_halin(t), is_cubic_halin(t), is_star(t)}; }

namespace {

struct Coded {
  const Tree& t;
  const std::vector<std::string>& label;
  std::vector<std::string> code;
  std::vector<int> parent;

  std::string run(int v, int p) {
    parent[v] = p;
    std::vector<std::string> kids;
    for (int w : t.neighbors(v)) {
      if (w != p) kids.push_back(run(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + label[v];
    for (const auto& k : kids) s += k;
    s += ")";
    code[v] = s;
    return s;
  }
};

void pair_up(const Coded& x, const Coded& y, int u, int v, std::vector<int>& iso) {
  iso[u] = v;
  std::vector<std::pair<std::string, int>> cu, cv;
  for (int w : x.t.neighbors(u)) {
    if (w != x.parent[u]) cu.push_back({x.code[w], w});
  }
  for (int w : y.t.neighbors(v)) {
    if (w != y.parent[v]) cv.push_back({y.code[w], w});
  }
  std::sort(cu.begin(), cu.end());
  std::sort(cv.begin(), cv.end());
  for (std::size_t i = 0; i < cu.size(); ++i) pair_up(x, y, cu[i].second, cv[i].second, iso);
}

}  // namespace

std::optional<std::vector<int>> tree_isomorphism(const Tree& t1, const Tree& t2, const std::vector<int>& leaf_constraint) {
  if (t1.size() != t2.size()) return std::nullopt;
  const int n = t1.size();
  std::vector<std::string> l1(n), l2(n);
  if (!leaf_constraint.empty()) {
    if (static_cast<int>(leaf_constraint.size()) != n) return std::nullopt;
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      int y = leaf_constraint[x];
      if (y < 0) continue;
      if (y >= n || hit[y]) return std::nullopt;
      hit[y] = 1;
      l1[x] = l2[y] = std::to_string(x);
    }
  }
  auto c1 = t1.centers(), c2 = t2.centers();
  if (c1.size() != c2.size()) return std::nullopt;
  Coded x{t1, l1, std::vector<std::string>(n), std::vector<int>(n, -1)};
  std::string root1 = x.run(c1[0], -1);
  for (int r2 : c2) {
    Coded y{t2, l2, std::vector<std::string>(n), std::vector<int>(n, -1)};
    if (y.run(r2, -1) != root1) continue;
    std::vector<int> iso(n, -1);
    pair_up(x, y, c1[0], r2, iso);
    return iso;
  }
  return std::nullopt;
}

namespace {

Tree tree_of(const BipGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.a, g.a_count() + e.b});
  return Tree(g.n(), edges);
}

std::optional<LeafMatchingWitness> cycle_witness(const BipGraph& g) {
  // Walk the cycle c0 .. c_{2k-1}; the tree is the path c0..c_{k-1}, mirrored by c_{2k-1}..c_k.
  std::vector<Vertex> cyc;
  std::vector<EdgeId> cedges;
  Vertex cur = vertex_a(0);
  EdgeId via = -1;
  do {
    cyc.push_back(cur);
    auto inc = g.incident(cur);
    EdgeId next = inc[0] == via ? inc[1] : inc[0];
    cedges.push_back(next);
    cur = g.other_end(next, cur);
    via = next;
  } while (cur != vertex_a(0));
  const int len = static_cast<int>(cyc.size());
  if (len != g.n() || len < 4) return std::nullopt;
  const int k = len / 2;
  LeafMatchingWitness w;
  w.tree = Tree::path(k);
  w.tree_prime = Tree::path(k);
  for (int i = 0; i < k; ++i) {
    w.tree_to_host.push_back(cyc[i]);
    w.tree_prime_to_host.push_back(cyc[len - 1 - i]);
    w.iso.push_back(i);
  }
  w.pairing = {cedges[len - 1], cedges[k - 1]};
  std::sort(w.pairing.begin(), w.pairing.end());
  return w;
}

}  // namespace

std::optional<LeafMatchingWitness> recognize_leaf_matching(const BipGraph& g) {
  if (is_cycle(g)) {
    if (g.n() % 2 != 0 || g.n() < 4) return std::nullopt;
    return cycle_witness(g);
  }
  if (g.n() < 4 || !is_connected(g)) return std::nullopt;
  std::vector<EdgeId> e2;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (g.degree_flat(g.flat_end_a(e)) == 2 && g.degree_flat(g.flat_end_b(e)) == 2) e2.push_back(e);
  }
  if (e2.empty()) return std::nullopt;
  Removal r = remove(g, {}, e2);
  auto comps = components(r.graph);
  if (comps.size() != 2) return std::nullopt;
  std::vector<Tree> trees;
  std::vector<std::vector<Vertex>> host(2);
  std::vector<int> which(g.n(), -1), local(g.n(), -1);
  for (int c = 0; c < 2; ++c) {
    const BipGraph& h = comps[c].graph;
    if (h.m() != h.n() - 1 || h.n() < 2) return std::nullopt;
    for (int f = 0; f < h.n(); ++f) {
      Vertex hv = r.to_parent[r.graph.flat(comps[c].to_parent[f])];
      int pf = g.flat(hv);
      int d = h.degree_flat(f);
      if (d == 2) return std::nullopt;
      if ((d == 1) != (g.degree_flat(pf) == 2)) return std::nullopt;
      host[c].push_back(hv);
      which[pf] = c;
      local[pf] = f;
    }
    trees.push_back(tree_of(h));
  }
  const int tn = trees[0].size();
  if (trees[1].size() != tn) return std::nullopt;
  std::vector<int> constraint(tn, -1);
  std::vector<EdgeId> pairing;
  for (EdgeId e : e2) {
    int fa = g.flat_end_a(e), fb = g.flat_end_b(e);
    if (which[fa] == which[fb]) return std::nullopt;
    int x = which[fa] == 0 ? fa : fb, y = which[fa] == 0 ? fb : fa;
    if (constraint[local[x]] >= 0) return std::nullopt;
    constraint[local[x]] = local[y];
    pairing.push_back(e);
  }
  for (int v : trees[0].leaves()) {
    if (constraint[v] < 0) return std::nullopt;
  }
  auto iso = tree_isomorphism(trees[0], trees[1], constraint);
  if (!iso) return std::nullopt;
  LeafMatchingWitness w;
  w.tree = trees[0];
  w.tree_prime = trees[1];
  w.tree_to_host = host[0];
  w.tree_prime_to_host = host[1];
  w.iso = *iso;
  w.pairing = pairing;
  return w;
}

std::optional<LeafMatchingWitness> recognize_h2(const BipGraph& g) {
  auto w = recognize_leaf_matching(g);
  if (w && is_halin(w->tree)) return w;
  return std::nullopt;
}

std::optional<LeafMatchingWitness> recognize_h3(const BipGraph& g) {
  auto w = recognize_leaf_matching(g);
  if (w && is_cubic_halin(w->tree)) return w;
  return std::nullopt;
}

std::optional<LeafMatchingWitness> recognize_h4(const BipGraph& g) {
  auto w = recognize_leaf_matching(g);
  if (w && is_star(w->tree)) return w;
  return std::nullopt;
}

namespace {

std::optional<Retract> safe_retract(const BipGraph& g) {
  try {
    return partial_retract(g);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParallelNeighbors) return std::nullopt;
    throw;
  }
}

}  // namespace

RetractRecognition recognize_h0(const BipGraph& g) {
  RetractRecognition out;
  if (is_c4(g)) return out;
  auto r = safe_retract(g);
  if (!r) return out;
  out.retract = r->graph;
  out.witness = recognize_h2(r->graph);
  out.verdict = out.witness.has_value();
  return out;
}

RetractRecognition recognize_h1(const BipGraph& g) {
  RetractRecognition out;
  auto r = safe_retract(g);
  if (!r) return out;
  out.retract = r->graph;
  out.witness = recognize_h4(r->graph);
  out.verdict = out.witness.has_value() && g.max_degree() == 3;
  return out;
}

}  // namespace bipmc
