#include "bipmc/construct.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bipmc/recognize.hpp"

namespace bipmc {

Construction k_leaf_matching(const Tree& t, int k) {
  if (t.size() < 2) throw Error(ErrorCode::kTrivialTree, "tree needs at least two vertices");
  if (k < 1) throw Error(ErrorCode::kBadParams, "k must be positive");
  const int tn = t.size();
  const auto color = t.coloring();
  int counts[2] = {0, 0};
  auto place = [&](bool prime) {
    std::vector<std::vector<Vertex>> copies(k, std::vector<Vertex>(tn));
    for (int x = 0; x < tn; ++x) {
      Side s = (color[x] == 0) != prime ? Side::A : Side::B;
      const int reps = t.is_leaf(x) ? 1 : k;
      for (int c = 0; c < reps; ++c) {
        Vertex v{s, counts[static_cast<int>(s)]++};
        if (t.is_leaf(x)) {
          for (int d = 0; d < k; ++d) copies[d][x] = v;
        } else {
          copies[c][x] = v;
        }
      }
    }
    return copies;
  };
  Construction out;
  ConstructionWitness& w = out.witness;
  w.kind = k == 1 ? ConstructionKind::kLeafMatching : ConstructionKind::kKLeafMatching;
  w.tree = t;
  w.k = k;
  w.copies = place(false);
  w.copies_prime = place(true);
  std::vector<Edge> edges;
  auto join = [&](Vertex x, Vertex y) {
    edges.push_back(x.side == Side::A ? Edge{x.index, y.index} : Edge{y.index, x.index});
  };
  for (const auto* side : {&w.copies, &w.copies_prime}) {
    for (int c = 0; c < k; ++c) {
      for (auto [x, y] : t.edges()) join((*side)[c][x], (*side)[c][y]);
    }
  }
  for (int l : t.leaves()) {
    w.pairing.push_back(static_cast<EdgeId>(edges.size()));
    join(w.copies[0][l], w.copies_prime[0][l]);
  }
  out.graph = BipGraph(counts[0], counts[1], std::move(edges));
  return out;
}

Construction leaf_matching(const Tree& t) { return k_leaf_matching(t, 1); }

JGraph J(int p, int r) {
  if (p < 0 || r < p) throw Error(ErrorCode::kBadParams, "J needs r >= p >= 0");
  JGraph j;
  if (p == 0) {
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) {
      edges.push_back({i, i});
      j.b_r.push_back(vertex_b(i));
      j.a_r.push_back(vertex_a(i));
    }
    j.graph = BipGraph(r, r, std::move(edges));
    return j;
  }
  Construction c = k_leaf_matching(Tree::star(r), p);
  const auto& w = c.witness;
  for (int i = 0; i < p; ++i) {
    if (std::find(j.a_u.begin(), j.a_u.end(), w.copies[i][0]) == j.a_u.end()) j.a_u.push_back(w.copies[i][0]);
    if (std::find(j.b_v.begin(), j.b_v.end(), w.copies_prime[i][0]) == j.b_v.end()) {
      j.b_v.push_back(w.copies_prime[i][0]);
    }
  }
  for (int l = 1; l <= r; ++l) {
    j.b_r.push_back(w.copies[0][l]);
    j.a_r.push_back(w.copies_prime[0][l]);
  }
  j.graph = std::move(c.graph);
  return j;
}

BipGraph double_star_graph(int p, int q, int k) {
  if (p < 2 || q < 2 || k < 1) throw Error(ErrorCode::kBadParams, "double star needs p, q >= 2 and k >= 1");
  const int size[4] = {p - 1, k, q - 1, k};
  int start[4];
  int total = 0;
  for (int i = 0; i < 4; ++i) {
    start[i] = total;
    total += size[i];
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    for (int x = 0; x < size[i]; ++x) edges.push_back({start[i] + x, start[i] + x});
  }
  for (int i = 0; i < 4; ++i) {
    int nxt = (i + 1) % 4;
    for (int x = 0; x < size[i]; ++x) {
      for (int y = 0; y < size[nxt]; ++y) edges.push_back({start[i] + x, start[nxt] + y});
    }
  }
  return BipGraph(total, total, std::move(edges));
}

Construction replace_edge_with_J(const BipGraph& g, EdgeId uv, int p, int r) {
  if (!g.has_edge(uv)) throw Error(ErrorCode::kNotPresent, "edge " + std::to_string(uv));
  if (p < 0 || r < p) throw Error(ErrorCode::kBadParams, "J needs r >= p >= 0");
  const Vertex u = g.end(uv, Side::A), v = g.end(uv, Side::B);
  if (g.degree(u) != p + 1 || g.degree(v) != p + 1) {
    throw Error(ErrorCode::kDegreeMismatch, "both ends must have degree " + std::to_string(p + 1));
  }
  auto others = [&](Vertex x, Vertex skip) {
    std::vector<Vertex> out;
    bool skipped = false;
    for (Vertex w : g.neighbors(x)) {
      if (w == skip && !skipped) {
        skipped = true;
        continue;
      }
      out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      throw Error(ErrorCode::kDegreeMismatch, "neighbours of " + to_string(x) + " are not distinct");
    }
    return out;
  };
  const auto nu = others(u, v), nv = others(v, u);
  Removal rest = remove(g, {u, v}, {});
  JGraph j = J(p, r);
  const int ra = rest.graph.a_count(), rb = rest.graph.b_count();
  std::vector<Edge> edges = rest.graph.edges();
  for (const Edge& e : j.graph.edges()) edges.push_back({e.a + ra, e.b + rb});
  for (int i = 0; i < p; ++i) {
    Vertex nb = *rest.vertex_map[g.flat(nu[i])];
    edges.push_back({j.a_u[i].index + ra, nb.index});
  }
  for (int i = 0; i < p; ++i) {
    Vertex na = *rest.vertex_map[g.flat(nv[i])];
    edges.push_back({na.index, j.b_v[i].index + rb});
  }
  Construction out;
  out.graph = BipGraph(ra + j.graph.a_count(), rb + j.graph.b_count(), std::move(edges));
  out.witness.kind = ConstructionKind::kReplaceEdge;
  out.witness.k = p;
  out.witness.p = p;
  out.witness.r = r;
  out.witness.replaced = uv;
  out.witness.source = g;
  return out;
}

BipGraph replay(const ConstructionWitness& w) {
  switch (w.kind) {
    case ConstructionKind::kLeafMatching:
    case ConstructionKind::kKLeafMatching:
      return k_leaf_matching(w.tree, w.k).graph;
    case ConstructionKind::kJ:
      return J(w.p, w.r).graph;
    case ConstructionKind::kDoubleStar:
      return double_star_graph(w.p, w.q, w.k);
    case ConstructionKind::kReplaceEdge:
      return replace_edge_with_J(w.source, w.replaced, w.p, w.r).graph;
  }
  return {};
}

bool TreePredicate::operator()(const Tree& t) const {
  switch (filter) {
    case TreeFilter::kAll: return true;
    case TreeFilter::kHalin: return is_halin(t);
    case TreeFilter::kCubicHalin: return is_cubic_halin(t);
    case TreeFilter::kRTree: return is_r_tree(t, r);
    case TreeFilter::kRegularRTree: return is_regular_r_tree(t, r);
    case TreeFilter::kStar: return is_star(t);
  }
  return false;
}

void for_each_tree(int max_n, TreePredicate pred, const std::function<void(const Tree&)>& fn) {
  if (max_n < 1) return;
  std::vector<Tree> level{Tree(1, {})};
  for (int n = 1;; ++n) {
    for (const Tree& t : level) {
      if (pred(t)) fn(t);
    }
    if (n == max_n) break;
    std::map<std::string, Tree> next;
    for (const Tree& t : level) {
      for (int v = 0; v < t.size(); ++v) {
        auto edges = t.edges();
        edges.push_back({v, t.size()});
        Tree child(t.size() + 1, std::move(edges));
        next.try_emplace(canonical_code(child), std::move(child));
      }
    }
    level.clear();
    for (auto& [code, tree] : next) level.push_back(std::move(tree));
  }
}

std::vector<Tree> enumerate_trees(int max_n, TreePredicate pred) {
  std::vector<Tree> out;
  for_each_tree(max_n, pred, [&](const Tree& t) { out.push_back(t); });
  return out;
}

Tree parse_tree_spec(const std::string& spec) {
  std::istringstream in(spec);
  std::string kind;
  in >> kind;
  auto read_int = [&](const char* what) {
    long x;
    if (!(in >> x)) throw Error(ErrorCode::kBadParams, std::string("tree spec: missing ") + what);
    return static_cast<int>(x);
  };
  auto finish = [&]() {
    std::string extra;
    if (in >> extra) throw Error(ErrorCode::kBadParams, "tree spec: unexpected '" + extra + "'");
  };
  if (kind == "star") {
    int p = read_int("P");
    finish();
    return Tree::star(p);
  }
  if (kind == "path") {
    int n = read_int("N");
    finish();
    return Tree::path(n);
  }
  if (kind == "doublestar") {
    int p = read_int("P");
    int q = read_int("Q");
    finish();
    return Tree::double_star(p, q);
  }
  if (kind == "edges") {
    int n = read_int("N");
    std::vector<std::pair<int, int>> edges;
    std::string tok;
    while (in >> tok) {
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw Error(ErrorCode::kBadParams, "tree spec: bad edge '" + tok + "'");
      try {
        edges.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
      } catch (const std::exception&) {
        throw Error(ErrorCode::kBadParams, "tree spec: bad edge '" + tok + "'");
      }
    }
    return Tree(n, edges);
  }
  throw Error(ErrorCode::kBadParams, "tree spec: unknown kind '" + kind + "'");
}

}  // namespace bipmc
