#include "bipmc/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace bipmc {

namespace {

struct Canonizer {
  const RowGraph& g;
  int rows;
  int cols;
  std::vector<std::vector<int>> adj;  // rows first, then columns
  bool have_best = false;
  std::vector<std::uint32_t> best;
  std::vector<int> best_color;

  explicit Canonizer(const RowGraph& graph) : g(graph), rows(graph.row_count()), cols(graph.cols), adj(rows + cols) {
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (g.rows[i] >> j & 1u) {
          adj[i].push_back(rows + j);
          adj[rows + j].push_back(i);
        }
      }
    }
  }

  void refine(std::vector<int>& color) const {
    const int total = rows + cols;
    int classes = -1;
    std::vector<std::vector<int>> sig(total);
    for (;;) {
      for (int v = 0; v < total; ++v) {
        sig[v].assign(1, color[v]);
        for (int w : adj[v]) sig[v].push_back(color[w]);
        std::sort(sig[v].begin() + 1, sig[v].end());
      }
      std::vector<int> order(total);
      for (int v = 0; v < total; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] < sig[y]; });
      int rank = 0;
      std::vector<int> next(total);
      for (int i = 0; i < total; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      color = std::move(next);
      if (rank + 1 == classes) return;
      classes = rank + 1;
    }
  }

  bool twins(int x, int y) const {
    if (x < rows && y < rows) return g.rows[x] == g.rows[y];
    if (x >= rows && y >= rows) {
      for (int i = 0; i < rows; ++i) {
        if ((g.rows[i] >> (x - rows) & 1u) != (g.rows[i] >> (y - rows) & 1u)) return false;
      }
      return true;
    }
    return false;
  }

  std::vector<std::uint32_t> certificate(const std::vector<int>& color) const {
    // Discrete colouring: rows take the first labels, then columns.
    std::vector<std::uint32_t> out(rows, 0);
    for (int i = 0; i < rows; ++i) {
      std::uint32_t bits = 0;
      for (int j = 0; j < cols; ++j) {
        if (g.rows[i] >> j & 1u) bits |= 1u << (color[rows + j] - rows);
      }
      out[color[i]] = bits;
    }
    return out;
  }

  void search(std::vector<int> color) {
    refine(color);
    const int total = rows + cols;
    std::vector<int> size(total, 0);
    for (int v = 0; v < total; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < total; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      auto cert = certificate(color);
      if (!have_best || cert < best) {
        have_best = true;
        best = std::move(cert);
        best_color = color;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < total; ++v) {
      if (color[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(total);
      for (int u = 0; u < total; ++u) next[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
      search(std::move(next));
    }
  }
};

}  // namespace

Canonization canonize(const RowGraph& g, int marked_row) {
  Canonizer c(g);
  const int rows = g.row_count();
  std::vector<int> color(rows + g.cols);
  for (int i = 0; i < rows; ++i) color[i] = i == marked_row ? 1 : 0;
  for (int j = 0; j < g.cols; ++j) color[rows + j] = 2;
  c.search(std::move(color));
  Canonization out;
  out.form.cols = g.cols;
  out.form.rows = c.best;
  out.row_label.resize(rows);
  out.col_label.resize(g.cols);
  for (int i = 0; i < rows; ++i) out.row_label[i] = c.best_color[i];
  for (int j = 0; j < g.cols; ++j) out.col_label[j] = c.best_color[rows + j] - rows;
  return out;
}

RowGraph transpose(const RowGraph& g) {
  RowGraph t;
  t.cols = g.row_count();
  t.rows.assign(g.cols, 0);
  for (int i = 0; i < g.row_count(); ++i) {
    for (int j = 0; j < g.cols; ++j) {
      if (g.rows[i] >> j & 1u) t.rows[j] |= 1u << i;
    }
  }
  return t;
}

bool operator<(const RowGraph& x, const RowGraph& y) {
  if (x.cols != y.cols) return x.cols < y.cols;
  return x.rows < y.rows;
}

std::string encode(const RowGraph& g) {
  std::string s = std::to_string(g.cols) + "," + std::to_string(g.row_count()) + ":";
  const int width = std::max(1, (g.cols + 3) / 4);
  char buf[16];
  for (std::uint32_t r : g.rows) {
    std::snprintf(buf, sizeof buf, "%0*x", width, r);
    s += buf;
  }
  return s;
}

RowGraph to_row_graph(const BipGraph& g, bool rows_are_a) {
  const Side rs = rows_are_a ? Side::A : Side::B;
  RowGraph r;
  r.cols = g.count(opposite(rs));
  if (r.cols > 32) throw Error(ErrorCode::kTooLarge, "row graphs hold at most 32 columns");
  r.rows.assign(g.count(rs), 0);
  for (const Edge& e : g.edges()) {
    int row = rows_are_a ? e.a : e.b, col = rows_are_a ? e.b : e.a;
    std::uint32_t bit = 1u << col;
    if (r.rows[row] & bit) throw Error(ErrorCode::kPreconditionFailed, "row graphs are simple");
    r.rows[row] |= bit;
  }
  return r;
}

BipGraph to_bip_graph(const RowGraph& g) {
  std::vector<Edge> edges;
  for (int i = 0; i < g.row_count(); ++i) {
    for (int j = 0; j < g.cols; ++j) {
      if (g.rows[i] >> j & 1u) edges.push_back({j, i});
    }
  }
  return BipGraph(g.cols, g.row_count(), std::move(edges));
}

std::string canonical_form(const BipGraph& g) {
  if (!g.is_simple()) throw Error(ErrorCode::kPreconditionFailed, "canonical forms need a simple graph");
  if (g.a_count() != g.b_count()) {
    return encode(canonize(to_row_graph(g, g.a_count() > g.b_count())).form);
  }
  RowGraph x = canonize(to_row_graph(g, true)).form;
  RowGraph y = canonize(to_row_graph(g, false)).form;
  return encode(y < x ? y : x);
}

}  // namespace bipmc
