#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bipmc/graph.hpp"

namespace bipmc {

// Simple bipartite graph as rows over a column set; bit j of rows[i] is edge (i, j).
struct RowGraph {
  int cols = 0;
  std::vector<std::uint32_t> rows;

  int row_count() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const RowGraph&, const RowGraph&) = default;
};

struct Canonization {
  RowGraph form;              // rows sorted into canonical order, columns relabelled
  std::vector<int> row_label; // original row -> canonical position
  std::vector<int> col_label; // original column -> canonical position
};

// Rows and columns are never exchanged. A marked row is kept distinguishable from the others.
Canonization canonize(const RowGraph& g, int marked_row = -1);

RowGraph transpose(const RowGraph& g);
std::string encode(const RowGraph& g);
bool operator<(const RowGraph& x, const RowGraph& y);

RowGraph to_row_graph(const BipGraph& g, bool rows_are_a);
BipGraph to_bip_graph(const RowGraph& g);

// Isomorphism-invariant text form of a simple bipartite graph.
std::string canonical_form(const BipGraph& g);

}  // namespace bipmc
