#include "bipmc/cli/dot.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace bipmc::cli {

namespace {

std::string name(Vertex v) { return (v.side == Side::A ? "a" : "b") + std::to_string(v.index); }

}  // namespace

std::string to_dot(const BipGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  // bip " << g.a_count() << ' ' << g.b_count() << '\n';
  for (Vertex v : g.vertices()) {
    const int d = g.degree(v);
    out << "  " << name(v) << " [shape=circle, style=filled, fillcolor="
        << (v.side == Side::A ? "white" : "gray30") << ", color=" << (d == 2 ? "green" : "red")
        << ", penwidth=2];\n";
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Vertex a = g.end(e, Side::A);
    const Vertex b = g.end(e, Side::B);
    const bool two = g.degree(a) == 2 && g.degree(b) == 2;
    out << "  " << name(a) << " -- " << name(b) << " [id=" << e;
    if (two) out << ", color=cyan, penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

BipGraph parse_dot(const std::string& text) {
  static const std::regex header(R"(^\s*//\s*bip\s+(\d+)\s+(\d+)\s*$)");
  static const std::regex node(R"(^\s*([ab])(\d+)\s*\[)");
  static const std::regex edge(R"(^\s*a(\d+)\s*--\s*b(\d+)\b)");
  std::istringstream in(text);
  std::string line;
  int a = 0, b = 0;
  bool sized = false;
  std::vector<Edge> edges;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_search(line, m, header)) {
      a = std::stoi(m[1]);
      b = std::stoi(m[2]);
      sized = true;
    } else if (std::regex_search(line, m, edge)) {
      edges.push_back({std::stoi(m[1]), std::stoi(m[2])});
    } else if (!sized && std::regex_search(line, m, node)) {
      const int i = std::stoi(m[2]) + 1;
      if (m[1] == "a") a = std::max(a, i);
      else b = std::max(b, i);
    }
  }
  for (const Edge& e : edges)
    if (e.a >= a || e.b >= b) throw Error(ErrorCode::kParseError, "DOT edge to undeclared vertex");
  return BipGraph(a, b, std::move(edges));
}

}  // namespace bipmc::cli
