#include "bipmc/cli/graph_file.hpp"

#include <fstream>
#include <sstream>

namespace bipmc::cli {

namespace {

bool read_int(std::istringstream& in, int& x) {
  std::string tok;
  if (!(in >> tok)) return false;
  std::size_t used = 0;
  try {
    x = std::stoi(tok, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == tok.size();
}

}  // namespace

BipGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int a = 0, b = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_header) {
      if (first != "bip") throw ParseError(line_no, "expected header 'bip <a_count> <b_count>'");
      if (!read_int(ls, a) || !read_int(ls, b) || a < 0 || b < 0)
        throw ParseError(line_no, "bad class sizes");
      std::string extra;
      if (ls >> extra) throw ParseError(line_no, "trailing text after header");
      have_header = true;
      continue;
    }
    std::istringstream es(raw);
    int x = 0, y = 0;
    if (!read_int(es, x) || !read_int(es, y)) throw ParseError(line_no, "expected '<a_index> <b_index>'");
    std::string extra;
    if (es >> extra) throw ParseError(line_no, "trailing text after edge");
    if (x < 0 || x >= a) throw ParseError(line_no, "A index " + std::to_string(x) + " out of range");
    if (y < 0 || y >= b) throw ParseError(line_no, "B index " + std::to_string(y) + " out of range");
    edges.push_back({x, y});
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  return BipGraph(a, b, std::move(edges));
}

std::string render_graph(const BipGraph& g, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream cs(comment);
    std::string line;
    while (std::getline(cs, line)) out << "# " << line << '\n';
  }
  out << "bip " << g.a_count() << ' ' << g.b_count() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kNotFound, "cannot write " + path);
  out << text;
}

BipGraph read_graph_file(const std::string& path) { return parse_graph(read_text(path)); }

void write_graph_file(const std::string& path, const BipGraph& g, const std::string& comment) {
  write_text(path, render_graph(g, comment));
}

}  // namespace bipmc::cli
