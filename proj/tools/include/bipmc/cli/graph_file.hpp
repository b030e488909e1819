#pragma once

#include <string>

#include "bipmc/graph.hpp"

namespace bipmc::cli {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// "bip <a> <b>" header, then one "<a> <b>" line per edge; '#' starts a comment.
BipGraph parse_graph(const std::string& text);
std::string render_graph(const BipGraph& g, const std::string& comment = {});

BipGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const BipGraph& g, const std::string& comment = {});

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace bipmc::cli
