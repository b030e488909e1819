#pragma once

#include <string>

#include "bipmc/graph.hpp"

namespace bipmc::cli {

// Degree-2 vertices green, others red, 2-edges cyan. Edges appear in edge-id order.
std::string to_dot(const BipGraph& g);
// Reads the subset of DOT written by to_dot.
BipGraph parse_dot(const std::string& text);

}  // namespace bipmc::cli
