#pragma once

#include <optional>
#include <vector>

#include "bipmc/graph.hpp"

namespace bipmc {

// Graph isomorphism ignoring the A/B labelling; preserves edge multiplicities.
// Result maps flat ids of g to flat ids of h.
std::optional<std::vector<int>> find_isomorphism(const BipGraph& g, const BipGraph& h);
bool are_isomorphic(const BipGraph& g, const BipGraph& h);

}  // namespace bipmc
