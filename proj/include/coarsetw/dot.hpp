#pragma once

#include <string>

#include "coarsetw/graph.hpp"
#include "coarsetw/quotient.hpp"

namespace coarsetw {

std::string graph_to_dot(const Graph& g, const std::string& name = "G");

// Layered graph with edges attributed by color when color_edges is set.
std::string j_to_dot(const JGraph& j, bool color_edges,
                     const std::string& name = "J");

}  // namespace coarsetw
