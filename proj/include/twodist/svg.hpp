#pragma once

#include <string>

#include "twodist/graph.hpp"
#include "twodist/solver.hpp"

namespace twodist {

// Unit-scaled drawing: red/blue/green edges in their colours, green edges
// annotated with their class id.
std::string render_svg(const Graph& g, const Representation& rep);
void save_svg(const Graph& g, const Representation& rep, const std::string& path);

}  // namespace twodist
