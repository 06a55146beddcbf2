#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qgs/graph.hpp"

namespace qgs {

/// Graph description document:
///
///   {"vertices": 3,
///    "edges": [[1, 2, 1.0], [2, 3, 1.0]],
///    "boundary": {"default": "neumann", "overrides": {"3": "dirichlet"}},
///    "leads": [1, 3],
///    "entrance": 0}
///
/// "boundary" and "entrance" are optional. A boundary value is "neumann",
/// "dirichlet" or {"r": [re, im], "t": [re, im]}. Unknown fields are
/// rejected with SpecParse.
OpenGraph parse_graph_spec(std::string_view json_text);
OpenGraph load_graph_spec(const std::filesystem::path& path);

std::string graph_spec_to_json(const OpenGraph& og);

}  // namespace qgs
