#pragma once

// Text exports: JSON documents and Graphviz DOT.

#include <string>
#include <vector>

#include "farey/eleven.hpp"
#include "farey/farey_map.hpp"
#include "farey/klein7.hpp"
#include "farey/metrics.hpp"

namespace farey::io {

/// {level, vertices: ["a/c"...], edges: [["a/c","b/d"]...], faces: [[...]...]}
std::string map_to_json(const FareyMap& map, int indent = -1);

/// Parses map_to_json output and rebuilds the map from its faces.
/// Throws ParseError on malformed documents.
FareyMap map_from_json(const std::string& text);

/// Undirected 1-skeleton.
std::string map_to_dot(const FareyMap& map);

/// Comma-separated "a/c" list.
std::string join(const std::vector<FareyFraction>& labels, const std::string& sep = ", ");

/// {p, S1: [...], S2: [...], poles: [...]}
std::string circuits_to_json(int p, int indent = -1);

/// {sides: [{index, labels: [...]}...], pairs: [[1,6],...]}
std::string fourteen_gon_to_json(const klein7::FourteenGon& gon, const klein7::SidePairing& pairing,
                                 int indent = -1);

/// {walk: [...], pairs: [[i, j]...], rows: [[...]...]}
std::string boundary_to_json(const BoundaryWalk& walk, const std::vector<std::pair<int, int>>& pairs,
                             int indent = -1);

}  // namespace farey::io
