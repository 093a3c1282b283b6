#pragma once

// Schematic SVG drawings: concentric circles around 1/0 with straight chords.

#include <optional>
#include <string>
#include <vector>

#include "farey/eleven.hpp"
#include "farey/farey_map.hpp"

namespace farey::render {

struct Point {
  double x = 0;
  double y = 0;
};

struct Layout {
  std::vector<std::optional<Point>> positions;  // by vertex index; empty when not drawn
  std::vector<double> circles;                  // radii of C1, C2, C3 (or BFS shells)
};

struct Options {
  double scale = 90.0;  // pixels per unit radius
  bool labels = true;
};

/// Prime p >= 5: 1/0 at the origin, S1 on radius 1, S2 slots on radius 2 with
/// slot 0 at angle pi/2, remaining poles on radius 3. Other levels fall back
/// to BFS shells from 1/0.
Layout map_layout(const FareyMap& map);

/// BFS shell d on radius d, vertices of a shell evenly spaced in label order.
Layout shell_layout(const FareyMap& map);

/// A wedge drawing of one sector: vertices in sector-boundary order, radius
/// equal to the graph distance from 1/0.
Layout sector_layout(const FareyMap& map, const eleven::Sector& sector);

std::string render_map(const FareyMap& map, const Options& options = {});

/// Sector faces shaded over their edges. Throws WrongLevel unless n = 11.
std::string render_sector(const FareyMap& map, const eleven::Sector& sector, const Options& options = {});

}  // namespace farey::render
