#pragma once

// A fundamental polygon for M3(11): a 20-face sector W around the central
// triangle, its 11 rotations W* about 1/0, the 198-edge boundary of W* and
// its orientable side pairing.

#include <optional>
#include <utility>
#include <vector>

#include "farey/farey_map.hpp"
#include "farey/polygon.hpp"

namespace farey::eleven {

inline constexpr int kLevel = 11;
inline constexpr int kSectorFaces = 20;
inline constexpr int kTableColumns = 19;

struct Sector {
  std::vector<int> faces;  // sorted face ids, anchor included
  int anchor = -1;
};

/// Vertex labels P0..P21 of the reference sector, in boundary order.
std::vector<FareyFraction> reference_sector_vertices();

/// Boundary vertices of W* for the reference sector: 11 rows of 19 labels.
std::vector<std::vector<FareyFraction>> reference_boundary_table();

struct SearchOptions {
  /// Only faces with all three vertices in this set are considered.
  std::optional<std::vector<FareyFraction>> restrict_to;
  /// Stop counting after this many solutions (count_sectors only).
  std::size_t limit = 1000;
};

/// Depth-first search over connected face sets grown from the central
/// triangle, taking the smaller face id first and returning the first valid
/// sector. Throws WrongLevel, NoSector.
Sector sector_search(const FareyMap& map, const SearchOptions& options = {});

/// Number of valid sectors (up to options.limit).
std::size_t count_sectors(const FareyMap& map, const SearchOptions& options = {});

/// Checks every Sector invariant; returns an empty string when valid.
std::string validate_sector(const FareyMap& map, const Sector& sector);

/// Sector index 0..10 of every face: face f lies in W + k.
std::vector<int> assemble_wstar(const FareyMap& map, const Sector& sector);

/// W* as a complex: faces of one sector are glued to each other, and every
/// edge at 1/0 or on the first circuit is glued.
CutComplex wstar_complex(const FareyMap& map, const Sector& sector);

/// Boundary of W*, anticlockwise. Starts at the directed edge 1/5 -> 1/4
/// when present, otherwise at the least (label, successor) slot.
BoundaryWalk boundary_walk(const FareyMap& map, const Sector& sector);

/// Rows of 19 labels; row k covers slots 18k .. 18k + 18.
std::vector<std::vector<FareyFraction>> table_rows(const BoundaryWalk& walk);

/// 99 pairs of walk edge slots (i, j), edge j being edge i reversed.
std::vector<std::pair<int, int>> pair_boundary(const BoundaryWalk& walk);

/// Genus of the closed surface obtained by identifying the pairs.
std::int64_t quotient_genus(const FareyMap& map, const Sector& sector, const BoundaryWalk& walk,
                            const std::vector<std::pair<int, int>>& pairs);

/// Row (1-based) and position of a walk edge slot, as laid out in the table.
std::pair<int, int> table_position(int slot);

}  // namespace farey::eleven
