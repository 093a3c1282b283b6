#pragma once

// The 14-sided polygon for M3(7) and its side pairing, plus a check of the
// classical pairing matrix (113 -35 / 42 -13).

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "farey/arith.hpp"
#include "farey/farey_map.hpp"
#include "farey/polygon.hpp"

namespace farey::klein7 {

/// A triangle at the pole 2/0 or a quadrilateral (two faces) at 3/0.
struct OuterPiece {
  enum class Kind { Triangle, Quadrilateral };
  Kind kind;
  int shift;                               // image of the k = 0 piece under t -> t + shift
  std::vector<FareyFraction> labels;       // anticlockwise
  std::vector<int> faces;                  // face ids in the map
};

struct Side {
  int index;                               // 1..14
  std::array<FareyFraction, 4> traversed;  // labels in anticlockwise boundary order
  std::array<FareyFraction, 4> labels;     // normalized: 2/0, x/3, y/2, 3/0
  std::array<int, 3> edges;                // walk edge slots

  bool anticlockwise_from_2() const { return traversed[0] == labels[0]; }
};

struct FourteenGon {
  BoundaryWalk walk;                       // 42 darts, starting at side 1
  std::vector<Side> sides;
  std::int64_t disk_euler = 0;
};

struct SidePairing {
  std::vector<std::pair<int, int>> pairs;  // (i, j) with i < j, 1-based
  int partner(int side) const;
};

/// The 21 faces incident to 2/0 or 3/0, as 7 triangles and 7 quadrilaterals
/// in the order they appear around the polygon. Throws WrongLevel.
std::vector<OuterPiece> outer_ring(const FareyMap& map);

/// Throws WrongLevel, NoMatch (no cut reproduces the side-1 labels).
FourteenGon fourteen_gon(const FareyMap& map);

/// Matches sides whose label sequences agree after reversal. Throws NoMatch.
SidePairing side_pairing(const FourteenGon& gon);

/// Euler characteristic of the 14-gon with paired sides identified.
std::int64_t quotient_euler(const FareyMap& map, const FourteenGon& gon, const SidePairing& pairing);

struct MatrixReport {
  IntMatrix matrix;
  bool in_gamma7 = false;
  std::array<ExtRational, 3> edge1;        // 2/7, 1/3, 3/7
  std::array<ExtRational, 3> images;
  std::array<ExtRational, 3> printed_edge6;  // 18/7, 8/3, 19/7
  std::array<BigInt, 2> dets_before;       // (2/7, 1/3), (1/3, 3/7)
  std::array<BigInt, 2> dets_after;
  bool endpoints_match_printed = false;
  std::vector<std::string> discrepancies;

  std::string str() const;
};

MatrixReport verify_klein_matrix();

/// The classical side pairing of the 14-gon.
std::vector<std::pair<int, int>> expected_pairing();

}  // namespace farey::klein7
