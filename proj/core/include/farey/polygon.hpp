#pragma once

// Fundamental polygons cut out of a Farey map.
//
// A CutComplex is a set of faces glued along a chosen subset of their
// shared edges. When it is a disk its boundary is a closed walk of darts,
// traversed with the faces on the left (anticlockwise). Identifying boundary
// edges in pairs recovers a closed surface whose Euler characteristic is
// computed from the corner classes.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "farey/farey_map.hpp"

namespace farey {

/// Closed boundary walk. Slot i is the source of darts[i]; edge i runs from
/// slot i to slot i + 1 (mod size).
struct BoundaryWalk {
  int level = 0;
  std::vector<int> darts;
  std::vector<FareyFraction> vertices;

  std::size_t size() const { return darts.size(); }
  const FareyFraction& at(std::size_t slot) const { return vertices[slot % vertices.size()]; }

  /// The same walk started at slot `start`.
  BoundaryWalk rotated(std::size_t start) const;
};

class CutComplex {
 public:
  /// `glue(dart)` decides whether the edge of an included dart is glued to
  /// the face across it; it must agree on a dart and its reverse.
  CutComplex(const FareyMap& map, std::vector<char> face_included, const std::function<bool(int)>& glue);

  const FareyMap& map() const noexcept { return *map_; }

  bool face_included(int face) const { return face_included_[face] != 0; }
  bool included(int dart) const { return face_included_[map_->face_of(dart)] != 0; }
  /// The edge of this dart is interior to the complex.
  bool glued(int dart) const { return glued_[dart] != 0; }

  std::size_t num_faces() const noexcept { return num_faces_; }
  std::size_t num_glued_edges() const noexcept { return num_glued_edges_; }
  std::size_t num_boundary_darts() const noexcept { return num_boundary_darts_; }
  /// Vertices of the complex (corner classes).
  std::size_t num_vertices() const noexcept { return num_corner_classes_; }
  /// Corner class of the corner at the source of an included dart.
  int corner_class(int dart) const { return corner_class_[dart]; }

  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(num_vertices()) -
           static_cast<std::int64_t>(num_glued_edges() + num_boundary_darts()) +
           static_cast<std::int64_t>(num_faces());
  }

  /// Boundary darts following an exposed dart, rotating through glued faces.
  int next_boundary(int dart) const;

  /// All boundary cycles; each starts at its least dart id.
  std::vector<std::vector<int>> boundary_cycles() const;

  /// The single boundary walk. Throws DisconnectedBoundary if there are
  /// several cycles, InvalidArgument if there is none.
  BoundaryWalk boundary() const;

  bool is_disk() const;

  /// Euler characteristic after identifying walk edges i and j for every
  /// (i, j) in pairs, edge j being traversed backwards. Unpaired edges stay
  /// on the boundary.
  std::int64_t quotient_euler(const BoundaryWalk& walk, std::span<const std::pair<int, int>> pairs) const;

 private:
  const FareyMap* map_;
  std::vector<char> face_included_;
  std::vector<char> glued_;
  std::vector<int> corner_class_;
  std::size_t num_faces_ = 0;
  std::size_t num_glued_edges_ = 0;
  std::size_t num_boundary_darts_ = 0;
  std::size_t num_corner_classes_ = 0;
};

/// Pairs each walk edge (u -> v) with the unique walk edge (v -> u), matching
/// on vertex labels. Throws UnpairedEdge when a reverse is absent or repeated.
std::vector<std::pair<int, int>> pair_reverse_edges(const BoundaryWalk& walk);

/// Genus from an Euler characteristic 2 - 2g. Throws NonIntegral on odd input.
std::int64_t genus_from_euler(std::int64_t chi);

/// Minimal union-find over dense ids.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  int find(int x);
  bool unite(int a, int b);
  std::size_t count() const noexcept { return count_; }

 private:
  std::vector<int> parent_;
  std::size_t count_;
};

}  // namespace farey
