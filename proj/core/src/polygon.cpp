#include "farey/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace farey {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), count_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  parent_[std::max(a, b)] = std::min(a, b);
  --count_;
  return true;
}

BoundaryWalk BoundaryWalk::rotated(std::size_t start) const {
  BoundaryWalk out{level, {}, {}};
  const auto n = darts.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.darts.push_back(darts[(start + i) % n]);
    out.vertices.push_back(vertices[(start + i) % n]);
  }
  return out;
}

CutComplex::CutComplex(const FareyMap& map, std::vector<char> face_included,
                       const std::function<bool(int)>& glue)
    : map_(&map), face_included_(std::move(face_included)) {
  const auto nd = map.num_darts();
  glued_.assign(nd, 0);
  for (std::size_t f = 0; f < map.num_faces(); ++f)
    if (face_included_[f]) ++num_faces_;

  for (std::size_t d = 0; d < nd; ++d) {
    const int dart = static_cast<int>(d);
    if (!included(dart)) continue;
    const int rev = map.alpha(dart);
    if (included(rev) && glue(dart)) {
      if (!glue(rev)) throw Error(ErrorCode::InvalidArgument, "glue predicate is not symmetric");
      glued_[d] = 1;
    }
  }
  for (std::size_t d = 0; d < nd; ++d) {
    if (!included(static_cast<int>(d))) continue;
    if (glued_[d]) {
      if (map.source(static_cast<int>(d)) < map.target(static_cast<int>(d))) ++num_glued_edges_;
    } else {
      ++num_boundary_darts_;
    }
  }

  // Corners at the source of each dart, merged across glued edges.
  DisjointSets sets(nd);
  for (std::size_t d = 0; d < nd; ++d) {
    if (glued_[d]) sets.unite(static_cast<int>(d), map.phi(map.alpha(static_cast<int>(d))));
  }
  corner_class_.assign(nd, -1);
  std::map<int, int> ids;
  for (std::size_t d = 0; d < nd; ++d) {
    if (!included(static_cast<int>(d))) continue;
    const int root = sets.find(static_cast<int>(d));
    auto [it, inserted] = ids.emplace(root, static_cast<int>(ids.size()));
    corner_class_[d] = it->second;
  }
  num_corner_classes_ = ids.size();
}

int CutComplex::next_boundary(int dart) const {
  int e = map_->phi(dart);
  for (std::size_t guard = 0; glued(e); ++guard) {
    if (guard > map_->num_darts()) throw Error(ErrorCode::InvalidArgument, "boundary walk does not close");
    e = map_->phi(map_->alpha(e));
  }
  return e;
}

std::vector<std::vector<int>> CutComplex::boundary_cycles() const {
  const auto nd = map_->num_darts();
  std::vector<char> seen(nd, 0);
  std::vector<std::vector<int>> cycles;
  for (std::size_t d0 = 0; d0 < nd; ++d0) {
    const int start = static_cast<int>(d0);
    if (seen[d0] || !included(start) || glued(start)) continue;
    std::vector<int> cycle;
    int d = start;
    do {
      if (seen[d]) throw Error(ErrorCode::InvalidArgument, "boundary is not a union of cycles");
      seen[d] = 1;
      cycle.push_back(d);
      d = next_boundary(d);
    } while (d != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

BoundaryWalk CutComplex::boundary() const {
  auto cycles = boundary_cycles();
  if (cycles.empty()) throw Error(ErrorCode::InvalidArgument, "complex has no boundary");
  if (cycles.size() > 1) {
    throw Error(ErrorCode::DisconnectedBoundary,
                "boundary splits into " + std::to_string(cycles.size()) + " cycles");
  }
  BoundaryWalk walk{map_->level(), std::move(cycles.front()), {}};
  for (int d : walk.darts) walk.vertices.push_back(map_->vertex(map_->source(d)));
  return walk;
}

bool CutComplex::is_disk() const {
  return boundary_cycles().size() == 1 && euler_characteristic() == 1;
}

std::int64_t CutComplex::quotient_euler(const BoundaryWalk& walk,
                                        std::span<const std::pair<int, int>> pairs) const {
  const auto len = static_cast<int>(walk.size());
  DisjointSets sets(num_corner_classes_);
  const auto slot_class = [&](int slot) { return corner_class_[walk.darts[slot % len]]; };
  for (auto [i, j] : pairs) {
    sets.unite(slot_class(i), slot_class(j + 1));
    sets.unite(slot_class(i + 1), slot_class(j));
  }
  return static_cast<std::int64_t>(sets.count()) -
         static_cast<std::int64_t>(num_glued_edges_ + num_boundary_darts_ - pairs.size()) +
         static_cast<std::int64_t>(num_faces_);
}

std::vector<std::pair<int, int>> pair_reverse_edges(const BoundaryWalk& walk) {
  const auto len = static_cast<int>(walk.size());
  std::map<std::pair<FareyFraction, FareyFraction>, std::vector<int>> by_edge;
  for (int i = 0; i < len; ++i) by_edge[{walk.at(i), walk.at(i + 1)}].push_back(i);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < len; ++i) {
    const auto it = by_edge.find({walk.at(i + 1), walk.at(i)});
    if (it == by_edge.end() || it->second.size() != 1 || by_edge[{walk.at(i), walk.at(i + 1)}].size() != 1) {
      throw Error(ErrorCode::UnpairedEdge, "edge " + walk.at(i).str() + " -> " + walk.at(i + 1).str() +
                                               " at slot " + std::to_string(i) + " has no unique reverse");
    }
    const int j = it->second.front();
    if (j == i) throw Error(ErrorCode::UnpairedEdge, "edge paired with itself at slot " + std::to_string(i));
    if (i < j) pairs.emplace_back(i, j);
  }
  return pairs;
}

std::int64_t genus_from_euler(std::int64_t chi) {
  if ((2 - chi) % 2 != 0) {
    throw Error(ErrorCode::NonIntegral, "Euler characteristic " + std::to_string(chi) + " is odd");
  }
  return (2 - chi) / 2;
}

}  // namespace farey
