#pragma once

// The level-n Farey map M3(n) as a combinatorial map.
//
// Darts are the elements of PSL(2, Z_n). Dart g runs from g·(1/0) to
// g·(0/1); sigma(g) = g·T rotates anticlockwise about the source and
// alpha(g) = g·S reverses direction. The face successor is
// phi = sigma^-1 ∘ alpha, whose orbit through g is the anticlockwise
// triangle a/c -> b/d -> (a+b)/(c+d).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "farey/arith.hpp"

namespace farey {

/// Triangle in anticlockwise order, rotated so the least vertex comes first.
struct Face {
  std::array<FareyFraction, 3> v;

  bool contains(const FareyFraction& f) const { return v[0] == f || v[1] == f || v[2] == f; }

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& x, const Face& y) {
    return std::tie(x.v[0], x.v[1], x.v[2]) <=> std::tie(y.v[0], y.v[1], y.v[2]);
  }
};

/// Rotates an anticlockwise triple into canonical form.
Face make_face(const FareyFraction& x, const FareyFraction& y, const FareyFraction& z);

/// |PSL(2, Z_n)| = n^3/2 · prod_{p | n} (1 - 1/p^2). Throws Unsupported for n < 3.
std::int64_t mu(int n);

/// 1 + n^2 (n - 6)/24 · prod_{p | n} (1 - 1/p^2). Throws Unsupported for n < 3.
std::int64_t genus(int n);

/// Distinct prime divisors in increasing order.
std::vector<int> prime_divisors(int n);

bool is_prime(int n);

inline constexpr int kDefaultLevelBound = 101;

class FareyMap {
 public:
  /// M3(n) from the group structure. Throws Unsupported (n < 3) or ResourceLimit (n > bound).
  static FareyMap build(int n, int bound = kDefaultLevelBound);

  /// Rebuilds a map from anticlockwise triangles: darts are the oriented face
  /// edges, alpha pairs opposite darts and sigma is read off the faces.
  static FareyMap from_faces(int n, std::vector<FareyFraction> vertices, std::span<const Face> faces);

  int level() const noexcept { return level_; }

  std::span<const FareyFraction> vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_darts() const noexcept { return source_.size(); }
  std::size_t num_edges() const noexcept { return source_.size() / 2; }
  std::size_t num_faces() const noexcept { return faces_.size(); }

  /// Throws UnknownVertex.
  int index_of(const FareyFraction& f) const;
  std::optional<int> find(const FareyFraction& f) const;
  const FareyFraction& vertex(int index) const { return vertices_[index]; }

  int source(int dart) const { return source_[dart]; }
  int target(int dart) const { return source_[alpha_[dart]]; }
  int sigma(int dart) const { return sigma_[dart]; }
  int sigma_inv(int dart) const { return sigma_inv_[dart]; }
  int alpha(int dart) const { return alpha_[dart]; }
  int phi(int dart) const { return sigma_inv_[alpha_[dart]]; }
  int face_of(int dart) const { return face_of_[dart]; }

  /// Some dart leaving vertex v; its sigma orbit is the rotation at v.
  int first_dart(int vertex) const { return first_dart_[vertex]; }
  /// Dart of the face whose source is the face's first vertex.
  int face_dart(int face) const { return face_dart_[face]; }

  /// Faces sorted ascending; face ids index this list.
  std::span<const Face> faces() const noexcept { return faces_; }

  /// Neighbours of v in anticlockwise rotation order. Throws UnknownVertex.
  std::vector<FareyFraction> neighbors(const FareyFraction& v) const;
  std::vector<int> neighbor_indices(int vertex) const;

  /// Undirected edges as (u, v) vertex indices with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool adjacent(int u, int v) const;

  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(num_vertices()) - static_cast<std::int64_t>(num_edges()) +
           static_cast<std::int64_t>(num_faces());
  }

  /// Face id of a triangle with the given vertices (any order), if present.
  std::optional<int> find_face(const FareyFraction& x, const FareyFraction& y,
                               const FareyFraction& z) const;

  /// Face id of the image of face under t -> t + k.
  int translate_face(int face, int k) const;

 private:
  FareyMap() = default;
  void finish();

  int level_ = 0;
  std::vector<FareyFraction> vertices_;
  std::vector<int> vertex_lookup_;  // (num * n + den) -> vertex index or -1
  std::vector<int> source_, sigma_, sigma_inv_, alpha_, face_of_;
  std::vector<int> first_dart_;
  std::vector<Face> faces_;
  std::vector<int> face_dart_;
};

/// All canonical vertices of M3(n), sorted.
std::vector<FareyFraction> all_vertices(int n);

}  // namespace farey
