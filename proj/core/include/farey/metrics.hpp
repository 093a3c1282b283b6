#pragma once

// Graph metric on the 1-skeleton of M3(n) and the quasi-icosahedral
// structure around the north pole 1/0 for prime levels.

#include <vector>

#include "farey/farey_map.hpp"

namespace farey {

/// Cyclic vertex sequence whose consecutive entries (wrapping) are adjacent.
struct Circuit {
  int level = 0;
  std::vector<FareyFraction> vertices;

  std::size_t size() const { return vertices.size(); }
  /// Distinct vertices, sorted.
  std::vector<FareyFraction> support() const;
  /// Every consecutive pair, including last -> first, passes is_adjacent.
  bool is_closed() const;
};

struct Decomposition {
  FareyFraction north;
  Circuit sphere1;
  Circuit sphere2;  // a walk; its support is the distance-2 set
  std::vector<FareyFraction> poles;  // distance 3 from north
};

/// Closed-form distance for distinct vertices at prime level p >= 5.
/// Throws NotPrime, EqualVertices, LevelMismatch.
int distance_formula(const FareyFraction& f, const FareyFraction& g, int p);

/// Shortest path length in the 1-skeleton. Throws UnknownVertex.
int bfs_distance(const FareyMap& map, const FareyFraction& f, const FareyFraction& g);

/// Distances from one vertex (by index) to all others.
std::vector<int> bfs_from(const FareyMap& map, int source);

int diameter(const FareyMap& map);

/// 0/1, 1/1, ..., (p-1)/1. Throws NotPrime.
Circuit circuit_S1(int p);

/// 1/((p-1)/2), ..., 1/2, 2/3, ..., ((p-3)/2)/((p-1)/2); length p - 4.
std::vector<FareyFraction> seq_S(int p);

/// S (S+1) ... (S+p-1), a closed walk of length p(p-4).
Circuit circuit_S2(int p);

/// 1/0, 2/0, ..., ((p-1)/2)/0.
std::vector<FareyFraction> poles(int p);

Decomposition decompose(int p);

/// Throws NotPrime unless p is a prime >= 5.
void require_theorem_prime(int p);

}  // namespace farey
