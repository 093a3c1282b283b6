#include "farey/metrics.hpp"

#include <algorithm>
#include <deque>

namespace farey {

std::vector<FareyFraction> Circuit::support() const {
  std::vector<FareyFraction> out = vertices;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Circuit::is_closed() const {
  if (vertices.size() < 2) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_adjacent(vertices[i], vertices[(i + 1) % vertices.size()])) return false;
  }
  return true;
}

void require_theorem_prime(int p) {
  if (p < 5 || !is_prime(p)) {
    throw Error(ErrorCode::NotPrime, "expected a prime >= 5, got " + std::to_string(p));
  }
}

int distance_formula(const FareyFraction& f, const FareyFraction& g, int p) {
  require_theorem_prime(p);
  if (f.level() != p || g.level() != p) {
    throw Error(ErrorCode::LevelMismatch, "vertices are not at level " + std::to_string(p));
  }
  if (f == g) throw Error(ErrorCode::EqualVertices, f.str());
  const int det = cross_det(f, g);
  if (det == 1 || det == p - 1) return 1;
  if (det == 0) return 3;
  return 2;
}

std::vector<int> bfs_from(const FareyMap& map, int source) {
  std::vector<int> dist(map.num_vertices(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const int start = map.first_dart(u);
    int d = start;
    do {
      const int v = map.target(d);
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
      d = map.sigma(d);
    } while (d != start);
  }
  return dist;
}

int bfs_distance(const FareyMap& map, const FareyFraction& f, const FareyFraction& g) {
  const int target = map.index_of(g);
  return bfs_from(map, map.index_of(f))[target];
}

int diameter(const FareyMap& map) {
  int best = 0;
  for (std::size_t v = 0; v < map.num_vertices(); ++v) {
    const auto dist = bfs_from(map, static_cast<int>(v));
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

Circuit circuit_S1(int p) {
  require_theorem_prime(p);
  Circuit c{p, {}};
  for (int k = 0; k < p; ++k) c.vertices.push_back(FareyFraction::canonical(k, 1, p));
  return c;
}

std::vector<FareyFraction> seq_S(int p) {
  require_theorem_prime(p);
  const int half = (p - 1) / 2;
  std::vector<FareyFraction> out;
  for (int m = half; m >= 2; --m) out.push_back(FareyFraction::canonical(1, m, p));
  for (int k = 2; k + 1 <= half; ++k) out.push_back(FareyFraction::canonical(k, k + 1, p));
  return out;
}

Circuit circuit_S2(int p) {
  const auto seed = seq_S(p);
  Circuit c{p, {}};
  c.vertices.reserve(seed.size() * p);
  for (int k = 0; k < p; ++k) {
    for (const auto& f : seed) c.vertices.push_back(f.translated(k));
  }
  return c;
}

std::vector<FareyFraction> poles(int p) {
  require_theorem_prime(p);
  std::vector<FareyFraction> out;
  for (int k = 1; 2 * k < p; ++k) out.push_back(FareyFraction::canonical(k, 0, p));
  return out;
}

Decomposition decompose(int p) {
  auto all_poles = poles(p);
  const FareyFraction north = all_poles.front();
  all_poles.erase(all_poles.begin());
  return Decomposition{north, circuit_S1(p), circuit_S2(p), std::move(all_poles)};
}

}  // namespace farey
