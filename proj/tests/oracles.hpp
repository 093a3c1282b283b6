#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond its value types, so they can arbitrate its results.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline int md(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

// Vertex class {(a, c), (-a, -c)} represented by its lexicographically least member.
using Pair = std::pair<int, int>;

inline Pair rep(long long a, long long c, int n) {
  Pair p{md(a, n), md(c, n)};
  Pair q{md(-a, n), md(-c, n)};
  return std::min(p, q);
}

// Every class of (a, c) with gcd(a, c, n) = 1.
inline std::vector<Pair> vertex_classes(int n) {
  std::set<Pair> out;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (std::gcd(std::gcd(a, c), n) == 1) out.insert(rep(a, c, n));
  return {out.begin(), out.end()};
}

// ad - bc = +-1 mod n for some choice of signs (the sign choice only flips the determinant).
inline bool adjacent(Pair x, Pair y, int n) {
  const int det = md(static_cast<long long>(x.first) * y.second - static_cast<long long>(y.first) * x.second, n);
  return det == 1 || det == md(-1, n);
}

// |SL(2, Z_n)| / |{+-I}| by exhaustion.
inline long long psl_order(int n) {
  long long sl = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (md(static_cast<long long>(a) * d - static_cast<long long>(b) * c, n) == 1 % n) ++sl;
  return n == 2 ? sl : sl / 2;
}

struct Graph {
  std::vector<Pair> vertices;
  std::vector<std::vector<int>> adj;

  int index(Pair p) const {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), p) - vertices.begin());
  }
  std::size_t edges() const {
    std::size_t e = 0;
    for (const auto& a : adj) e += a.size();
    return e / 2;
  }
};

inline Graph farey_graph(int n) {
  Graph g;
  g.vertices = vertex_classes(n);
  g.adj.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = 0; j < g.vertices.size(); ++j)
      if (i != j && adjacent(g.vertices[i], g.vertices[j], n)) g.adj[i].push_back(static_cast<int>(j));
  return g;
}

inline std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int s) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

// Triangles {x, y, z} of mutually adjacent vertices.
inline std::size_t triangles(const Graph& g) {
  std::size_t t = 0;
  for (std::size_t i = 0; i < g.adj.size(); ++i)
    for (int j : g.adj[i])
      for (int k : g.adj[j])
        if (static_cast<int>(i) < j && j < k &&
            std::find(g.adj[i].begin(), g.adj[i].end(), k) != g.adj[i].end())
          ++t;
  return t;
}

// Icosahedron from its twelve vertices (0, +-1, +-phi) and cyclic permutations,
// joined at the minimal distance 2.
inline std::vector<std::vector<int>> icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<std::array<double, 3>> pts;
  for (double s : {-1.0, 1.0})
    for (double t : {-phi, phi}) {
      pts.push_back({0, s, t});
      pts.push_back({s, t, 0});
      pts.push_back({t, 0, s});
    }
  std::vector<std::vector<int>> adj(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      double d2 = 0;
      for (int k = 0; k < 3; ++k) d2 += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      if (i != j && std::abs(d2 - 4.0) < 1e-9) adj[i].push_back(static_cast<int>(j));
    }
  return adj;
}

// Backtracking search for an isomorphism a -> b; returns the map or empty.
inline std::vector<int> isomorphism(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return {};
  auto has = [](const std::vector<std::vector<int>>& g, int u, int v) {
    return std::find(g[u].begin(), g[u].end(), v) != g[u].end();
  };
  std::vector<int> map(n, -1), used(n, 0);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || a[i].size() != b[c].size()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = has(a, static_cast<int>(i), static_cast<int>(j)) == has(b, static_cast<int>(c), map[j]);
      if (!ok) continue;
      map[i] = static_cast<int>(c);
      used[c] = 1;
      if (self(self, i + 1)) return true;
      used[c] = 0;
      map[i] = -1;
    }
    return false;
  };
  return extend(extend, 0) ? map : std::vector<int>{};
}

// Exact translation of a fraction label a/c by k: (a + k c)/c.
inline Pair translate(Pair p, int k, int n) { return rep(p.first + static_cast<long long>(k) * p.second, p.second, n); }

inline std::string label(Pair p) { return std::to_string(p.first) + "/" + std::to_string(p.second); }

}  // namespace oracle
