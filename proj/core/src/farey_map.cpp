#include "farey/farey_map.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace farey {

Face make_face(const FareyFraction& x, const FareyFraction& y, const FareyFraction& z) {
  if (y < x && y < z) return Face{{y, z, x}};
  if (z < x && z < y) return Face{{z, x, y}};
  return Face{{x, y, z}};
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::int64_t mu(int n) {
  if (n < 3) throw Error(ErrorCode::Unsupported, "mu(n) requires n >= 3, got " + std::to_string(n));
  std::int64_t result = std::int64_t{n} * n * n;
  for (int p : prime_divisors(n)) result = result / (std::int64_t{p} * p) * (std::int64_t{p} * p - 1);
  return result / 2;
}

std::int64_t genus(int n) {
  if (n < 3) throw Error(ErrorCode::Unsupported, "genus(n) requires n >= 3, got " + std::to_string(n));
  std::int64_t num = std::int64_t{n} * n * (n - 6);
  std::int64_t den = 24;
  for (int p : prime_divisors(n)) {
    num *= std::int64_t{p} * p - 1;
    den *= std::int64_t{p} * p;
  }
  if (num % den != 0) {
    throw Error(ErrorCode::NonIntegral, "genus formula is not integral at n = " + std::to_string(n));
  }
  return 1 + num / den;
}

std::vector<FareyFraction> all_vertices(int n) {
  std::vector<FareyFraction> out;
  for (int den = 0; 2 * den <= n; ++den) {
    for (int num = 0; num < n; ++num) {
      if (std::gcd(std::gcd(num, den), n) != 1) continue;
      const auto f = FareyFraction::canonical(num, den, n);
      if (f.num() == num && f.den() == den) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> make_lookup(std::span<const FareyFraction> vertices, int n) {
  std::vector<int> lookup(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::int64_t a = vertices[i].num(), c = vertices[i].den();
    lookup[a * n + c] = static_cast<int>(i);
    lookup[mod(-a, n) * n + mod(-c, n)] = static_cast<int>(i);
  }
  return lookup;
}

}  // namespace

FareyMap FareyMap::build(int n, int bound) {
  if (n < 3) throw Error(ErrorCode::Unsupported, "M3(n) requires n >= 3, got " + std::to_string(n));
  if (n > bound) {
    throw Error(ErrorCode::ResourceLimit,
                "level " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  FareyMap map;
  map.level_ = n;
  map.vertices_ = all_vertices(n);
  map.vertex_lookup_ = make_lookup(map.vertices_, n);

  const auto nv = map.vertices_.size();
  const auto nd = nv * n;

  // Lift of each vertex v: a matrix (A B / C D) with first column +-v, plus
  // (u, w) with u·A + w·C = 1 (mod n). Dart v*n + k is lift(v)·T^k.
  struct Lift {
    std::int64_t a, b, c, d, u, w;
  };
  std::vector<Lift> lifts(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (v == 0) {
      lifts[v] = {1, 0, 0, 1, 1, 0};  // 1/0 is lifted by the identity
      continue;
    }
    const auto m = ModMatrix::with_first_column(map.vertices_[v].num(), map.vertices_[v].den(), n);
    lifts[v] = {m.a(), m.b(), m.c(), m.d(), m.d(), mod(-m.b(), n)};
  }

  map.source_.resize(nd);
  map.sigma_.resize(nd);
  map.sigma_inv_.resize(nd);
  map.alpha_.resize(nd);
  for (std::size_t v = 0; v < nv; ++v) {
    const Lift& lv = lifts[v];
    for (int k = 0; k < n; ++k) {
      const auto dart = static_cast<int>(v * n + k);
      map.source_[dart] = static_cast<int>(v);
      map.sigma_[dart] = static_cast<int>(v * n + (k + 1) % n);
      map.sigma_inv_[dart] = static_cast<int>(v * n + (k + n - 1) % n);

      // g·S = (B, -A / D, -C) for g = (A, B / C, D).
      const std::int64_t ga = lv.a, gc = lv.c;
      const std::int64_t gb = mod(lv.b + k * lv.a, n), gd = mod(lv.d + k * lv.c, n);
      const int w = map.vertex_lookup_[gb * n + gd];
      const Lift& lw = lifts[w];
      const std::int64_t s = (mod(lw.a, n) == gb && mod(lw.c, n) == gd) ? 1 : -1;
      const std::int64_t x = mod(-s * ga - lw.b, n);
      const std::int64_t y = mod(-s * gc - lw.d, n);
      const std::int64_t kk = mod(lw.u * x + lw.w * y, n);
      map.alpha_[dart] = static_cast<int>(w * n + kk);
    }
  }
  map.finish();
  return map;
}

FareyMap FareyMap::from_faces(int n, std::vector<FareyFraction> vertices, std::span<const Face> faces) {
  FareyMap map;
  map.level_ = n;
  std::sort(vertices.begin(), vertices.end());
  map.vertices_ = std::move(vertices);
  map.vertex_lookup_ = make_lookup(map.vertices_, n);

  const auto nd = faces.size() * 3;
  map.source_.resize(nd);
  map.alpha_.assign(nd, -1);
  map.sigma_.resize(nd);
  map.sigma_inv_.resize(nd);

  std::unordered_map<std::int64_t, int> by_pair;
  const auto key = [&](int u, int v) { return std::int64_t{u} * static_cast<std::int64_t>(nd + 1) + v; };
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int j = 0; j < 3; ++j) {
      const int dart = static_cast<int>(3 * f + j);
      map.source_[dart] = map.index_of(faces[f].v[j]);
    }
    for (int j = 0; j < 3; ++j) {
      const int dart = static_cast<int>(3 * f + j);
      const int next = static_cast<int>(3 * f + (j + 1) % 3);
      if (!by_pair.emplace(key(map.source_[dart], map.source_[next]), dart).second) {
        throw Error(ErrorCode::InvalidArgument, "directed edge used by two faces");
      }
    }
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int j = 0; j < 3; ++j) {
      const int dart = static_cast<int>(3 * f + j);
      const int next = static_cast<int>(3 * f + (j + 1) % 3);
      auto it = by_pair.find(key(map.source_[next], map.source_[dart]));
      if (it == by_pair.end()) throw Error(ErrorCode::InvalidArgument, "face list is not closed");
      map.alpha_[dart] = it->second;
    }
  }
  // sigma(d) = alpha(face predecessor of d).
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int j = 0; j < 3; ++j) {
      const int dart = static_cast<int>(3 * f + j);
      const int prev = static_cast<int>(3 * f + (j + 2) % 3);
      map.sigma_[dart] = map.alpha_[prev];
    }
  }
  for (std::size_t d = 0; d < nd; ++d) map.sigma_inv_[map.sigma_[d]] = static_cast<int>(d);
  map.finish();
  return map;
}

void FareyMap::finish() {
  const auto nd = source_.size();
  first_dart_.assign(vertices_.size(), -1);
  for (std::size_t d = nd; d-- > 0;) first_dart_[source_[d]] = static_cast<int>(d);

  // Face orbits of phi, each recorded by its dart at the least vertex.
  face_of_.assign(nd, -1);
  std::vector<std::array<int, 4>> orbits;  // three vertex indices + leading dart
  orbits.reserve(nd / 3);
  for (std::size_t d0 = 0; d0 < nd; ++d0) {
    if (face_of_[d0] != -1) continue;
    int d = static_cast<int>(d0);
    int lead = d;
    int len = 0;
    do {
      face_of_[d] = 0;
      if (source_[d] < source_[lead]) lead = d;
      d = phi(d);
      ++len;
    } while (d != static_cast<int>(d0));
    if (len != 3) throw Error(ErrorCode::InvalidArgument, "face orbit of size " + std::to_string(len));
    orbits.push_back({source_[lead], source_[phi(lead)], source_[phi(phi(lead))], lead});
  }
  std::sort(orbits.begin(), orbits.end());
  faces_.clear();
  faces_.reserve(orbits.size());
  face_dart_.resize(orbits.size());
  for (std::size_t f = 0; f < orbits.size(); ++f) {
    const auto& o = orbits[f];
    faces_.push_back(Face{{vertices_[o[0]], vertices_[o[1]], vertices_[o[2]]}});
    face_dart_[f] = o[3];
    int d = o[3];
    for (int j = 0; j < 3; ++j, d = phi(d)) face_of_[d] = static_cast<int>(f);
  }
}

std::optional<int> FareyMap::find(const FareyFraction& f) const {
  if (f.level() != level_) return std::nullopt;
  const int idx = vertex_lookup_[static_cast<std::size_t>(f.num()) * level_ + f.den()];
  if (idx < 0) return std::nullopt;
  return idx;
}

int FareyMap::index_of(const FareyFraction& f) const {
  if (auto idx = find(f)) return *idx;
  throw Error(ErrorCode::UnknownVertex, f.str() + " is not a vertex of M3(" + std::to_string(level_) + ")");
}

std::vector<int> FareyMap::neighbor_indices(int vertex) const {
  std::vector<int> out;
  const int start = first_dart_[vertex];
  int d = start;
  do {
    out.push_back(target(d));
    d = sigma_[d];
  } while (d != start);
  return out;
}

std::vector<FareyFraction> FareyMap::neighbors(const FareyFraction& v) const {
  std::vector<FareyFraction> out;
  for (int w : neighbor_indices(index_of(v))) out.push_back(vertices_[w]);
  return out;
}

std::vector<std::pair<int, int>> FareyMap::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges());
  for (std::size_t d = 0; d < source_.size(); ++d) {
    const int u = source_[d], v = target(static_cast<int>(d));
    if (u < v) out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FareyMap::adjacent(int u, int v) const {
  const int start = first_dart_[u];
  int d = start;
  do {
    if (target(d) == v) return true;
    d = sigma_[d];
  } while (d != start);
  return false;
}

std::optional<int> FareyMap::find_face(const FareyFraction& x, const FareyFraction& y,
                                       const FareyFraction& z) const {
  const auto ix = find(x), iy = find(y), iz = find(z);
  if (!ix || !iy || !iz) return std::nullopt;
  const int start = first_dart_[*ix];
  int d = start;
  do {
    if (target(d) == *iy) {
      for (int dart : {d, alpha_[d]}) {
        const int f = face_of_[dart];
        if (faces_[f].contains(z)) return f;
      }
      return std::nullopt;
    }
    d = sigma_[d];
  } while (d != start);
  return std::nullopt;
}

int FareyMap::translate_face(int face, int k) const {
  const Face& f = faces_[face];
  auto g = find_face(f.v[0].translated(k), f.v[1].translated(k), f.v[2].translated(k));
  if (!g) throw Error(ErrorCode::InvalidArgument, "translate of a face is not a face");
  return *g;
}

}  // namespace farey
