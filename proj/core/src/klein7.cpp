#include "farey/klein7.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "farey/metrics.hpp"

namespace farey::klein7 {
namespace {

constexpr int kLevel = 7;

void require_level7(const FareyMap& map) {
  if (map.level() != kLevel) {
    throw Error(ErrorCode::WrongLevel, "expected M3(7), got level " + std::to_string(map.level()));
  }
}

FareyFraction ff(int a, int c) { return FareyFraction::canonical(a, c, kLevel); }

// Side 1 of the classical polygon runs anticlockwise from 2/0 through 5/3 and 3/2 to 3/0.
std::array<FareyFraction, 4> side_one_labels() { return {ff(2, 0), ff(5, 3), ff(3, 2), ff(3, 0)}; }

struct Cut {
  std::vector<char> glued;  // per dart
  BoundaryWalk walk;
  std::int64_t disk_euler;
};

// Cuts M3(7) open along every edge at the outer poles 2/0, 3/0 and along one
// translation orbit of the non-seam edges of the S2 walk. `offset` picks the
// orbit: walk edges whose position within a block of three equals offset.
std::optional<Cut> try_cut(const FareyMap& map, int offset) {
  const auto walk_circuit = circuit_S2(kLevel);
  const int block = static_cast<int>(seq_S(kLevel).size());
  std::set<std::pair<int, int>> cut_edges;
  const auto len = walk_circuit.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (static_cast<int>(i % block) != offset) continue;
    int u = map.index_of(walk_circuit.vertices[i]);
    int v = map.index_of(walk_circuit.vertices[(i + 1) % len]);
    cut_edges.emplace(std::min(u, v), std::max(u, v));
  }
  const int pole2 = map.index_of(ff(2, 0));
  const int pole3 = map.index_of(ff(3, 0));

  const auto glue = [&](int dart) {
    const int u = map.source(dart), v = map.target(dart);
    if (u == pole2 || u == pole3 || v == pole2 || v == pole3) return false;
    return cut_edges.count({std::min(u, v), std::max(u, v)}) == 0;
  };
  CutComplex complex(map, std::vector<char>(map.num_faces(), 1), glue);
  std::vector<char> glued(map.num_darts());
  for (std::size_t d = 0; d < glued.size(); ++d) glued[d] = complex.glued(static_cast<int>(d));

  BoundaryWalk walk;
  try {
    walk = complex.boundary();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DisconnectedBoundary) return std::nullopt;
    throw;
  }
  const auto anchor = side_one_labels();
  for (std::size_t s = 0; s < walk.size(); ++s) {
    bool match = true;
    for (std::size_t j = 0; j < 4 && match; ++j) match = walk.at(s + j) == anchor[j];
    if (match) return Cut{std::move(glued), walk.rotated(s), complex.euler_characteristic()};
  }
  return std::nullopt;
}

CutComplex complex_of(const FareyMap& map, const std::vector<char>& glued) {
  return CutComplex(map, std::vector<char>(map.num_faces(), 1),
                    [&glued](int dart) { return glued[dart] != 0; });
}

// Glue flags are needed again for the quotient; recover them from the walk.
std::vector<char> glued_from(const FareyMap& map, const FourteenGon& gon) {
  std::vector<char> glued(map.num_darts(), 1);
  for (int d : gon.walk.darts) {
    glued[d] = 0;
    glued[map.alpha(d)] = 0;
  }
  return glued;
}

}  // namespace

int SidePairing::partner(int side) const {
  for (auto [i, j] : pairs) {
    if (i == side) return j;
    if (j == side) return i;
  }
  throw Error(ErrorCode::NoMatch, "side " + std::to_string(side) + " is unpaired");
}

FourteenGon fourteen_gon(const FareyMap& map) {
  require_level7(map);
  const int block = static_cast<int>(seq_S(kLevel).size());
  std::optional<Cut> cut;
  // The last position of a block is the seam under a 2/0 triangle, never cut.
  for (int offset = 0; offset + 1 < block && !cut; ++offset) cut = try_cut(map, offset);
  if (!cut) throw Error(ErrorCode::NoMatch, "no cut of M3(7) has the side (2/0, 5/3, 3/2, 3/0)");

  FourteenGon gon{std::move(cut->walk), {}, cut->disk_euler};
  const auto& walk = gon.walk;
  if (walk.size() % 3 != 0) throw Error(ErrorCode::NoMatch, "boundary length is not a multiple of 3");
  const FareyFraction pole2 = ff(2, 0), pole3 = ff(3, 0);
  for (std::size_t s = 0; s < walk.size(); s += 3) {
    Side side{static_cast<int>(s / 3 + 1),
              {walk.at(s), walk.at(s + 1), walk.at(s + 2), walk.at(s + 3)},
              {walk.at(s), walk.at(s + 1), walk.at(s + 2), walk.at(s + 3)},
              {static_cast<int>(s), static_cast<int>(s + 1), static_cast<int>(s + 2)}};
    if (side.labels[0] != pole2) std::reverse(side.labels.begin(), side.labels.end());
    if (side.labels[0] != pole2 || side.labels[3] != pole3) {
      throw Error(ErrorCode::NoMatch, "side " + std::to_string(side.index) + " does not join 2/0 to 3/0");
    }
    gon.sides.push_back(side);
  }
  return gon;
}

std::vector<OuterPiece> outer_ring(const FareyMap& map) {
  require_level7(map);
  const auto gon = fourteen_gon(map);
  const int t0 = *map.find_face(ff(6, 3), ff(2, 0), ff(1, 3));
  const int b0 = *map.find_face(ff(5, 2), ff(3, 0), ff(1, 2));
  const auto shift_of = [&](int base, int face) {
    for (int k = 0; k < kLevel; ++k)
      if (map.translate_face(base, k) == face) return k;
    throw Error(ErrorCode::NoMatch, "face is not a translate of the base piece");
  };

  std::vector<OuterPiece> ring;
  for (std::size_t s = 0; s < gon.walk.size(); s += 3) {
    const int dart = gon.walk.darts[s];
    const FareyFraction& corner = gon.walk.at(s);
    const int face = map.face_of(dart);
    if (corner == ff(2, 0)) {
      const Face& f = map.faces()[face];
      // Rotate so the apex sits in the middle, as in "6/3, 2/0, 1/3".
      int apex = 0;
      while (f.v[apex] != corner) ++apex;
      ring.push_back({OuterPiece::Kind::Triangle, shift_of(t0, face),
                      {f.v[(apex + 2) % 3], f.v[apex], f.v[(apex + 1) % 3]}, {face}});
    } else {
      // B = (3/0, y, y'); the face across y -> y' completes the quadrilateral.
      const int to_y = dart;
      const int across = map.alpha(map.phi(to_y));
      const int a_face = map.face_of(across);
      const FareyFraction y = map.vertex(map.target(to_y));
      const FareyFraction x = map.vertex(map.target(map.phi(across)));
      const FareyFraction y2 = map.vertex(map.source(across));
      // Anticlockwise 3/0 -> y -> x -> y', listed starting from x.
      ring.push_back({OuterPiece::Kind::Quadrilateral, shift_of(b0, face), {x, y2, corner, y}, {a_face, face}});
    }
  }
  return ring;
}

SidePairing side_pairing(const FourteenGon& gon) {
  SidePairing out;
  for (const auto& side : gon.sides) {
    std::array<FareyFraction, 4> reversed = side.traversed;
    std::reverse(reversed.begin(), reversed.end());
    std::vector<int> matches;
    for (const auto& other : gon.sides)
      if (other.index != side.index && other.traversed == reversed) matches.push_back(other.index);
    if (matches.size() != 1) {
      throw Error(ErrorCode::NoMatch, "side " + std::to_string(side.index) + " has " +
                                          std::to_string(matches.size()) + " reversed partners");
    }
    if (side.index < matches.front()) out.pairs.emplace_back(side.index, matches.front());
  }
  if (out.pairs.size() * 2 != gon.sides.size()) throw Error(ErrorCode::NoMatch, "pairing is not an involution");
  return out;
}

std::int64_t quotient_euler(const FareyMap& map, const FourteenGon& gon, const SidePairing& pairing) {
  const auto complex = complex_of(map, glued_from(map, gon));
  std::vector<std::pair<int, int>> edge_pairs;
  for (auto [i, j] : pairing.pairs) {
    const auto& a = gon.sides[i - 1].edges;
    const auto& b = gon.sides[j - 1].edges;
    for (int k = 0; k < 3; ++k) edge_pairs.emplace_back(a[k], b[2 - k]);
  }
  return complex.quotient_euler(gon.walk, edge_pairs);
}

std::vector<std::pair<int, int>> expected_pairing() {
  return {{1, 6}, {3, 8}, {5, 10}, {7, 12}, {9, 14}, {11, 2}, {13, 4}};
}

MatrixReport verify_klein_matrix() {
  MatrixReport r{IntMatrix{113, -35, 42, -13},
                 false,
                 {ExtRational(2, 7), ExtRational(1, 3), ExtRational(3, 7)},
                 {ExtRational(1, 0), ExtRational(1, 0), ExtRational(1, 0)},
                 {ExtRational(18, 7), ExtRational(8, 3), ExtRational(19, 7)},
                 {},
                 {},
                 false,
                 {}};
  r.in_gamma7 = in_principal_congruence(r.matrix, kLevel);
  for (int i = 0; i < 3; ++i) r.images[i] = mobius_exact(r.matrix, r.edge1[i]);
  for (int i = 0; i < 2; ++i) {
    r.dets_before[i] = farey_det(r.edge1[i], r.edge1[i + 1]);
    r.dets_after[i] = farey_det(r.images[i], r.images[i + 1]);
  }
  // Paired sides are traversed in opposite directions, so 2/7 should land on 19/7.
  r.endpoints_match_printed = true;
  for (int i = 0; i < 3; ++i) {
    const auto& expected = r.printed_edge6[2 - i];
    if (r.images[i] != expected) {
      r.endpoints_match_printed = false;
      r.discrepancies.push_back(r.edge1[i].str() + " maps to " + r.images[i].str() + ", printed " +
                                expected.str());
    }
  }
  return r;
}

std::string MatrixReport::str() const {
  std::ostringstream os;
  os << "matrix " << matrix.str() << " det=" << matrix.det() << "\n";
  os << "in Gamma(7): " << (in_gamma7 ? "yes" : "no") << "\n";
  for (int i = 0; i < 3; ++i) os << "  " << edge1[i] << " -> " << images[i] << "\n";
  os << "segment dets before: (" << edge1[0] << ", " << edge1[1] << ") = " << dets_before[0] << ", ("
     << edge1[1] << ", " << edge1[2] << ") = " << dets_before[1] << "\n";
  os << "segment dets after:  (" << images[0] << ", " << images[1] << ") = " << dets_after[0] << ", ("
     << images[1] << ", " << images[2] << ") = " << dets_after[1] << "\n";
  os << "printed edge 6: " << printed_edge6[0] << ", " << printed_edge6[1] << ", " << printed_edge6[2] << "\n";
  os << "endpoints match printed: " << (endpoints_match_printed ? "yes" : "no") << "\n";
  for (const auto& d : discrepancies) os << "  discrepancy: " << d << "\n";
  return os.str();
}

}  // namespace farey::klein7
