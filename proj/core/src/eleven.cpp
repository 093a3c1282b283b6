#include "farey/eleven.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string_view>

namespace farey::eleven {
namespace {

FareyFraction ff(std::string_view s) { return FareyFraction::parse(s, kLevel); }

void require_level(const FareyMap& map) {
  if (map.level() != kLevel) {
    throw Error(ErrorCode::WrongLevel, "expected M3(11), got level " + std::to_string(map.level()));
  }
}

// Translation structure of the 220 faces.
struct FaceData {
  std::vector<int> orbit;       // 0..19, numbered by least face id in the orbit
  std::vector<char> touches;    // has a vertex 0/1 or 1/1
  std::vector<std::array<int, 3>> adjacent;  // faces across each edge
  int anchor = -1;
};

FaceData face_data(const FareyMap& map) {
  const auto nf = map.num_faces();
  FaceData data;
  data.orbit.assign(nf, -1);
  data.touches.assign(nf, 0);
  data.adjacent.resize(nf);
  int next_orbit = 0;
  for (std::size_t f = 0; f < nf; ++f) {
    if (data.orbit[f] >= 0) continue;
    for (int k = 0; k < kLevel; ++k) data.orbit[map.translate_face(static_cast<int>(f), k)] = next_orbit;
    ++next_orbit;
  }
  const FareyFraction zero = ff("0/1"), one = ff("1/1");
  for (std::size_t f = 0; f < nf; ++f) {
    data.touches[f] = map.faces()[f].contains(zero) || map.faces()[f].contains(one);
    int d = map.face_dart(static_cast<int>(f));
    for (int j = 0; j < 3; ++j, d = map.phi(d)) data.adjacent[f][j] = map.face_of(map.alpha(d));
  }
  data.anchor = *map.find_face(ff("1/0"), ff("0/1"), ff("1/1"));
  return data;
}

bool is_core(const FareyFraction& f) { return f.den() == 1 || (f.den() == 0 && f.num() == 1); }

int touching_count(const FaceData& data, const std::vector<int>& faces) {
  int count = 0;
  for (int f : faces)
    if (f != data.anchor && data.touches[f]) ++count;
  return count;
}

inline constexpr int kTouching = 8;

class Search {
 public:
  Search(const FareyMap& map, const SearchOptions& options, std::size_t limit)
      : map_(map), data_(face_data(map)), limit_(limit) {
    const auto nf = map.num_faces();
    allowed_.assign(nf, 1);
    if (options.restrict_to) {
      std::vector<char> in_set(map.num_vertices(), 0);
      for (const auto& v : *options.restrict_to) {
        if (auto idx = map.find(v)) in_set[*idx] = 1;
      }
      for (std::size_t f = 0; f < nf; ++f) {
        for (const auto& v : map.faces()[f].v)
          if (!in_set[map.index_of(v)]) allowed_[f] = 0;
      }
    }
  }

  void run() {
    if (!allowed_[data_.anchor]) return;
    State s;
    s.in_set.assign(map_.num_faces(), 0);
    s.excluded.assign(map_.num_faces(), 0);
    s.frontier.assign(map_.num_faces(), 0);
    add(s, data_.anchor);
    dfs(std::move(s));
  }

  const std::vector<Sector>& found() const { return found_; }

 private:
  struct State {
    std::vector<int> chosen;
    std::vector<char> in_set, excluded, frontier;
    std::uint32_t used_orbits = 0;
    int touching = 0;
  };

  void add(State& s, int f) const {
    s.chosen.push_back(f);
    s.in_set[f] = 1;
    s.frontier[f] = 0;
    s.used_orbits |= 1u << data_.orbit[f];
    if (f != data_.anchor && data_.touches[f]) ++s.touching;
    for (int g : data_.adjacent[f])
      if (!s.in_set[g]) s.frontier[g] = 1;
  }

  bool usable(const State& s, int f) const {
    return s.frontier[f] && !s.excluded[f] && allowed_[f] && !(s.used_orbits & (1u << data_.orbit[f])) &&
           !(data_.touches[f] && s.touching >= kTouching);
  }

  // Include/exclude branching on the least usable frontier face enumerates
  // each connected face set once.
  void dfs(State s) {
    while (found_.size() < limit_) {
      if (static_cast<int>(s.chosen.size()) == kSectorFaces) {
        accept(s);
        return;
      }
      int pick = -1;
      for (std::size_t f = 0; f < s.frontier.size(); ++f) {
        if (usable(s, static_cast<int>(f))) {
          pick = static_cast<int>(f);
          break;
        }
      }
      if (pick < 0) return;
      State with = s;
      add(with, pick);
      dfs(std::move(with));
      s.excluded[pick] = 1;
    }
  }

  void accept(const State& s) {
    if (s.touching != kTouching) return;
    Sector sector{s.chosen, data_.anchor};
    std::sort(sector.faces.begin(), sector.faces.end());
    if (!wstar_complex(map_, sector).is_disk()) return;
    found_.push_back(std::move(sector));
  }

  const FareyMap& map_;
  FaceData data_;
  std::vector<char> allowed_;
  std::size_t limit_;
  std::vector<Sector> found_;
};

}  // namespace

std::vector<FareyFraction> reference_sector_vertices() {
  std::vector<FareyFraction> out;
  for (auto s : {"1/0", "0/1", "1/5", "1/4", "1/3", "2/5", "1/2", "5/0", "6/2", "7/4", "3/5",
                 "6/3", "4/0", "2/3", "6/4", "3/0", "3/4", "4/2", "4/5", "2/0", "6/5", "1/1"}) {
    out.push_back(ff(s));
  }
  return out;
}

std::vector<std::vector<FareyFraction>> reference_boundary_table() {
  static constexpr std::array<std::array<std::string_view, kTableColumns>, kLevel> rows{{
      {"1/5", "1/4", "1/3", "2/5", "1/2", "5/0", "6/2", "7/4", "3/5", "6/3", "4/0", "2/3", "6/4", "3/0", "3/4", "4/2", "4/5", "2/0", "6/5"},
      {"6/5", "5/4", "4/3", "7/5", "3/2", "5/0", "8/2", "0/4", "8/5", "9/3", "4/0", "5/3", "10/4", "3/0", "7/4", "6/2", "9/5", "2/0", "0/5"},
      {"0/5", "9/4", "7/3", "1/5", "5/2", "5/0", "10/2", "4/4", "2/5", "1/3", "4/0", "8/3", "3/4", "3/0", "0/4", "8/2", "3/5", "2/0", "5/5"},
      {"5/5", "2/4", "10/3", "6/5", "7/2", "5/0", "1/2", "8/4", "7/5", "4/3", "4/0", "0/3", "7/4", "3/0", "4/4", "10/2", "8/5", "2/0", "10/5"},
      {"10/5", "6/4", "2/3", "0/5", "9/2", "5/0", "3/2", "1/4", "1/5", "7/3", "4/0", "3/3", "0/4", "3/0", "8/4", "1/2", "2/5", "2/0", "4/5"},
      {"4/5", "10/4", "5/3", "5/5", "0/2", "5/0", "5/2", "5/4", "6/5", "10/3", "4/0", "6/3", "4/4", "3/0", "1/4", "3/2", "7/5", "2/0", "9/5"},
      {"9/5", "3/4", "8/3", "10/5", "2/2", "5/0", "7/2", "9/4", "0/5", "2/3", "4/0", "9/3", "8/4", "3/0", "5/4", "5/2", "1/5", "2/0", "3/5"},
      {"3/5", "7/4", "0/3", "4/5", "4/2", "5/0", "9/2", "2/4", "5/5", "5/3", "4/0", "1/3", "1/4", "3/0", "9/4", "7/2", "6/5", "2/0", "8/5"},
      {"8/5", "0/4", "3/3", "9/5", "6/2", "5/0", "0/2", "6/4", "10/5", "8/3", "4/0", "4/3", "5/4", "3/0", "2/4", "9/2", "0/5", "2/0", "2/5"},
      {"2/5", "4/4", "6/3", "3/5", "8/2", "5/0", "2/2", "10/4", "4/5", "0/3", "4/0", "7/3", "9/4", "3/0", "6/4", "0/2", "5/5", "2/0", "7/5"},
      {"7/5", "8/4", "9/3", "8/5", "10/2", "5/0", "4/2", "3/4", "9/5", "3/3", "4/0", "10/3", "2/4", "3/0", "10/4", "2/2", "10/5", "2/0", "1/5"},
  }};
  std::vector<std::vector<FareyFraction>> out;
  for (const auto& row : rows) {
    std::vector<FareyFraction> labels;
    for (auto s : row) labels.push_back(ff(s));
    out.push_back(std::move(labels));
  }
  return out;
}

Sector sector_search(const FareyMap& map, const SearchOptions& options) {
  require_level(map);
  Search search(map, options, 1);
  search.run();
  if (search.found().empty()) throw Error(ErrorCode::NoSector, "search space exhausted");
  return search.found().front();
}

std::size_t count_sectors(const FareyMap& map, const SearchOptions& options) {
  require_level(map);
  Search search(map, options, options.limit);
  search.run();
  return search.found().size();
}

std::string validate_sector(const FareyMap& map, const Sector& sector) {
  require_level(map);
  const auto data = face_data(map);
  if (static_cast<int>(sector.faces.size()) != kSectorFaces) return "sector does not have 20 faces";
  if (std::find(sector.faces.begin(), sector.faces.end(), data.anchor) == sector.faces.end()) {
    return "sector misses the central triangle";
  }
  std::uint32_t orbits = 0;
  for (int f : sector.faces) {
    if (orbits & (1u << data.orbit[f])) return "two faces are translates of each other";
    orbits |= 1u << data.orbit[f];
  }
  std::vector<char> member(map.num_faces(), 0), seen(map.num_faces(), 0);
  for (int f : sector.faces) member[f] = 1;
  std::deque<int> queue{data.anchor};
  seen[data.anchor] = 1;
  std::size_t reached = 0;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    ++reached;
    for (int g : data.adjacent[f]) {
      if (member[g] && !seen[g]) {
        seen[g] = 1;
        queue.push_back(g);
      }
    }
  }
  if (reached != sector.faces.size()) return "sector is not edge-connected";
  if (touching_count(data, sector.faces) != kTouching) return "sector does not have 8 faces on the first circuit";
  if (!wstar_complex(map, sector).is_disk()) return "W* is not a disk";
  return {};
}

std::vector<int> assemble_wstar(const FareyMap& map, const Sector& sector) {
  require_level(map);
  std::vector<int> tag(map.num_faces(), -1);
  for (int f : sector.faces) {
    for (int k = 0; k < kLevel; ++k) {
      const int g = map.translate_face(f, k);
      if (tag[g] != -1) throw Error(ErrorCode::InvalidArgument, "sector translates overlap");
      tag[g] = k;
    }
  }
  if (std::find(tag.begin(), tag.end(), -1) != tag.end()) {
    throw Error(ErrorCode::InvalidArgument, "sector translates do not cover the map");
  }
  return tag;
}

CutComplex wstar_complex(const FareyMap& map, const Sector& sector) {
  const auto tag = assemble_wstar(map, sector);
  const auto glue = [&](int dart) {
    if (tag[map.face_of(dart)] == tag[map.face_of(map.alpha(dart))]) return true;
    return is_core(map.vertex(map.source(dart))) || is_core(map.vertex(map.target(dart)));
  };
  return CutComplex(map, std::vector<char>(map.num_faces(), 1), glue);
}

BoundaryWalk boundary_walk(const FareyMap& map, const Sector& sector) {
  require_level(map);
  BoundaryWalk walk = wstar_complex(map, sector).boundary();
  const FareyFraction first = ff("1/5"), second = ff("1/4");
  std::size_t start = 0;
  bool anchored = false;
  for (std::size_t s = 0; s < walk.size(); ++s) {
    if (walk.at(s) == first && walk.at(s + 1) == second) {
      start = s;
      anchored = true;
      break;
    }
  }
  if (!anchored) {
    for (std::size_t s = 1; s < walk.size(); ++s) {
      if (std::tie(walk.at(s), walk.at(s + 1)) < std::tie(walk.at(start), walk.at(start + 1))) start = s;
    }
  }
  return walk.rotated(start);
}

std::vector<std::vector<FareyFraction>> table_rows(const BoundaryWalk& walk) {
  const std::size_t per_row = walk.size() / kLevel;
  std::vector<std::vector<FareyFraction>> rows(kLevel);
  for (int k = 0; k < kLevel; ++k) {
    for (std::size_t i = 0; i <= per_row; ++i) rows[k].push_back(walk.at(k * per_row + i));
  }
  return rows;
}

std::vector<std::pair<int, int>> pair_boundary(const BoundaryWalk& walk) { return pair_reverse_edges(walk); }

std::int64_t quotient_genus(const FareyMap& map, const Sector& sector, const BoundaryWalk& walk,
                            const std::vector<std::pair<int, int>>& pairs) {
  const auto complex = wstar_complex(map, sector);
  return genus_from_euler(complex.quotient_euler(walk, pairs));
}

std::pair<int, int> table_position(int slot) {
  constexpr int per_row = 18;
  return {slot / per_row + 1, slot % per_row};
}

}  // namespace farey::eleven
