#include <gtest/gtest.h>

#include <map>
#include <set>

#include "farey/eleven.hpp"
#include "oracles.hpp"

using namespace farey;

namespace {

const FareyMap& map11() {
  static const FareyMap map = FareyMap::build(11);
  return map;
}

const eleven::Sector& reference_sector() {
  static const eleven::Sector sector = [] {
    eleven::SearchOptions options;
    options.restrict_to = eleven::reference_sector_vertices();
    return eleven::sector_search(map11(), options);
  }();
  return sector;
}

std::vector<std::string> labels(const std::vector<FareyFraction>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.str());
  return out;
}

}  // namespace

TEST(Sector, ReferenceSectorIsValid) {
  const auto& s = reference_sector();
  EXPECT_EQ(s.faces.size(), 20u);
  EXPECT_EQ(eleven::validate_sector(map11(), s), "");
  const auto allowed = eleven::reference_sector_vertices();
  ASSERT_EQ(allowed.size(), 22u);
  std::set<FareyFraction> support;
  for (int f : s.faces)
    for (const auto& v : map11().faces()[f].v) support.insert(v);
  for (const auto& v : support) EXPECT_NE(std::find(allowed.begin(), allowed.end(), v), allowed.end());
  EXPECT_EQ(support.size(), 22u);
}

TEST(Sector, EightOuterFacesTouchTheFirstCircuit) {
  const auto& s = reference_sector();
  const auto a = FareyFraction::parse("0/1", 11), b = FareyFraction::parse("1/1", 11);
  int touching = 0;
  for (int f : s.faces) {
    if (f == s.anchor) continue;
    if (map11().faces()[f].contains(a) || map11().faces()[f].contains(b)) ++touching;
  }
  EXPECT_EQ(touching, 8);
}

TEST(Sector, TranslatesPartitionTheFaces) {
  for (const bool restricted : {true, false}) {
    eleven::SearchOptions options;
    if (restricted) options.restrict_to = eleven::reference_sector_vertices();
    const auto s = eleven::sector_search(map11(), options);
    // Oracle: translate each face's labels directly.
    std::map<std::set<oracle::Pair>, int> owner;
    for (int k = 0; k < 11; ++k) {
      for (int f : s.faces) {
        std::set<oracle::Pair> key;
        for (const auto& v : map11().faces()[f].v) key.insert(oracle::translate(oracle::rep(v.num(), v.den(), 11), k, 11));
        EXPECT_TRUE(owner.emplace(key, k).second);
      }
    }
    EXPECT_EQ(owner.size(), 220u);
    const auto tags = eleven::assemble_wstar(map11(), s);
    ASSERT_EQ(tags.size(), 220u);
    std::vector<int> per(11, 0);
    for (int t : tags) ++per[t];
    for (int c : per) EXPECT_EQ(c, 20);
  }
}

TEST(Sector, ValidationRejectsBrokenSets) {
  auto s = reference_sector();
  s.faces.pop_back();
  EXPECT_NE(eleven::validate_sector(map11(), s), "");
  auto t = reference_sector();
  t.faces.erase(std::find(t.faces.begin(), t.faces.end(), t.anchor));
  t.faces.push_back(map11().translate_face(t.anchor, 1));
  std::sort(t.faces.begin(), t.faces.end());
  EXPECT_NE(eleven::validate_sector(map11(), t), "");
}

TEST(Sector, SearchIsDeterministic) {
  const auto a = eleven::sector_search(map11());
  const auto b = eleven::sector_search(map11());
  EXPECT_EQ(a.faces, b.faces);
}

TEST(Sector, WrongLevelAndEmptyRestriction) {
  const auto map7 = FareyMap::build(7);
  try {
    eleven::sector_search(map7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongLevel);
  }
  eleven::SearchOptions options;
  options.restrict_to = std::vector<FareyFraction>{FareyFraction::parse("1/0", 11)};
  try {
    eleven::sector_search(map11(), options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSector);
  }
}

TEST(Boundary, ReproducesTheReferenceTable) {
  const auto walk = eleven::boundary_walk(map11(), reference_sector());
  ASSERT_EQ(walk.size(), 198u);
  const auto rows = eleven::table_rows(walk);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(labels(rows[0]), (std::vector<std::string>{"1/5", "1/4", "1/3", "2/5", "1/2", "5/0", "6/2", "7/4", "3/5",
                                                       "6/3", "4/0", "2/3", "6/4", "3/0", "3/4", "4/2", "4/5", "2/0",
                                                       "6/5"}));
  EXPECT_EQ(rows, eleven::reference_boundary_table());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    ASSERT_EQ(rows[k].size(), 19u);
    for (std::size_t j = 0; j < 19; ++j) EXPECT_EQ(rows[k][j], rows[0][j].translated(static_cast<int>(k)));
    if (k + 1 < rows.size()) EXPECT_EQ(rows[k].back(), rows[k + 1].front());
  }
}

TEST(Boundary, WalkInvariants) {
  const auto walk = eleven::boundary_walk(map11(), reference_sector());
  std::map<std::string, int> poles;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto& x = walk.at(i);
    const auto& y = walk.at(i + 1);
    EXPECT_TRUE(oracle::adjacent(oracle::rep(x.num(), x.den(), 11), oracle::rep(y.num(), y.den(), 11), 11));
    if (x.is_pole()) ++poles[x.str()];
    // Shifting labels by one equals rotating by a row.
    EXPECT_EQ(walk.at(i).translated(1), walk.at(i + 18));
  }
  EXPECT_EQ(poles, (std::map<std::string, int>{{"2/0", 11}, {"3/0", 11}, {"4/0", 11}, {"5/0", 11}}));
}

TEST(Boundary, WStarIsADisk) {
  const auto c = eleven::wstar_complex(map11(), reference_sector());
  EXPECT_TRUE(c.is_disk());
  EXPECT_EQ(c.num_faces(), 220u);
  EXPECT_EQ(c.num_boundary_darts(), 198u);
  EXPECT_EQ(c.num_glued_edges(), 231u);
  EXPECT_EQ(c.euler_characteristic(), 1);
}

TEST(Pairs, OrientableAndMatchesKnownExamples) {
  const auto walk = eleven::boundary_walk(map11(), reference_sector());
  const auto pairs = eleven::pair_boundary(walk);
  ASSERT_EQ(pairs.size(), 99u);
  std::vector<int> partner(198, -1);
  for (auto [i, j] : pairs) {
    EXPECT_EQ(walk.at(i), walk.at(j + 1));
    EXPECT_EQ(walk.at(i + 1), walk.at(j));
    partner[i] = j;
    partner[j] = i;
  }
  for (int i = 0; i < 198; ++i) {
    ASSERT_GE(partner[i], 0);
    EXPECT_EQ(partner[partner[i]], i);
    EXPECT_NE(partner[i], i);
  }
  // Row 1: 1/5 -> 1/4 with row 5: 1/4 -> 1/5; row 1: 1/4 -> 1/3 with row 8.
  EXPECT_EQ(eleven::table_position(partner[0]).first, 5);
  EXPECT_EQ(walk.at(partner[0]).str(), "1/4");
  EXPECT_EQ(eleven::table_position(partner[1]).first, 8);
  EXPECT_EQ(walk.at(partner[1]).str(), "1/3");
}

TEST(Pairs, QuotientGenus) {
  const auto walk = eleven::boundary_walk(map11(), reference_sector());
  const auto pairs = eleven::pair_boundary(walk);
  EXPECT_EQ(eleven::quotient_genus(map11(), reference_sector(), walk, pairs), 26);
  EXPECT_EQ(genus_from_euler(map11().euler_characteristic()), 26);
}

TEST(Pairs, RestrictionCount) {
  eleven::SearchOptions options;
  options.restrict_to = eleven::reference_sector_vertices();
  EXPECT_EQ(eleven::count_sectors(map11(), options), 1u);
}
