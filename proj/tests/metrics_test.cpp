#include <gtest/gtest.h>

#include "farey/metrics.hpp"
#include "oracles.hpp"

using namespace farey;

namespace {

std::vector<std::string> labels(const std::vector<FareyFraction>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.str());
  return out;
}

}  // namespace

TEST(Distance, FormulaMatchesOracleBfsOnAllPairs) {
  for (int p : {5, 7, 11, 13}) {
    const auto g = oracle::farey_graph(p);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      const auto dist = oracle::bfs(g.adj, static_cast<int>(i));
      for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
        const auto f = FareyFraction::canonical(g.vertices[i].first, g.vertices[i].second, p);
        const auto h = FareyFraction::canonical(g.vertices[j].first, g.vertices[j].second, p);
        ASSERT_EQ(distance_formula(f, h, p), dist[j]) << f << " " << h;
        ++pairs;
      }
    }
    EXPECT_EQ(pairs, g.vertices.size() * (g.vertices.size() - 1) / 2);
  }
}

TEST(Distance, LibraryBfsMatchesOracle) {
  for (int n = 5; n <= 13; ++n) {
    const auto map = FareyMap::build(n);
    const auto g = oracle::farey_graph(n);
    const auto north = map.index_of(FareyFraction::canonical(1, 0, n));
    const auto ours = bfs_from(map, north);
    const auto theirs = oracle::bfs(g.adj, g.index(oracle::rep(1, 0, n)));
    for (std::size_t v = 0; v < map.num_vertices(); ++v) {
      const auto& f = map.vertex(static_cast<int>(v));
      EXPECT_EQ(ours[v], theirs[g.index(oracle::rep(f.num(), f.den(), n))]);
    }
  }
}

TEST(Distance, DiameterMatchesOracle) {
  for (int n = 3; n <= 16; ++n) {
    const auto g = oracle::farey_graph(n);
    int worst = 0;
    for (std::size_t i = 0; i < g.adj.size(); ++i) {
      const auto d = oracle::bfs(g.adj, static_cast<int>(i));
      worst = std::max(worst, *std::max_element(d.begin(), d.end()));
    }
    EXPECT_EQ(diameter(FareyMap::build(n)), worst) << "n=" << n;
  }
}

TEST(Distance, DiameterThreeAtPrimeLevels) {
  for (int p : {5, 7, 11, 13}) EXPECT_EQ(diameter(FareyMap::build(p)), 3) << "p=" << p;
}

TEST(Distance, DiameterThreeAtCompositeLevels) {
  for (int n : {6, 8, 9, 10, 12}) EXPECT_EQ(diameter(FareyMap::build(n)), 3) << "n=" << n;
}

TEST(Distance, Errors) {
  const auto a = FareyFraction::parse("1/0", 7);
  EXPECT_EQ(distance_formula(a, FareyFraction::parse("2/0", 7), 7), 3);
  try {
    distance_formula(a, a, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EqualVertices);
  }
  try {
    distance_formula(FareyFraction::parse("1/0", 9), FareyFraction::parse("2/0", 9), 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
  EXPECT_THROW(distance_formula(a, FareyFraction::parse("2/0", 11), 7), Error);
}

TEST(Circuits, S2OfSevenExact) {
  const std::vector<std::string> expected = {"1/3", "1/2", "2/3", "4/3", "3/2", "5/3", "0/3",
                                            "5/2", "1/3", "3/3", "0/2", "4/3", "6/3", "2/2",
                                            "0/3", "2/3", "4/2", "3/3", "5/3", "6/2", "6/3"};
  EXPECT_EQ(labels(circuit_S2(7).vertices), expected);
  EXPECT_EQ(labels(seq_S(11)), (std::vector<std::string>{"1/5", "1/4", "1/3", "1/2", "2/3", "3/4", "4/5"}));
}

TEST(Circuits, QuasiIcosahedralShape) {
  for (int p : {5, 7, 11, 13}) {
    const auto map = FareyMap::build(p);
    const auto north = map.index_of(FareyFraction::canonical(1, 0, p));
    const auto dist = bfs_from(map, north);

    const auto s1 = circuit_S1(p);
    EXPECT_EQ(s1.size(), static_cast<std::size_t>(p));
    EXPECT_TRUE(s1.is_closed());
    for (const auto& v : s1.vertices) EXPECT_EQ(dist[map.index_of(v)], 1);

    const auto s2 = circuit_S2(p);
    EXPECT_EQ(s2.size(), static_cast<std::size_t>(p * (p - 4)));
    EXPECT_TRUE(s2.is_closed());
    for (std::size_t i = 0; i < s2.size(); ++i) {
      const auto& x = s2.vertices[i];
      const auto& y = s2.vertices[(i + 1) % s2.size()];
      EXPECT_TRUE(oracle::adjacent(oracle::rep(x.num(), x.den(), p), oracle::rep(y.num(), y.den(), p), p));
      EXPECT_EQ(dist[map.index_of(x)], 2);
    }
    // The walk visits every vertex at distance 2.
    std::size_t at_two = std::count(dist.begin(), dist.end(), 2);
    EXPECT_EQ(s2.support().size(), at_two);

    // Block seam: last of S + k to first of S + k + 1 has determinant 1.
    const std::size_t block = p - 4;
    for (std::size_t k = 0; k < static_cast<std::size_t>(p); ++k) {
      const auto& x = s2.vertices[k * block + block - 1];
      const auto& y = s2.vertices[((k + 1) * block) % s2.size()];
      EXPECT_EQ(oracle::md(static_cast<long long>(x.num()) * y.den() - static_cast<long long>(y.num()) * x.den(), p),
                1)
          << x << " " << y;
    }

    const auto pl = poles(p);
    EXPECT_EQ(pl.size(), static_cast<std::size_t>((p - 1) / 2));
    for (const auto& v : pl) EXPECT_EQ(dist[map.index_of(v)], v.num() == 1 ? 0 : 3);

    const auto dec = decompose(p);
    EXPECT_EQ(dec.north.str(), "1/0");
    EXPECT_EQ(1 + dec.sphere1.size() + dec.sphere2.support().size() + dec.poles.size(), map.num_vertices());
  }
}

TEST(Circuits, RequiresPrime) {
  EXPECT_THROW(circuit_S2(9), Error);
  EXPECT_THROW(require_theorem_prime(3), Error);
  EXPECT_NO_THROW(require_theorem_prime(5));
}
