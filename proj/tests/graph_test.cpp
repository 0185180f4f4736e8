#include <gtest/gtest.h>

#include <algorithm>

#include "rdc/graph.hpp"

namespace rdc {
namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = g.degree_sequence();
  std::sort(d.begin(), d.end());
  return d;
}

void expect_well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
    for (VertexId w : nb) {
      EXPECT_NE(w, v);
      EXPECT_TRUE(g.adjacent(w, v));
    }
    degree_sum += nb.size();
  }
  EXPECT_EQ(g.size() * 2, degree_sum);
  EXPECT_TRUE(g.connected());
}

TEST(Generators, Path) {
  EXPECT_EQ(path(1).order(), 1u);
  EXPECT_EQ(path(1).size(), 0u);
  auto p4 = path(4);
  EXPECT_EQ(p4.size(), 3u);
  EXPECT_EQ(p4.degree_sequence(), (std::vector<std::size_t>{1, 2, 2, 1}));
  EXPECT_EQ(path(2), complete(2));
  EXPECT_THROW(path(0), InvalidParameter);
}

TEST(Generators, Cycle) {
  EXPECT_TRUE(isomorphic(cycle(3), complete(3)));
  auto c5 = cycle(5);
  EXPECT_EQ(c5.size(), 5u);
  EXPECT_EQ(c5.min_degree(), 2u);
  EXPECT_EQ(c5.max_degree(), 2u);
  EXPECT_THROW(cycle(2), InvalidParameter);
}

TEST(Generators, CycleSixIsBipartite) {
  // Exhaustive 2-colorings of C_6.
  auto g = cycle(6);
  bool found = false;
  for (unsigned mask = 0; mask < 64 && !found; ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok &= ((mask >> u) & 1) != ((mask >> v) & 1);
    found = ok;
  }
  EXPECT_TRUE(found);
}

TEST(Generators, Complete) {
  EXPECT_EQ(complete(1).size(), 0u);
  EXPECT_EQ(complete(4).size(), 6u);
  EXPECT_THROW(complete(0), InvalidParameter);
}

TEST(Generators, StarHasMVertices) {
  auto s3 = star(3);
  EXPECT_EQ(s3.order(), 3u);
  EXPECT_EQ(s3.size(), 2u);
  EXPECT_TRUE(isomorphic(s3, path(3)));
  EXPECT_EQ(star(2), complete(2));
  EXPECT_EQ(star(6).degree(0), 5u);
  EXPECT_THROW(star(1), InvalidParameter);
}

TEST(Generators, DoubleStar) {
  auto d3 = double_star(3);
  EXPECT_EQ(d3.order(), 7u);
  EXPECT_EQ(d3.size(), 6u);
  EXPECT_EQ(d3.max_degree(), 3u);
  EXPECT_TRUE(isomorphic(double_star(2), path(5)));
  EXPECT_EQ(sorted_degrees(double_star(4)),
            (std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 2, 2, 4}));
  EXPECT_THROW(double_star(1), InvalidParameter);
}

TEST(Generators, TripleStar) {
  auto t3 = triple_star(3);
  EXPECT_EQ(t3.order(), 10u);
  EXPECT_EQ(t3.size(), 9u);
  EXPECT_TRUE(isomorphic(triple_star(2), path(7)));
  auto t5 = triple_star(5);
  EXPECT_EQ(t5.max_degree(), 5u);
  auto d = t5.degree_sequence();
  EXPECT_EQ(std::count(d.begin(), d.end(), 1u), 5);
}

TEST(Generators, FamilyCountsAndShape) {
  for (int m = 2; m <= 8; ++m) {
    auto s = star(m), d = double_star(m), t = triple_star(m);
    EXPECT_EQ(s.size(), static_cast<std::size_t>(m - 1));
    EXPECT_EQ(d.size(), static_cast<std::size_t>(2 * m));
    EXPECT_EQ(t.size(), static_cast<std::size_t>(3 * m));
    EXPECT_EQ(d.order(), static_cast<std::size_t>(2 * m + 1));
    EXPECT_EQ(t.order(), static_cast<std::size_t>(3 * m + 1));
    for (const Graph* g : {&s, &d, &t}) expect_well_formed(*g);
  }
  for (int k = 1; k <= 9; ++k) {
    expect_well_formed(path(k));
    expect_well_formed(complete(k));
    if (k >= 3) expect_well_formed(cycle(k));
  }
}

TEST(Degrees, Queries) {
  EXPECT_EQ(star(5).max_degree(), 4u);
  EXPECT_EQ(star(5).min_degree(), 1u);
  for (auto d : cycle(7).degree_sequence()) EXPECT_EQ(d, 2u);
  for (auto d : complete(5).degree_sequence()) EXPECT_EQ(d, 4u);
  EXPECT_THROW(static_cast<void>(path(3).degree(3)), std::out_of_range);
  EXPECT_THROW(static_cast<void>(path(3).neighbors(7)), std::out_of_range);
}

TEST(GraphConstruction, RejectsLoopsAndBadEndpoints) {
  std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(3, loop), InvalidParameter);
  std::vector<Edge> far{{0, 5}};
  EXPECT_THROW(Graph(3, far), InvalidParameter);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_EQ(Graph(2, dup).size(), 1u);
  EXPECT_THROW(Graph(2, dup, {"a"}), InvalidParameter);
}

TEST(RandomGraphs, ConnectedAndSeeded) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = random_connected(1 + seed % 9, 0.3, seed);
    expect_well_formed(g);
    EXPECT_EQ(g, random_connected(1 + seed % 9, 0.3, seed));
  }
}

TEST(Isomorphism, DistinguishesSameCounts) {
  // P_4 and K_{1,3} share order and size.
  EXPECT_FALSE(isomorphic(path(4), star(4)));
  EXPECT_TRUE(isomorphic(star(4), star(4)));
}

}  // namespace
}  // namespace rdc
