#include <doctest.h>

#include <algorithm>
#include <set>

#include "c24/cell24.hpp"
#include "support.hpp"

using namespace c24;

TEST_CASE("face counts of the 24-cell") {
  const Cell24Model& c = standard_cell();
  CHECK(c.ridges.size() == 96);
  CHECK(c.edges.size() == 96);
  CHECK(c.symmetries.size() == 1152);
  for (int s = 0; s < kSides; ++s) {
    int n = 0;
    for (int v = 0; v < kVertices; ++v) n += c.incident(s, v);
    CHECK(n == 6);
  }
  for (int v = 0; v < kVertices; ++v) {
    int n = 0;
    for (int s = 0; s < kSides; ++s) n += c.incident(s, v);
    CHECK(n == 6);  // the vertex link is a cube
  }
  for (const auto& r : c.ridges)
    for (int s : r.sides)
      for (int v : r.vertices) CHECK(c.incident(s, v));
  for (const auto& e : c.edges)
    for (int s : e.sides)
      for (int v : e.vertices) CHECK(c.incident(s, v));
}

TEST_CASE("side vertex lists agree with the printed table except the first row") {
  const Cell24Model& c = standard_cell();
  const auto printed = printed_side_vertex_lists();
  for (int s = 1; s < kSides; ++s) {
    std::vector<int> mine;
    for (int v : c.side_vertices[s]) mine.push_back(v + 1);
    CHECK(mine == printed[s]);
  }
  // The first printed row has five entries; incidence gives six.
  CHECK(printed[0].size() == 5);
  std::vector<int> s1;
  for (int v : c.side_vertices[0]) s1.push_back(v + 1);
  CHECK(s1 == std::vector<int>{13, 14, 15, 16, 17, 19});
  for (int v : printed[0]) CHECK(std::find(s1.begin(), s1.end(), v) != s1.end());
}

TEST_CASE("symmetries act on sides and vertices compatibly") {
  const Cell24Model& c = standard_cell();
  auto g = test::rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = test::uniform(g, 0, kSymmetries - 1);
    const Symmetry& f = c.symmetries[k];
    for (int s = 0; s < kSides; ++s)
      for (int v : c.side_vertices[s]) REQUIRE(c.incident(f.side_perm[s], f.vertex_perm[v]));
    for (int v = 0; v < kVertices; ++v) REQUIRE(same_ray(f.matrix * c.vertices[v], c.vertices[f.vertex_perm[v]]));
    const int j = test::uniform(g, 0, kSymmetries - 1);
    REQUIRE(c.symmetries[c.compose(k, j)].matrix == f.matrix * c.symmetries[j].matrix);
    REQUIRE(c.compose(k, c.inverse_symmetry(k)) == 0);
  }
}

TEST_CASE("48 symmetries carry any side to any side") {
  const Cell24Model& c = standard_cell();
  for (int i = 0; i < kSides; ++i)
    for (int j = 0; j < kSides; ++j) {
      const auto& between = c.symmetries_between(i, j);
      REQUIRE(between.size() == 48);
      for (int k : between) REQUIRE(c.symmetries[k].side_perm[i] == j);
    }
}

TEST_CASE("side vertex maps determine the symmetry") {
  const Cell24Model& c = standard_cell();
  for (int k = 0; k < kSymmetries; k += 7) {
    const Symmetry& f = c.symmetries[k];
    const int i = k % kSides;
    SideVertexImages images{};
    for (int q = 0; q < kVerticesPerSide; ++q) images[q] = f.vertex_perm[c.side_vertices[i][q]];
    REQUIRE(c.side_symmetry_index(i, f.side_perm[i], images) == k);
  }
  SideVertexImages bad{};
  for (int q = 0; q < kVerticesPerSide; ++q) bad[q] = static_cast<std::uint8_t>(c.side_vertices[4][q]);
  std::swap(bad[0], bad[1]);
  CHECK_FALSE(c.side_symmetry_index(0, 4, bad).has_value());
  CHECK_THROWS_AS(find_side_symmetry(0, 4, bad), NotASymmetry);
}

TEST_CASE("the group generated by the four generators has order 1152") {
  const auto group = generate_symmetry_group();
  CHECK(group.size() == 1152);
  CHECK(group[0].is_identity());
}
