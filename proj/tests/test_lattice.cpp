#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "simplexnet/lattice.hpp"

using namespace simplexnet;

TEST_CASE("six-site example lattice matches the six-spin ground-state geometry") {
  const LatticeGraph g = build_six_site_example();
  CHECK(g.n_sites == 6);
  REQUIRE(g.up_triangles.size() == 3);
  const std::set<std::array<int, 3>> tris(g.up_triangles.begin(), g.up_triangles.end());
  CHECK(tris.count({0, 1, 2}) == 1);
  CHECK(tris.count({1, 3, 4}) == 1);
  CHECK(tris.count({2, 4, 5}) == 1);
  // Edge-disjoint triangles: nine distinct edges, none repeated.
  CHECK(g.edges.size() == 9);
  // Every site belongs to at least one up-triangle.
  std::set<int> covered;
  for (const auto& t : g.up_triangles) covered.insert(t.begin(), t.end());
  CHECK(covered.size() == 6);
}

TEST_CASE("triangular patch generator") {
  const LatticeGraph one = build_triangular_patch(1);
  CHECK(one.n_sites == 3);
  REQUIRE(one.up_triangles.size() == 1);
  CHECK(one.up_triangles[0] == std::array<int, 3>{0, 1, 2});

  const LatticeGraph two = build_triangular_patch(2);
  CHECK(two.n_sites == 6);
  CHECK(two.up_triangles.size() == 3);

  // side=3 enumerated by hand: rows 0..3 give 1+2+3 up-triangles.
  const LatticeGraph three = build_triangular_patch(3);
  CHECK(three.n_sites == 10);
  CHECK(three.up_triangles.size() == 6);

  for (int side = 1; side <= 6; ++side) {
    const LatticeGraph g = build_triangular_patch(side);
    CHECK(g.n_sites == (side + 1) * (side + 2) / 2);
    CHECK(static_cast<int>(g.up_triangles.size()) == side * (side + 1) / 2);
    // No duplicate edges, and no edge in more than two up-triangles.
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& t : g.up_triangles) {
      ++edge_count[std::minmax(t[0], t[1])];
      ++edge_count[std::minmax(t[0], t[2])];
      ++edge_count[std::minmax(t[1], t[2])];
    }
    CHECK(edge_count.size() == g.edges.size());
    for (const auto& [e, c] : edge_count) CHECK(c <= 2);
  }
  CHECK_THROWS_AS((void)build_triangular_patch(0), std::invalid_argument);
}

TEST_CASE("row-major numbering from the apex") {
  CHECK(patch_site(0, 0) == 0);
  CHECK(patch_site(2, 1) == 4);
  CHECK(patch_row_pos(4) == std::pair<int, int>{2, 1});
  CHECK(patch_row_pos(0) == std::pair<int, int>{0, 0});
}

TEST_CASE("core regions") {
  const LatticeGraph patch4 = build_triangular_patch(4);
  CHECK(triangular_core_region(patch4, 2).sites.size() == 3);
  CHECK(triangular_core_region(patch4, 3).sites.size() == 6);
  CHECK(triangular_core_region(patch4, 4).sites.size() == 10);
  CHECK_THROWS_AS((void)triangular_core_region(build_triangular_patch(2), 5),
                  std::invalid_argument);

  // Apex region of two rows is sites {0,1,2}.
  const Region apex = triangular_core_region(patch4, 2, RegionPlacement::Apex);
  CHECK(apex.sites == std::vector<int>{0, 1, 2});
  // Centered placement keeps every region site away from the patch apex.
  const Region centered = triangular_core_region(build_triangular_patch(6), 2,
                                                 RegionPlacement::Centered);
  CHECK(centered.sites.size() == 3);
  CHECK(centered.sites.front() > 2);
}

TEST_CASE("region boundary size") {
  const LatticeGraph patch = build_triangular_patch(3);
  // Apex two-row region {0,1,2}: sites 1 and 2 touch row two.
  CHECK(boundary_size(patch, triangular_core_region(patch, 2)) == 2);
  // Edge-cut symmetry: boundary edges seen from the complement side.
  const Region region = triangular_core_region(patch, 2);
  std::vector<int> comp;
  for (int s = 0; s < patch.n_sites; ++s) {
    if (std::find(region.sites.begin(), region.sites.end(), s) == region.sites.end()) {
      comp.push_back(s);
    }
  }
  int cross_from_region = 0, cross_from_comp = 0;
  for (auto [i, j] : patch.edges) {
    const bool ri = std::find(region.sites.begin(), region.sites.end(), i) != region.sites.end();
    const bool rj = std::find(region.sites.begin(), region.sites.end(), j) != region.sites.end();
    if (ri != rj) {
      ++cross_from_region;
      ++cross_from_comp;
    }
  }
  CHECK(cross_from_region == cross_from_comp);

  CHECK_THROWS_AS((void)make_region(6, {}), std::invalid_argument);
  CHECK_THROWS_AS((void)make_region(6, {0, 1, 2, 3, 4, 5}), std::invalid_argument);
  CHECK_THROWS_AS((void)make_region(6, {7}), std::invalid_argument);
}

TEST_CASE("explicit lattices") {
  // Shared-edge triangle pair (an irregular hypergraph listing; two triangles
  // share the edge {2,4}); allowed as an explicit graph.
  const LatticeGraph shared =
      LatticeGraph::explicit_graph(6, {{0, 1, 2}, {2, 3, 4}, {2, 4, 5}});
  CHECK(shared.edges.size() == 8);  // {2,4} counted once
  // Triangle-free chain for the two-site antiferromagnet.
  const LatticeGraph chain = LatticeGraph::explicit_graph(2, {}, {{0, 1}});
  CHECK(chain.edges.size() == 1);
  CHECK_THROWS_AS((void)LatticeGraph::from_triangles(4, {{0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS((void)LatticeGraph::from_triangles(3, {{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS((void)LatticeGraph::from_triangles(3, {{0, 1, 2}, {2, 1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("square network of 24 spins") {
  const SquareNetworkGraph g = build_square_network();
  CHECK(g.n_sites == 24);
  // Double counting: 12 checked squares of 4 sites, each site in exactly two.
  CHECK(g.checked_squares.size() == 12);
  std::vector<int> membership(24, 0);
  for (const auto& sq : g.checked_squares) {
    for (int s : sq) ++membership[static_cast<std::size_t>(s)];
  }
  for (int s = 0; s < 24; ++s) CHECK(membership[static_cast<std::size_t>(s)] == 2);
  CHECK(g.inner_region.sites.size() == 4);
  // The inner region is the corner set of one checked square.
  bool found = false;
  for (const auto& sq : g.checked_squares) {
    std::vector<int> sorted(sq.begin(), sq.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted == g.inner_region.sites) found = true;
  }
  CHECK(found);
}
