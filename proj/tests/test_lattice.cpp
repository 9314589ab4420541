#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "seriate/lattice.hpp"
#include "test_util.hpp"

using namespace seriate;
using test::code_of;

namespace {

LatticeArea block(int r0, int c0, int rows, int cols) {
  std::vector<Coord> cells;
  for (int r = r0; r < r0 + rows; ++r)
    for (int c = c0; c < c0 + cols; ++c) cells.push_back({r, c});
  return area_from_cells(cells);
}

GridPath lat(std::vector<Coord> pts) { return GridPath::make(std::move(pts), PathMode::lattice4); }

Ring ring_of(const std::vector<Coord>& vs) {
  std::vector<PointId> ids;
  for (Coord v : vs) ids.push_back(vertex_id(v));
  return Ring::from(ids);
}

}  // namespace

TEST_CASE("area_from_cells") {
  LatticeArea one = area_from_cells({{0, 0}});
  CHECK(one.vertices().size() == 4);
  CHECK(one.boundary_ring().size() == 4);

  LatticeArea sq = block(0, 0, 2, 2);
  CHECK(sq.vertices().size() == 9);
  CHECK(sq.boundary_ring().size() == 8);
  CHECK(sq.interior_vertex({1, 1}));

  std::vector<Coord> donut;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (r != 1 || c != 1) donut.push_back({r, c});
  CHECK(code_of([&] { area_from_cells(donut); }) == Errc::not_simply_connected);
  CHECK(code_of([] { area_from_cells({{0, 0}, {1, 1}}); }) == Errc::not_connected);
}

TEST_CASE("area_union") {
  LatticeArea u = area_union(area_from_cells({{0, 0}}), area_from_cells({{0, 1}}));
  CHECK(u == block(0, 0, 1, 2));
  CHECK(u.boundary_ring().size() == 6);
  CHECK(code_of([] { area_union(area_from_cells({{0, 0}}), area_from_cells({{1, 1}})); }) == Errc::no_common_line);
  CHECK(code_of([] { area_union(area_from_cells({{0, 0}}), area_from_cells({{0, 0}})); }) == Errc::cell_overlap);
  // An L-tromino and the cell in its crook meet along two edges, as one line.
  LatticeArea l3 = area_from_cells({{0, 0}, {1, 0}, {1, 1}});
  CHECK(area_union(l3, area_from_cells({{0, 1}})) == block(0, 0, 2, 2));
}

TEST_CASE("area_split") {
  LatticeArea sq = block(0, 0, 2, 2);
  auto [a, b] = area_split(sq, lat({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(((a == block(0, 0, 2, 1) && b == block(0, 1, 2, 1)) || (b == block(0, 0, 2, 1) && a == block(0, 1, 2, 1))));
  CHECK(area_union(a, b) == sq);
  CHECK(code_of([&] { area_split(sq, lat({{0, 0}, {0, 1}, {0, 2}})); }) != std::nullopt);
  CHECK(code_of([&] { area_split(block(0, 0, 1, 2), lat({{0, 1}, {1, 1}})); }) == std::nullopt);
  CHECK(code_of([&] { area_split(block(0, 0, 2, 2), lat({{1, 1}, {2, 1}})); }) == Errc::chord_not_anchored);
}

TEST_CASE("area_from_ring") {
  LatticeArea big = block(0, 0, 3, 3);
  CHECK(area_from_ring(big, ring_of({{1, 1}, {1, 2}, {2, 2}, {2, 1}})) == area_from_cells({{1, 1}}));
  CHECK(area_from_ring(big, big.boundary_ring()) == big);
  CHECK(code_of([&] { area_from_ring(big, ring_of({{3, 3}, {3, 4}, {4, 4}, {4, 3}})); }) == Errc::not_a_cycle_in_area);
}

TEST_CASE("crossing_boundary") {
  LatticeArea top = block(0, 0, 2, 3), bottom = block(2, 0, 2, 3);
  auto hit = crossing_boundary(top, bottom, lat({{1, 1}, {2, 1}, {3, 1}}));
  REQUIRE(hit);
  CHECK(*hit == vertex_id({2, 1}));
  CHECK(code_of([&] { crossing_boundary(top, bottom, lat({{1, 1}, {1, 2}})); }) == Errc::no_interior_witness);

  LatticeArea a = block(0, 0, 2, 2), b = block(2, 2, 2, 2);
  auto corner = crossing_boundary(a, b, lat({{1, 1}, {1, 2}, {2, 2}, {3, 2}, {3, 3}}));
  REQUIRE(corner);
  CHECK(*corner == vertex_id({2, 2}));
}

TEST_CASE("theta_nesting") {
  LatticeArea sq = block(0, 0, 3, 3);
  // P = (0,1), Q = (3,1); left bulge, straight down, right bulge.
  GridPath left = lat({{0, 1}, {0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}});
  GridPath mid = lat({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  GridPath right = lat({{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {3, 1}});
  NestingVerdict v = theta_nesting(sq, left, mid, right);
  CHECK(v.qualifying == 1);
  CHECK(v.outer == std::array<int, 2>{0, 2});
  CHECK(code_of([&] { theta_nesting(sq, left, left, right); }) == Errc::not_internally_disjoint);
  CHECK(code_of([&] { theta_nesting(sq, left, lat({{0, 2}, {1, 2}, {2, 2}, {3, 2}}), right); }) == Errc::endpoint_mismatch);
}

TEST_CASE("triple_point_check") {
  LatticeArea a1 = block(0, 0, 1, 2), a2 = block(1, 0, 1, 2), a3 = block(0, 2, 2, 1);
  CHECK(triple_point_check(a1, a2, a3));
  CHECK(triple_point_check(area_from_cells({{0, 0}}), area_from_cells({{0, 1}}), area_from_cells({{1, 0}})));
  CHECK(code_of([] { triple_point_check(area_from_cells({{0, 0}}), area_from_cells({{0, 2}}), area_from_cells({{1, 0}})); }) ==
        Errc::no_common_line);
}

TEST_CASE("five_map_check") {
  AdjacencyReport four = five_map_check(2, 2, {1, 2, 3, 4}, 4);
  CHECK(four.edge_adjacent[0][1]);
  CHECK_FALSE(four.line_adjacent[0][1]);
  CHECK_FALSE(four.complete5);

  AdjacencyReport rows = five_map_check(3, 3, {1, 1, 1, 2, 2, 2, 3, 3, 3}, 3);
  CHECK(rows.line_adjacent[0][1]);
  CHECK_FALSE(rows.line_adjacent[0][2]);
  CHECK_FALSE(rows.complete5);

  CHECK(code_of([] { five_map_check(2, 2, {1, 2, 2, 1}, 2); }) == Errc::disconnected_country);
  CHECK(code_of([] { five_map_check(2, 2, {1, 1, 1, 1}, 2); }) == Errc::empty_country);
}

TEST_CASE("enumerate_partitions matches brute labelling") {
  auto count = [](int r, int c, int k) {
    std::uint64_t n = 0;
    enumerate_partitions(r, c, k, [&](const std::vector<int>&) {
      ++n;
      return true;
    });
    return n;
  };
  CHECK(count(1, 2, 2) == 1);
  oracle::PartitionCounts two = oracle::count_partitions(2, 2, 2);
  CHECK(two.labelled == 14);
  CHECK(two.canonical == 7);
  CHECK(two.connected == 6);
  CHECK(count(2, 2, 2) == 6);
  for (auto [r, c, k] : {std::tuple{2, 3, 3}, std::tuple{3, 3, 3}, std::tuple{3, 3, 4}, std::tuple{2, 4, 4}}) {
    CHECK(count(r, c, k) == oracle::count_partitions(r, c, k).connected);
  }
}

TEST_CASE("3x3 into five countries") {
  // Frozen from the brute labelling oracle (5^9 labellings).
  oracle::PartitionCounts five = oracle::count_partitions(3, 3, 5);
  CHECK(five.connected == 395);
  std::uint64_t seen = 0, complete = 0;
  enumerate_partitions(3, 3, 5, [&](const std::vector<int>& lab) {
    ++seen;
    complete += five_map_check(3, 3, lab, 5).complete5;
    return true;
  });
  CHECK(seen == 395);
  CHECK(complete == 0);
}
