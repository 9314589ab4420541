#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "seriate/dimension2.hpp"
#include "test_util.hpp"

using namespace seriate;
using test::P;
using test::code_of;

namespace {

LineFamily grid(int k, int m) { return LineFamily::grid(k, m); }

PointId at(const LineFamily& f, int r, int c) { return *f.at({r, c}); }

std::vector<PointId> column(const LineFamily& f, int c) {
  std::vector<PointId> out;
  for (std::size_t r = 0; r < f.row_count(); ++r) out.push_back(at(f, static_cast<int>(r), c));
  return out;
}

std::vector<PointId> sorted_members(const Ring& r) { return r.member_set(); }

}  // namespace

TEST_CASE("subsumed") {
  CHECK(subsumed(grid(3, 3)).size() == 9);
  LineFamily f = LineFamily::from_rows({{P(0), P(1), P(2)}, {P(3), P(4), P(5)}, {P(6), P(7), P(8)}}, Fixedness::unfixed);
  std::vector<PointId> all;
  for (std::uint32_t i = 0; i < 9; ++i) all.push_back(P(i));
  CHECK(subsumed(f) == all);
  LineFamily g = LineFamily::from_rows({{P(0), P(1), P(2)}, {P(3), P(4), P(5), P(9)}, {P(6), P(7)}}, Fixedness::unfixed);
  CHECK(subsumed(g).size() == 9);
  CHECK(code_of([] { LineFamily::from_rows({{P(0), P(1)}, {P(1), P(2)}}, Fixedness::unfixed); }) == Errc::rows_not_disjoint);
}

TEST_CASE("is_seriating") {
  LineFamily g = grid(3, 3);
  CHECK(is_seriating({at(g, 0, 0), at(g, 1, 2), at(g, 2, 1)}, g));
  CHECK_FALSE(is_seriating({at(g, 0, 0), at(g, 0, 1), at(g, 1, 1)}, g));
  CHECK_FALSE(is_seriating({at(g, 0, 0), at(g, 2, 1)}, g));
  CHECK(code_of([&] { is_seriating({P(40), at(g, 0, 0)}, g); }) == Errc::point_not_subsumed);
}

TEST_CASE("build_seriating") {
  LineFamily f = LineFamily::from_rows({{P(0), P(1), P(2)}, {P(3), P(4), P(5)}, {P(6), P(7), P(8)}}, Fixedness::unfixed);
  CHECK(build_seriating(f, P(0), P(7)).points() == std::vector<PointId>{P(0), P(3), P(7)});
  CHECK(build_seriating(f, P(0), P(5)).points() == std::vector<PointId>{P(0), P(5)});
  CHECK(code_of([&] { build_seriating(f, P(0), P(2)); }) == Errc::same_row);

  LineFamily g = grid(5, 5);
  for (PointId p : subsumed(g)) {
    for (PointId q : subsumed(g)) {
      if (g.locate(p)->r == g.locate(q)->r) continue;
      CHECK(is_seriating(build_seriating(g, p, q).points(), g));
    }
  }
}

TEST_CASE("boundary_ring") {
  CHECK(boundary_ring(grid(3, 3)).size() == 8);
  CHECK(boundary_ring(grid(4, 4)).size() == 12);
  // Rows of 3, 5, 3: both end rows whole plus the middle row's two ends.
  LineFamily f = LineFamily::from_rows({{P(0), P(1), P(2)}, {P(3), P(4), P(5), P(6), P(7)}, {P(8), P(9), P(10)}}, Fixedness::unfixed);
  Ring r = boundary_ring(f);
  CHECK(r.size() == 8);
  CHECK(sorted_members(r) == std::vector<PointId>{P(0), P(1), P(2), P(3), P(7), P(8), P(9), P(10)});
  // Traversal: first row forward, right ends down, last row back, left ends up.
  CHECK(r == Ring::from({P(0), P(1), P(2), P(7), P(10), P(9), P(8), P(3)}));
}

TEST_CASE("family_between") {
  LineFamily g = grid(3, 3);
  CHECK(family_between(g, 0, 1, 2));
  CHECK_FALSE(family_between(g, 1, 0, 2));
  CHECK(code_of([&] { family_between(g, 0, 3, 1); }) == Errc::index_out_of_range);
}

TEST_CASE("family_concat and family_split") {
  LineFamily g = grid(5, 3);
  auto rows = g.rows();
  LineFamily lo = LineFamily::from_rows({rows[0], rows[1], rows[2]}, Fixedness::fixed);
  LineFamily hi = LineFamily::from_rows({rows[2], rows[3], rows[4]}, Fixedness::fixed);
  CHECK(family_concat(lo, hi) == g);

  LineFamily four = grid(4, 3);
  auto [a, b] = family_split(four, 2);
  CHECK(a.rows() == std::vector<std::vector<PointId>>{four.rows()[0], four.rows()[1], four.rows()[2]});
  CHECK(b.rows() == std::vector<std::vector<PointId>>{four.rows()[2], four.rows()[3]});
  CHECK(code_of([&] { family_split(four, 0); }) == Errc::not_interior_row);

  LineFamily head = LineFamily::from_rows({rows[0], rows[1], rows[2]}, Fixedness::fixed);
  CHECK(code_of([&] { family_concat(head, LineFamily::from_rows({rows[3], rows[1], rows[4]}, Fixedness::fixed)); }) ==
        Errc::shared_interior_row);
}

TEST_CASE("reseriate") {
  for (auto [k, m] : {std::pair{3, 3}, std::pair{3, 4}}) {
    LineFamily g = grid(k, m);
    LineFamily t = reseriate(g, Line::from(column(g, 0)), Line::from(column(g, m - 1)));
    CHECK(t.row_count() == static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) CHECK(t.row_line(static_cast<std::size_t>(c)) == Line::from(column(g, c)));
    CHECK(subsumed(t) == subsumed(g));
    CHECK(boundary_ring(t) == boundary_ring(g));
  }
  LineFamily g = grid(3, 3);
  CHECK(code_of([&] { reseriate(g, Line::from(column(g, 0)), Line::from(column(g, 0))); }) == Errc::not_disjoint);
  CHECK(code_of([&] { reseriate(g, Line::from(column(g, 0)), Line::from(column(g, 1))); }) == Errc::not_on_boundary);
}

TEST_CASE("family_from_seriating") {
  LineFamily g = grid(3, 4);
  auto col = [&](int c) {
    Transversal t;
    for (int r = 0; r < 3; ++r) t.picks.emplace_back(static_cast<std::size_t>(r), at(g, r, c));
    return t;
  };
  LineFamily sub = family_from_seriating(g, col(1), col(3));
  REQUIRE(sub.row_count() == 3);
  for (int r = 0; r < 3; ++r) {
    CHECK(sub.rows()[static_cast<std::size_t>(r)] == std::vector<PointId>{at(g, r, 1), at(g, r, 2), at(g, r, 3)});
  }
  CHECK(code_of([&] { family_from_seriating(g, col(1), col(1)); }) == Errc::entangled);
  Transversal shorter;
  shorter.picks = {{0, at(g, 0, 1)}, {1, at(g, 1, 1)}};
  CHECK(code_of([&] { family_from_seriating(g, shorter, col(3)); }) == Errc::range_mismatch);
}

TEST_CASE("crossing_rows") {
  LineFamily g = grid(3, 3);
  CHECK(crossing_rows(GridPath::make({{0, 0}, {1, 1}, {2, 1}}, PathMode::row_continuous), g) == std::vector<std::size_t>{0, 1, 2});
  CHECK(crossing_rows(GridPath::make({{0, 0}, {0, 1}}, PathMode::row_continuous), g) == std::vector<std::size_t>{0});
  CHECK(code_of([&] { crossing_rows(GridPath::make({{0, 0}, {2, 0}, {0, 1}}, PathMode::free), g); }) == Errc::mode_mismatch);
  CHECK(code_of([] { GridPath::make({{0, 0}, {2, 0}}, PathMode::row_continuous); }) == Errc::invalid_path);
  CHECK(code_of([] { GridPath::make({{0, 0}, {0, 2}}, PathMode::row_continuous); }) == Errc::invalid_path);
}

TEST_CASE("catenate") {
  LineFamily g = grid(3, 3);
  auto segs = catenate(GridPath::make({{0, 0}, {0, 1}, {1, 1}, {2, 1}}, PathMode::row_continuous), g);
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].kind == SegmentKind::within_row);
  CHECK(segs[0].run == std::vector<Coord>{{0, 0}, {0, 1}});
  CHECK(segs[1].kind == SegmentKind::transversal);
  CHECK(segs[1].run == std::vector<Coord>{{0, 1}, {1, 1}, {2, 1}});

  auto one = catenate(GridPath::make({{0, 0}, {1, 0}, {2, 0}}, PathMode::row_continuous), g);
  REQUIRE(one.size() == 1);
  CHECK(one[0].kind == SegmentKind::transversal);

  auto zig = catenate(GridPath::make({{0, 0}, {1, 0}, {0, 1}}, PathMode::row_continuous), g);
  REQUIRE(zig.size() == 2);
  CHECK(zig[0].kind == SegmentKind::transversal);
  CHECK(zig[1].kind == SegmentKind::transversal);
  CHECK(zig[0].run.back() == Coord{1, 0});
  CHECK(zig[1].run.front() == Coord{1, 0});
}

TEST_CASE("catenate is minimal against a segment DP") {
  // Every row-continuous path of up to 7 points on a 3x3 grid.
  LineFamily g = grid(3, 3);
  int paths = 0, agree = 0;
  std::vector<Coord> p;
  auto rec = [&](auto& self) -> void {
    if (p.size() >= 2) {
      std::vector<std::pair<int, int>> rc;
      for (Coord c : p) rc.emplace_back(c.r, c.c);
      ++paths;
      agree += static_cast<int>(catenate(GridPath::make(p, PathMode::row_continuous), g).size()) == oracle::min_segments(rc);
    }
    if (p.size() == 7) return;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        Coord n{r, c};
        if (std::find(p.begin(), p.end(), n) != p.end() || !step_ok(p.back(), n, PathMode::row_continuous)) continue;
        p.push_back(n);
        self(self);
        p.pop_back();
      }
    }
  };
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      p = {{r, c}};
      rec(rec);
    }
  }
  CHECK(paths > 1000);
  CHECK(agree == paths);
}
