#include "seriate/dimension2.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace seriate {

LineFamily LineFamily::from_rows(std::vector<std::vector<PointId>> rows, Fixedness fx) {
  if (rows.size() < 2) throw Error(Errc::too_few_points, "a family needs at least two rows");
  LineFamily f;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    (void)Line::from(rows[r]);  // injectivity and length
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (!f.where_.emplace(rows[r][c], Coord{static_cast<int>(r), static_cast<int>(c)}).second) {
        throw Error(Errc::rows_not_disjoint, to_string(rows[r][c]) + " lies on two rows");
      }
    }
  }
  f.rows_ = std::move(rows);
  f.fx_ = fx;
  if (fx == Fixedness::fixed && !f.rectangular()) throw Error(Errc::not_rectangular, "fixed family rows differ in length");
  return f;
}

LineFamily LineFamily::grid(int rows, int cols, std::uint32_t base) {
  std::vector<std::vector<PointId>> rs(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) rs[static_cast<std::size_t>(r)].push_back(PointId{base + static_cast<std::uint32_t>(r * cols + c)});
  return from_rows(std::move(rs), Fixedness::fixed);
}

bool LineFamily::rectangular() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [&](const auto& r) { return r.size() == rows_.front().size(); });
}

std::optional<Coord> LineFamily::locate(PointId p) const {
  auto it = where_.find(p);
  if (it == where_.end()) return std::nullopt;
  return it->second;
}

std::optional<PointId> LineFamily::at(Coord rc) const {
  if (rc.r < 0 || rc.c < 0 || static_cast<std::size_t>(rc.r) >= rows_.size()) return std::nullopt;
  const auto& row = rows_[static_cast<std::size_t>(rc.r)];
  if (static_cast<std::size_t>(rc.c) >= row.size()) return std::nullopt;
  return row[static_cast<std::size_t>(rc.c)];
}

std::vector<PointId> Transversal::points() const {
  std::vector<PointId> out;
  for (const auto& [row, p] : picks) out.push_back(p);
  return out;
}

bool step_ok(Coord a, Coord b, PathMode mode) noexcept {
  int dr = std::abs(a.r - b.r);
  int dc = std::abs(a.c - b.c);
  switch (mode) {
    case PathMode::free: return true;
    case PathMode::row_continuous: return dr <= 1 && (dr != 0 || dc == 1);
    case PathMode::lattice4: return dr + dc == 1;
  }
  return false;
}

GridPath GridPath::make(std::vector<Coord> pts, PathMode mode) {
  std::set<Coord> seen(pts.begin(), pts.end());
  if (seen.size() != pts.size()) throw Error(Errc::invalid_path, "path repeats a point");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!step_ok(pts[i - 1], pts[i], mode)) throw Error(Errc::invalid_path, "step " + std::to_string(i) + " breaks the path mode");
  }
  return GridPath{std::move(pts), mode};
}

std::vector<PointId> subsumed(const LineFamily& f) {
  std::vector<PointId> out;
  for (const auto& row : f.rows()) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Coord require_located(const LineFamily& f, PointId p) {
  auto rc = f.locate(p);
  if (!rc) throw Error(Errc::point_not_subsumed, to_string(p) + " is not subsumed by the family");
  return *rc;
}

void require_subsumed(const GridPath& p, const LineFamily& f) {
  for (Coord rc : p.pts) {
    if (!f.at(rc)) throw Error(Errc::point_not_subsumed, "path point off the family");
  }
}

std::size_t row_of(const LineFamily& f, PointId p) { return static_cast<std::size_t>(require_located(f, p).r); }

// Orients a line along ascending row index of its points' rows.
std::vector<PointId> oriented_by_rows(const LineFamily& f, const Line& l) {
  std::vector<PointId> seq(l.points().begin(), l.points().end());
  if (row_of(f, seq.front()) > row_of(f, seq.back())) std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

bool is_seriating(const std::vector<PointId>& t, const LineFamily& f) {
  std::vector<int> rows;
  for (PointId p : t) rows.push_back(require_located(f, p).r);
  if (rows.size() < 2) return false;
  int dir = rows[1] - rows[0];
  if (dir != 1 && dir != -1) return false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i] - rows[i - 1] != dir) return false;
  }
  return true;
}

Transversal build_seriating(const LineFamily& f, PointId p, PointId q, const RowChooser& chooser) {
  Coord cp = require_located(f, p);
  Coord cq = require_located(f, q);
  if (cp.r == cq.r) throw Error(Errc::same_row, "both points lie on row " + std::to_string(cp.r));

  auto pick = [&](std::size_t row) -> PointId {
    if (chooser) return chooser(f, row, p, q);
    const auto& pts = f.rows()[row];
    if (f.fixedness() == Fixedness::unfixed) return *std::min_element(pts.begin(), pts.end());
    int r = static_cast<int>(row);
    int col = cp.c + (cq.c - cp.c) * (r - cp.r) / (cq.r - cp.r);
    return pts[static_cast<std::size_t>(col)];
  };

  Transversal t;
  int step = cq.r > cp.r ? 1 : -1;
  for (int r = cp.r;; r += step) {
    auto row = static_cast<std::size_t>(r);
    PointId x = r == cp.r ? p : r == cq.r ? q : pick(row);
    t.picks.emplace_back(row, x);
    if (r == cq.r) break;
  }
  return t;
}

Ring boundary_ring(const LineFamily& f) {
  const auto& rows = f.rows();
  std::vector<PointId> cyc(rows.front().begin(), rows.front().end());
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) cyc.push_back(rows[i].back());
  cyc.insert(cyc.end(), rows.back().rbegin(), rows.back().rend());
  for (std::size_t i = rows.size() - 2; i >= 1; --i) cyc.push_back(rows[i].front());
  return Ring::from(std::move(cyc));
}

bool family_between(const LineFamily& f, std::size_t i, std::size_t j, std::size_t k) {
  std::size_t n = f.row_count();
  if (i >= n || j >= n || k >= n) throw Error(Errc::index_out_of_range, "row index past the family");
  if (i == j || j == k || i == k) throw Error(Errc::not_distinct, "row indices must be distinct");
  return (i < j && j < k) || (k < j && j < i);
}

LineFamily family_concat(const LineFamily& f1, const LineFamily& f2) {
  std::vector<std::pair<std::size_t, std::size_t>> shared;
  for (std::size_t i = 0; i < f1.row_count(); ++i) {
    Line li = f1.row_line(i);
    for (std::size_t j = 0; j < f2.row_count(); ++j) {
      Line lj = f2.row_line(j);
      if (li == lj) {
        shared.emplace_back(i, j);
        continue;
      }
      for (PointId p : li.points()) {
        if (lj.contains(p)) throw Error(Errc::rows_not_disjoint, "rows overlap without being equal");
      }
    }
  }
  if (shared.empty()) throw Error(Errc::no_shared_end_row, "families have no row in common");
  auto is_end = [](const LineFamily& f, std::size_t i) { return i == 0 || i + 1 == f.row_count(); };
  for (auto [i, j] : shared) {
    if (!is_end(f1, i) || !is_end(f2, j)) throw Error(Errc::shared_interior_row, "a shared row is interior to a family");
  }
  if (shared.size() > 1) throw Error(Errc::multiple_shared, "families share more than one row");

  auto [i, j] = shared.front();
  std::vector<std::vector<PointId>> rows = f1.rows();
  if (i == 0) std::reverse(rows.begin(), rows.end());
  std::vector<std::vector<PointId>> tail = f2.rows();
  if (j != 0) std::reverse(tail.begin(), tail.end());
  rows.insert(rows.end(), tail.begin() + 1, tail.end());
  bool fixed = f1.fixedness() == Fixedness::fixed && f2.fixedness() == Fixedness::fixed;
  return LineFamily::from_rows(std::move(rows), fixed ? Fixedness::fixed : Fixedness::unfixed);
}

std::pair<LineFamily, LineFamily> family_split(const LineFamily& f, std::size_t i) {
  if (i == 0 || i + 1 >= f.row_count()) throw Error(Errc::not_interior_row, "row " + std::to_string(i) + " is not interior");
  const auto& rows = f.rows();
  std::vector<std::vector<PointId>> a(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  std::vector<std::vector<PointId>> b(rows.begin() + static_cast<std::ptrdiff_t>(i), rows.end());
  return {LineFamily::from_rows(std::move(a), f.fixedness()), LineFamily::from_rows(std::move(b), f.fixedness())};
}

LineFamily reseriate(const LineFamily& f, const Line& b1, const Line& b2) {
  Ring ring = boundary_ring(f);
  for (const Line* b : {&b1, &b2}) {
    for (PointId p : b->points()) {
      if (!ring.contains(p)) throw Error(Errc::not_on_boundary, to_string(p) + " is not on the boundary ring");
    }
  }
  for (PointId p : b1.points()) {
    if (b2.contains(p)) throw Error(Errc::not_disjoint, "boundary lines share " + to_string(p));
  }

  const std::size_t last = f.row_count() - 1;
  Line first_row = f.row_line(0);
  Line last_row = f.row_line(last);
  if ((b1 == first_row && b2 == last_row) || (b1 == last_row && b2 == first_row)) {
    auto rows = f.rows();
    if (b1 == last_row) std::reverse(rows.begin(), rows.end());
    return LineFamily::from_rows(std::move(rows), f.fixedness());
  }

  // Both lines must cross every row once; the remaining rows are swept out
  // between them, one point per original row.
  if (!is_seriating(oriented_by_rows(f, b1), f) || !is_seriating(oriented_by_rows(f, b2), f) ||
      b1.size() != f.row_count() || b2.size() != f.row_count()) {
    throw Error(Errc::cover_failure, "boundary lines do not cross every row");
  }
  std::vector<std::size_t> p1(f.row_count()), p2(f.row_count());
  for (PointId p : b1.points()) {
    Coord rc = *f.locate(p);
    p1[static_cast<std::size_t>(rc.r)] = static_cast<std::size_t>(rc.c);
  }
  for (PointId p : b2.points()) {
    Coord rc = *f.locate(p);
    p2[static_cast<std::size_t>(rc.r)] = static_cast<std::size_t>(rc.c);
  }
  const bool rightward = p1[0] < p2[0];
  std::size_t gap = 0;
  for (std::size_t r = 0; r <= last; ++r) {
    if ((p1[r] < p2[r]) != rightward) throw Error(Errc::cover_failure, "boundary lines cross");
    std::size_t g = (rightward ? p2[r] - p1[r] : p1[r] - p2[r]) - 1;
    if (r == 0) gap = g;
    if (g != gap) throw Error(Errc::cover_failure, "rows leave unequal gaps between the boundary lines");
    std::size_t lo = std::min(p1[r], p2[r]);
    std::size_t hi = std::max(p1[r], p2[r]);
    if (lo != 0 || hi + 1 != f.rows()[r].size()) throw Error(Errc::cover_failure, "points outside the boundary lines stay uncovered");
  }

  std::vector<std::vector<PointId>> rows;
  for (std::size_t j = 0; j <= gap + 1; ++j) {
    std::vector<PointId> row;
    for (std::size_t r = 0; r <= last; ++r) {
      std::size_t col = rightward ? p1[r] + j : p1[r] - j;
      row.push_back(f.rows()[r][col]);
    }
    rows.push_back(std::move(row));
  }
  LineFamily out = LineFamily::from_rows(std::move(rows), f.fixedness());
  if (subsumed(out) != subsumed(f) || boundary_ring(out) != ring) {
    throw Error(Errc::cover_failure, "swept family changes the subsumed set or boundary");
  }
  return out;
}

LineFamily family_from_seriating(const LineFamily& f, const Transversal& t1, const Transversal& t2) {
  auto rows_of = [](const Transversal& t) {
    std::vector<std::size_t> rs;
    for (const auto& [row, p] : t.picks) rs.push_back(row);
    std::sort(rs.begin(), rs.end());
    return rs;
  };
  if (rows_of(t1) != rows_of(t2) || t1.picks.empty()) throw Error(Errc::range_mismatch, "transversals span different rows");

  auto col_on = [&](const Transversal& t, std::size_t row) {
    for (const auto& [r, p] : t.picks) {
      if (r == row) {
        Coord rc = require_located(f, p);
        if (static_cast<std::size_t>(rc.r) != row) throw Error(Errc::point_not_subsumed, "pick lies off its row");
        return rc.c;
      }
    }
    return -1;
  };
  std::vector<std::size_t> range = rows_of(t1);
  std::vector<std::vector<PointId>> rows;
  int sign = 0;
  std::size_t touching = 0;
  for (std::size_t idx = 0; idx < range.size(); ++idx) {
    std::size_t row = range[idx];
    int a = col_on(t1, row);
    int b = col_on(t2, row);
    if (a == b) {
      bool end_row = idx == 0 || idx + 1 == range.size();
      if (!end_row || ++touching > 1) throw Error(Errc::entangled, "transversals meet away from a single end point");
      continue;
    }
    int s = a < b ? 1 : -1;
    if (sign != 0 && s != sign) throw Error(Errc::entangled, "transversals cross");
    sign = s;
    std::vector<PointId> seg;
    for (int c = a;; c += s) {
      seg.push_back(f.rows()[row][static_cast<std::size_t>(c)]);
      if (c == b) break;
    }
    rows.push_back(std::move(seg));
  }
  if (rows.size() < 2) throw Error(Errc::entangled, "transversals leave fewer than two rows");
  bool rect = std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r.size() == rows.front().size(); });
  return LineFamily::from_rows(std::move(rows), f.fixedness() == Fixedness::fixed && rect ? Fixedness::fixed : Fixedness::unfixed);
}

std::vector<std::size_t> crossing_rows(const GridPath& p, const LineFamily& f) {
  if (p.mode == PathMode::free) throw Error(Errc::mode_mismatch, "row crossing needs a continuous path");
  require_subsumed(p, f);
  std::set<std::size_t> rows;
  for (Coord rc : p.pts) rows.insert(static_cast<std::size_t>(rc.r));
  return {rows.begin(), rows.end()};
}

std::vector<SegmentClass> catenate(const GridPath& p, const LineFamily& f) {
  if (p.mode == PathMode::free) throw Error(Errc::mode_mismatch, "catenation needs a continuous path");
  if (p.pts.size() < 2) throw Error(Errc::invalid_path, "path needs two points");
  require_subsumed(p, f);

  const auto& pts = p.pts;
  std::vector<std::size_t> joints{0};
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    int up = pts[i - 1].r - pts[i].r;
    int down = pts[i + 1].r - pts[i].r;
    bool n_b = up == 0 && down == 0;
    bool s_b = up != 0 && down != 0 && up == -down;
    if (!n_b && !s_b) joints.push_back(i);
  }
  joints.push_back(pts.size() - 1);

  std::vector<SegmentClass> out;
  for (std::size_t k = 1; k < joints.size(); ++k) {
    SegmentClass seg;
    seg.from = joints[k - 1];
    seg.to = joints[k];
    seg.run.assign(pts.begin() + static_cast<std::ptrdiff_t>(seg.from), pts.begin() + static_cast<std::ptrdiff_t>(seg.to) + 1);
    seg.kind = seg.run[0].r == seg.run[1].r ? SegmentKind::within_row : SegmentKind::transversal;
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace seriate
