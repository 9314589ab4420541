#pragma once

// Transversal semantics for seriate sets of lines: families of disjoint
// oriented rows, seriating lines across them, and row-continuous paths.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "seriate/core.hpp"

namespace seriate {

struct Coord {
  int r = 0;
  int c = 0;

  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

enum class Fixedness { unfixed, fixed };

class LineFamily {
 public:
  // Rows are given left to right. At least two rows of at least two points;
  // throws rows_not_disjoint, not_injective, too_few_points, not_rectangular.
  static LineFamily from_rows(std::vector<std::vector<PointId>> rows, Fixedness fx);
  // Rectangular fixed family with ids base + r*cols + c.
  static LineFamily grid(int rows, int cols, std::uint32_t base = 0);

  const std::vector<std::vector<PointId>>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  Fixedness fixedness() const noexcept { return fx_; }
  bool rectangular() const noexcept;
  Line row_line(std::size_t i) const { return Line::from(rows_.at(i)); }

  // (row, position) of a subsumed point.
  std::optional<Coord> locate(PointId p) const;
  std::optional<PointId> at(Coord rc) const;

  friend bool operator==(const LineFamily& a, const LineFamily& b) { return a.fx_ == b.fx_ && a.rows_ == b.rows_; }

 private:
  LineFamily() = default;
  std::vector<std::vector<PointId>> rows_;
  Fixedness fx_ = Fixedness::unfixed;
  std::unordered_map<PointId, Coord> where_;
};

struct Transversal {
  std::vector<std::pair<std::size_t, PointId>> picks;  // (row, point), rows consecutive

  std::vector<PointId> points() const;
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

enum class PathMode { free, row_continuous, lattice4 };

struct GridPath {
  std::vector<Coord> pts;
  PathMode mode = PathMode::free;

  // Throws invalid_path unless pts is injective and every step obeys mode.
  static GridPath make(std::vector<Coord> pts, PathMode mode);
};

bool step_ok(Coord a, Coord b, PathMode mode) noexcept;

enum class SegmentKind { within_row, transversal };

struct SegmentClass {
  SegmentKind kind;
  std::size_t from = 0;  // index range [from, to] in the path
  std::size_t to = 0;
  std::vector<Coord> run;

  friend bool operator==(const SegmentClass&, const SegmentClass&) = default;
};

std::vector<PointId> subsumed(const LineFamily& f);

bool is_seriating(const std::vector<PointId>& t, const LineFamily& f);

using RowChooser = std::function<PointId(const LineFamily&, std::size_t row, PointId p, PointId q)>;
Transversal build_seriating(const LineFamily& f, PointId p, PointId q, const RowChooser& chooser = {});

Ring boundary_ring(const LineFamily& f);

bool family_between(const LineFamily& f, std::size_t i, std::size_t j, std::size_t k);

LineFamily family_concat(const LineFamily& f1, const LineFamily& f2);
std::pair<LineFamily, LineFamily> family_split(const LineFamily& f, std::size_t i);

LineFamily reseriate(const LineFamily& f, const Line& b1, const Line& b2);

LineFamily family_from_seriating(const LineFamily& f, const Transversal& t1, const Transversal& t2);

std::vector<std::size_t> crossing_rows(const GridPath& p, const LineFamily& f);

std::vector<SegmentClass> catenate(const GridPath& p, const LineFamily& f);

}  // namespace seriate
