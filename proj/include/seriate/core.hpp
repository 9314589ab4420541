#pragma once

// Dimension-0 and Dimension-1 objects: points, lines and rings, together with
// the constructive operations on them (concatenation, splitting, intervals,
// betweenness, ring composition and re-chording).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seriate/error.hpp"

namespace seriate {

/// Opaque Dimension-0 atom.
struct PointId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(PointId, PointId) = default;
};

std::string to_string(PointId p);

/// A fundamental line: an injective ordered sequence of points.
///
/// Stored canonically so that the first point has the smaller id; a line and
/// its reversal are the same object. Lines of exactly two points are
/// degenerate and only appear as operation outputs or decomposition pieces.
class Line {
 public:
  /// Throws Errc::not_injective on a repeated point and Errc::too_few_points
  /// when fewer than two points are given.
  static Line from(std::vector<PointId> seq);

  std::span<const PointId> points() const noexcept { return seq_; }
  std::size_t size() const noexcept { return seq_.size(); }
  bool degenerate() const noexcept { return seq_.size() == 2; }
  PointId front() const noexcept { return seq_.front(); }
  PointId back() const noexcept { return seq_.back(); }
  bool is_end(PointId p) const noexcept { return p == front() || p == back(); }
  bool contains(PointId p) const noexcept { return index_of(p).has_value(); }
  std::optional<std::size_t> index_of(PointId p) const noexcept;

  /// Members sorted by id.
  std::vector<PointId> member_set() const;

  friend bool operator==(const Line&, const Line&) = default;
  friend auto operator<=>(const Line& a, const Line& b) { return a.seq_ <=> b.seq_; }

 private:
  explicit Line(std::vector<PointId> seq) : seq_(std::move(seq)) {}
  std::vector<PointId> seq_;
};

/// A ring: a cyclic injective sequence of at least four points.
///
/// Canonical storage starts at the smallest id and proceeds toward the smaller
/// of its two neighbours, so rotations and reflections compare equal.
class Ring {
 public:
  static Ring from(std::vector<PointId> cyc);

  std::span<const PointId> points() const noexcept { return cyc_; }
  std::size_t size() const noexcept { return cyc_.size(); }
  bool contains(PointId p) const noexcept { return index_of(p).has_value(); }
  std::optional<std::size_t> index_of(PointId p) const noexcept;
  std::vector<PointId> member_set() const;

  friend bool operator==(const Ring&, const Ring&) = default;
  friend auto operator<=>(const Ring& a, const Ring& b) { return a.cyc_ <=> b.cyc_; }

 private:
  explicit Ring(std::vector<PointId> cyc) : cyc_(std::move(cyc)) {}
  std::vector<PointId> cyc_;
};

/// Joins two lines meeting in exactly one shared end point.
Line concat(const Line& l1, const Line& l2);

/// Splits a line at an interior point into its prefix and suffix intervals.
std::pair<Line, Line> split(const Line& l, PointId p);

/// Splits a line at two distinct interior points, in the line's own order.
std::array<Line, 3> split3(const Line& l, PointId p, PointId q);

/// The contiguous run of `l` from `a` to `b`: the unique sub-line of `l` with
/// end points {a, b}.
Line interval(const Line& l, PointId a, PointId b);

/// True iff `b` lies strictly between `a` and `c` within the line.
bool between(const Line& ctx, PointId a, PointId b, PointId c);

/// True iff a line from `a` to `b` and a line from `b` to `c` exist within the
/// ring sharing only `b`.
bool between(const Ring& ctx, PointId a, PointId b, PointId c);

/// Composes a ring from two lines sharing exactly their end points. The cyclic
/// order runs forward along `l1`, then back through the interior of `l2`.
Ring ring_from_lines(const Line& l1, const Line& l2);

/// The two arcs of `r` between `p` and `q`: the first runs from `p` to `q` in
/// the ring's stored direction, the second from `q` back to `p`.
std::pair<Line, Line> ring_rechord(const Ring& r, PointId p, PointId q);

}  // namespace seriate

template <>
struct std::hash<seriate::PointId> {
  std::size_t operator()(seriate::PointId p) const noexcept { return std::hash<std::uint32_t>{}(p.value); }
};
