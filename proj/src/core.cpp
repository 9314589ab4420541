#include "seriate/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace seriate {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::stability_violation: return "StabilityViolation";
    case Errc::consistency_violation: return "ConsistencyViolation";
    case Errc::shared_interior: return "SharedInterior";
    case Errc::no_shared_endpoint: return "NoSharedEndpoint";
    case Errc::multiple_shared: return "MultipleShared";
    case Errc::not_interior: return "NotInterior";
    case Errc::duplicate_cut: return "DuplicateCut";
    case Errc::not_member: return "NotMember";
    case Errc::not_distinct: return "NotDistinct";
    case Errc::endpoint_mismatch: return "EndpointMismatch";
    case Errc::not_injective: return "NotInjective";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::point_not_subsumed: return "PointNotSubsumed";
    case Errc::same_row: return "SameRow";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::shared_interior_row: return "SharedInteriorRow";
    case Errc::no_shared_end_row: return "NoSharedEndRow";
    case Errc::not_interior_row: return "NotInteriorRow";
    case Errc::rows_not_disjoint: return "RowsNotDisjoint";
    case Errc::not_rectangular: return "NotRectangular";
    case Errc::not_on_boundary: return "NotOnBoundary";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::cover_failure: return "CoverFailure";
    case Errc::range_mismatch: return "RangeMismatch";
    case Errc::entangled: return "Entangled";
    case Errc::mode_mismatch: return "ModeMismatch";
    case Errc::invalid_path: return "InvalidPath";
    case Errc::not_connected: return "NotConnected";
    case Errc::not_simply_connected: return "NotSimplyConnected";
    case Errc::no_common_line: return "NoCommonLine";
    case Errc::multiple_common_lines: return "MultipleCommonLines";
    case Errc::cell_overlap: return "CellOverlap";
    case Errc::chord_not_anchored: return "ChordNotAnchored";
    case Errc::chord_touches_boundary: return "ChordTouchesBoundary";
    case Errc::not_separating: return "NotSeparating";
    case Errc::not_a_cycle_in_area: return "NotACycleInArea";
    case Errc::empty_interior: return "EmptyInterior";
    case Errc::no_interior_witness: return "NoInteriorWitness";
    case Errc::path_not_within: return "PathNotWithin";
    case Errc::not_internally_disjoint: return "NotInternallyDisjoint";
    case Errc::disconnected_country: return "DisconnectedCountry";
    case Errc::empty_country: return "EmptyCountry";
    case Errc::bounds_too_large: return "BoundsTooLarge";
    case Errc::unknown_theorem: return "UnknownTheorem";
    case Errc::unsupported_semantics: return "UnsupportedSemantics";
  }
  return "Unknown";
}

std::string to_string(PointId p) { return "#" + std::to_string(p.value); }

namespace {

void require_injective(std::span<const PointId> seq, const char* what) {
  std::vector<PointId> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::not_injective, std::string(what) + " repeats a point");
  }
}

std::size_t require_index(const Line& l, PointId p) {
  auto idx = l.index_of(p);
  if (!idx) throw Error(Errc::not_member, to_string(p) + " is not on the line");
  return *idx;
}

Line sub_line(const Line& l, std::size_t from, std::size_t to) {
  auto pts = l.points();
  if (from > to) std::swap(from, to);
  return Line::from({pts.begin() + static_cast<std::ptrdiff_t>(from), pts.begin() + static_cast<std::ptrdiff_t>(to) + 1});
}

// Orients `l` so that `first` is at the front.
std::vector<PointId> oriented_from(const Line& l, PointId first) {
  std::vector<PointId> seq(l.points().begin(), l.points().end());
  if (seq.front() != first) std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

Line Line::from(std::vector<PointId> seq) {
  if (seq.size() < 2) throw Error(Errc::too_few_points, "a line needs at least two points");
  require_injective(seq, "line");
  if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
  return Line(std::move(seq));
}

std::optional<std::size_t> Line::index_of(PointId p) const noexcept {
  auto it = std::find(seq_.begin(), seq_.end(), p);
  if (it == seq_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - seq_.begin());
}

std::vector<PointId> Line::member_set() const {
  std::vector<PointId> out = seq_;
  std::sort(out.begin(), out.end());
  return out;
}

Ring Ring::from(std::vector<PointId> cyc) {
  if (cyc.size() < 4) throw Error(Errc::too_few_points, "a ring needs at least four points");
  require_injective(cyc, "ring");
  auto min_it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), min_it, cyc.end());
  if (cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  return Ring(std::move(cyc));
}

std::optional<std::size_t> Ring::index_of(PointId p) const noexcept {
  auto it = std::find(cyc_.begin(), cyc_.end(), p);
  if (it == cyc_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cyc_.begin());
}

std::vector<PointId> Ring::member_set() const {
  std::vector<PointId> out = cyc_;
  std::sort(out.begin(), out.end());
  return out;
}

Line concat(const Line& l1, const Line& l2) {
  std::vector<PointId> common;
  for (PointId p : l1.points()) {
    if (l2.contains(p)) common.push_back(p);
  }
  if (common.empty()) throw Error(Errc::no_shared_endpoint, "lines have no point in common");
  for (PointId p : common) {
    if (!l1.is_end(p) || !l2.is_end(p)) {
      throw Error(Errc::shared_interior, "shared point " + to_string(p) + " is interior to a line");
    }
  }
  if (common.size() > 1) throw Error(Errc::multiple_shared, "lines share more than one point");

  PointId joint = common.front();
  std::vector<PointId> seq = oriented_from(l1, l1.front() == joint ? l1.back() : l1.front());
  std::vector<PointId> tail = oriented_from(l2, joint);
  seq.insert(seq.end(), tail.begin() + 1, tail.end());
  return Line::from(std::move(seq));
}

std::pair<Line, Line> split(const Line& l, PointId p) {
  auto idx = l.index_of(p);
  if (!idx || *idx == 0 || *idx + 1 == l.size()) {
    throw Error(Errc::not_interior, to_string(p) + " is not an interior point of the line");
  }
  return {sub_line(l, 0, *idx), sub_line(l, *idx, l.size() - 1)};
}

std::array<Line, 3> split3(const Line& l, PointId p, PointId q) {
  auto ip = l.index_of(p);
  auto iq = l.index_of(q);
  auto interior = [&](const std::optional<std::size_t>& i) { return i && *i != 0 && *i + 1 != l.size(); };
  if (!interior(ip)) throw Error(Errc::not_interior, to_string(p) + " is not an interior point of the line");
  if (!interior(iq)) throw Error(Errc::not_interior, to_string(q) + " is not an interior point of the line");
  if (p == q) throw Error(Errc::duplicate_cut, "cut points coincide");
  std::size_t a = std::min(*ip, *iq);
  std::size_t b = std::max(*ip, *iq);
  return {sub_line(l, 0, a), sub_line(l, a, b), sub_line(l, b, l.size() - 1)};
}

Line interval(const Line& l, PointId a, PointId b) {
  std::size_t ia = require_index(l, a);
  std::size_t ib = require_index(l, b);
  if (ia == ib) throw Error(Errc::not_distinct, "interval end points coincide");
  return sub_line(l, ia, ib);
}

bool between(const Line& ctx, PointId a, PointId b, PointId c) {
  std::size_t ia = require_index(ctx, a);
  std::size_t ib = require_index(ctx, b);
  std::size_t ic = require_index(ctx, c);
  if (ia == ib || ib == ic || ia == ic) throw Error(Errc::not_distinct, "betweenness needs three distinct points");
  return (ia < ib && ib < ic) || (ic < ib && ib < ia);
}

bool between(const Ring& ctx, PointId a, PointId b, PointId c) {
  auto ia = ctx.index_of(a);
  auto ib = ctx.index_of(b);
  auto ic = ctx.index_of(c);
  if (!ia || !ib || !ic) throw Error(Errc::not_member, "betweenness point is not on the ring");
  if (*ia == *ib || *ib == *ic || *ia == *ic) throw Error(Errc::not_distinct, "betweenness needs three distinct points");

  // Walk from a to b in whichever direction avoids c, then from b to c
  // avoiding a; the two arcs must meet only in b.
  auto arc_avoiding = [&](std::size_t from, std::size_t to, std::size_t avoid) -> std::optional<std::vector<std::size_t>> {
    const std::size_t n = ctx.size();
    for (std::size_t step : {std::size_t{1}, n - 1}) {
      std::vector<std::size_t> arc{from};
      std::size_t i = from;
      bool blocked = false;
      while (i != to) {
        i = (i + step) % n;
        if (i == avoid) {
          blocked = true;
          break;
        }
        arc.push_back(i);
      }
      if (!blocked) return arc;
    }
    return std::nullopt;
  };
  auto first = arc_avoiding(*ia, *ib, *ic);
  auto second = arc_avoiding(*ib, *ic, *ia);
  if (!first || !second) return false;
  std::unordered_set<std::size_t> seen(first->begin(), first->end());
  std::size_t shared = 0;
  for (std::size_t i : *second) shared += seen.count(i);
  return shared == 1;
}

Ring ring_from_lines(const Line& l1, const Line& l2) {
  for (PointId p : l1.points()) {
    if (l2.contains(p) && !(l1.is_end(p) && l2.is_end(p))) {
      throw Error(Errc::shared_interior, "lines share the non-end point " + to_string(p));
    }
  }
  bool same_ends = (l1.front() == l2.front() && l1.back() == l2.back()) ||
                   (l1.front() == l2.back() && l1.back() == l2.front());
  if (!same_ends) throw Error(Errc::endpoint_mismatch, "lines do not share both end points");

  std::vector<PointId> cyc(l1.points().begin(), l1.points().end());
  std::vector<PointId> back = oriented_from(l2, l1.back());
  cyc.insert(cyc.end(), back.begin() + 1, back.end() - 1);
  return Ring::from(std::move(cyc));
}

std::pair<Line, Line> ring_rechord(const Ring& r, PointId p, PointId q) {
  auto ip = r.index_of(p);
  auto iq = r.index_of(q);
  if (!ip || !iq) throw Error(Errc::not_member, "re-chord point is not on the ring");
  if (p == q) throw Error(Errc::not_distinct, "re-chord points coincide");
  auto arc = [&](std::size_t from, std::size_t to) {
    std::vector<PointId> seq{r.points()[from]};
    for (std::size_t i = from; i != to;) {
      i = (i + 1) % r.size();
      seq.push_back(r.points()[i]);
    }
    return Line::from(std::move(seq));
  };
  return {arc(*ip, *iq), arc(*iq, *ip)};
}

}  // namespace seriate
