#include "seriate/universe.hpp"

#include <algorithm>

namespace seriate {

namespace {

bool within(const std::vector<PointId>& small, const std::vector<PointId>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void check_line(const ModelUniverse& u, const Line& l) {
  auto mine = l.member_set();
  for (const Line& other : u.lines) {
    auto theirs = other.member_set();
    if (within(mine, theirs) && interval(other, l.front(), l.back()) != l) {
      throw Error(Errc::stability_violation, "a different line with the same end points already lies within that line");
    }
    if (within(theirs, mine) && interval(l, other.front(), other.back()) != other) {
      throw Error(Errc::stability_violation, "an asserted line within it has the same end points but other members");
    }
  }
  for (const Ring& r : u.rings) {
    if (within(r.member_set(), mine)) throw Error(Errc::consistency_violation, "an asserted ring would lie within the line");
  }
}

void check_ring(const ModelUniverse& u, const Ring& r) {
  auto mine = r.member_set();
  for (const Line& l : u.lines) {
    if (within(mine, l.member_set())) throw Error(Errc::consistency_violation, "the ring would lie within an asserted line");
  }
}

void add_line(ModelUniverse& u, const Line& l) {
  if (u.lines.count(l)) return;
  check_line(u, l);
  u.lines.insert(l);
  u.points.insert(l.points().begin(), l.points().end());
}

void add_ring(ModelUniverse& u, const Ring& r) {
  if (u.rings.count(r)) return;
  check_ring(u, r);
  u.rings.insert(r);
  u.points.insert(r.points().begin(), r.points().end());
}

}  // namespace

std::vector<const Line*> ModelUniverse::lines_with_ends(PointId a, PointId b) const {
  std::vector<const Line*> out;
  for (const Line& l : lines) {
    if ((l.front() == a && l.back() == b) || (l.front() == b && l.back() == a)) out.push_back(&l);
  }
  return out;
}

ModelUniverse assert_object(const ModelUniverse& u, const ModelObject& obj) {
  ModelUniverse next = u;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Line>) {
          add_line(next, o);
        } else if constexpr (std::is_same_v<T, Ring>) {
          add_ring(next, o);
        } else if constexpr (std::is_same_v<T, LineFamily>) {
          if (std::find(next.families.begin(), next.families.end(), o) != next.families.end()) return;
          for (std::size_t i = 0; i < o.row_count(); ++i) add_line(next, o.row_line(i));
          next.families.push_back(o);
        } else {
          if (std::find(next.areas.begin(), next.areas.end(), o) != next.areas.end()) return;
          add_ring(next, o.boundary_ring());
          for (Coord v : o.vertices()) next.points.insert(vertex_id(v));
          next.areas.push_back(o);
        }
      },
      obj);
  return next;
}

ModelUniverse add_point(const ModelUniverse& u, PointId p) {
  ModelUniverse next = u;
  next.points.insert(p);
  return next;
}

}  // namespace seriate
