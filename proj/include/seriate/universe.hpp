#pragma once

#include <set>
#include <variant>
#include <vector>

#include "seriate/core.hpp"
#include "seriate/dimension2.hpp"
#include "seriate/lattice.hpp"

namespace seriate {

// Immutable once built; assert_object hands back an extended copy.
struct ModelUniverse {
  std::set<PointId> points;
  std::set<Line> lines;
  std::set<Ring> rings;
  std::vector<LineFamily> families;
  std::vector<LatticeArea> areas;

  // Lines whose two E objects are a and b.
  std::vector<const Line*> lines_with_ends(PointId a, PointId b) const;
};

using ModelObject = std::variant<Line, Ring, LineFamily, LatticeArea>;

// Throws stability_violation when a line lies within another asserted line
// without being the interval between its own end points there, and
// consistency_violation when a ring lies within a line. Families add their
// rows; areas add their boundary ring.
ModelUniverse assert_object(const ModelUniverse& u, const ModelObject& obj);

ModelUniverse add_point(const ModelUniverse& u, PointId p);

}  // namespace seriate
