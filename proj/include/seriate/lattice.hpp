#pragma once

// Lattice-cell semantics: areas are simply connected sets of unit cells, their
// points are cell corners, their boundary is the ring of boundary corners.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "seriate/dimension2.hpp"

namespace seriate {

inline constexpr std::uint32_t kLatticeBase = 1'000'000;
inline constexpr std::uint32_t kLatticeStride = 1000;

// Lattice vertex (r, c) with 0 <= r, c < kLatticeStride.
PointId vertex_id(Coord v);
std::optional<Coord> vertex_of(PointId p);

class LatticeArea {
 public:
  const std::vector<Coord>& cells() const noexcept { return cells_; }
  const std::vector<Coord>& vertices() const noexcept { return vertices_; }
  // Boundary corners in cyclic order, starting at the smallest.
  const std::vector<Coord>& boundary() const noexcept { return boundary_; }
  Ring boundary_ring() const;

  bool has_cell(Coord c) const;
  bool has_vertex(Coord v) const;
  bool on_boundary(Coord v) const;
  bool interior_vertex(Coord v) const { return has_vertex(v) && !on_boundary(v); }

  friend bool operator==(const LatticeArea& a, const LatticeArea& b) { return a.cells_ == b.cells_; }
  friend auto operator<=>(const LatticeArea& a, const LatticeArea& b) { return a.cells_ <=> b.cells_; }

 private:
  friend LatticeArea area_from_cells(std::vector<Coord> cells);
  std::vector<Coord> cells_;     // sorted
  std::vector<Coord> vertices_;  // sorted
  std::vector<Coord> boundary_;
  std::vector<Coord> boundary_sorted_;
};

LatticeArea area_from_cells(std::vector<Coord> cells);

// One connected run of unit edges separating a cell of one set from a cell of
// the other. Simple paths keep their vertex order; anything else (loops,
// branchings) lists its vertices sorted.
struct SharedLine {
  std::vector<Coord> path;
  std::size_t edges = 0;
  bool simple_path = false;
};

std::vector<SharedLine> shared_lines(const std::vector<Coord>& a, const std::vector<Coord>& b);

LatticeArea area_union(const LatticeArea& a1, const LatticeArea& a2);

std::pair<LatticeArea, LatticeArea> area_split(const LatticeArea& a, const GridPath& chord);

// Cells whose centres lie inside a closed lattice cycle.
std::vector<Coord> cells_inside(const std::vector<Coord>& cycle);

LatticeArea area_from_ring(const LatticeArea& a, const Ring& r);

std::optional<PointId> crossing_boundary(const LatticeArea& a1, const LatticeArea& a2, const GridPath& p);

struct NestingVerdict {
  int qualifying = 0;
  std::array<int, 2> outer{-1, -1};
  std::array<std::vector<Coord>, 3> interiors;  // cycles l1+l2, l1+l3, l2+l3
};

NestingVerdict theta_nesting(const LatticeArea& a, const GridPath& l1, const GridPath& l2, const GridPath& l3);

bool triple_point_check(const LatticeArea& a1, const LatticeArea& a2, const LatticeArea& a3);

struct AdjacencyReport {
  int countries = 0;
  std::vector<std::vector<bool>> line_adjacent;  // >= 2 edges in one shared run
  std::vector<std::vector<bool>> edge_adjacent;  // >= 1 shared edge
  bool complete5 = false;
  std::vector<int> clique;  // largest pairwise line-adjacent set, 1-based
};

// labels: row-major R x C assignment, countries numbered 1..k.
AdjacencyReport five_map_check(int rows, int cols, const std::vector<int>& labels, int k);

// Partitions of the grid into exactly k nonempty 4-connected regions, labels
// by first occurrence in row-major order. Returning false stops the walk.
void enumerate_partitions(int rows, int cols, int k, const std::function<bool(const std::vector<int>&)>& visit);

bool region_connected(int rows, int cols, const std::vector<int>& labels, int label);

}  // namespace seriate
