#include "seriate/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace seriate {

PointId vertex_id(Coord v) {
  if (v.r < 0 || v.c < 0 || v.r >= static_cast<int>(kLatticeStride) || v.c >= static_cast<int>(kLatticeStride)) {
    throw Error(Errc::index_out_of_range, "lattice vertex off the supported range");
  }
  return PointId{kLatticeBase + static_cast<std::uint32_t>(v.r) * kLatticeStride + static_cast<std::uint32_t>(v.c)};
}

std::optional<Coord> vertex_of(PointId p) {
  if (p.value < kLatticeBase) return std::nullopt;
  std::uint32_t off = p.value - kLatticeBase;
  if (off >= kLatticeStride * kLatticeStride) return std::nullopt;
  return Coord{static_cast<int>(off / kLatticeStride), static_cast<int>(off % kLatticeStride)};
}

namespace {

using Edge = std::pair<Coord, Coord>;  // first < second

Edge edge(Coord a, Coord b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::array<Coord, 4> corners(Coord cell) {
  return {Coord{cell.r, cell.c}, Coord{cell.r, cell.c + 1}, Coord{cell.r + 1, cell.c + 1}, Coord{cell.r + 1, cell.c}};
}

// The two cells on either side of a unit edge.
std::array<Coord, 2> sides(const Edge& e) {
  auto [a, b] = e;
  if (a.r == b.r) return {Coord{a.r - 1, a.c}, Coord{a.r, a.c}};
  return {Coord{a.r, a.c - 1}, Coord{a.r, a.c}};
}

constexpr std::array<Coord, 4> kSteps{Coord{-1, 0}, Coord{1, 0}, Coord{0, -1}, Coord{0, 1}};

bool contains(const std::vector<Coord>& sorted, Coord x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

std::vector<Coord> sorted_unique(std::vector<Coord> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool four_connected(const std::vector<Coord>& cells) {
  if (cells.empty()) return false;
  std::set<Coord> seen{cells.front()};
  std::deque<Coord> q{cells.front()};
  while (!q.empty()) {
    Coord x = q.front();
    q.pop_front();
    for (Coord d : kSteps) {
      Coord y{x.r + d.r, x.c + d.c};
      if (contains(cells, y) && seen.insert(y).second) q.push_back(y);
    }
  }
  return seen.size() == cells.size();
}

bool unit_step(Coord a, Coord b) { return std::abs(a.r - b.r) + std::abs(a.c - b.c) == 1; }

bool is_cell_side(const std::vector<Coord>& cells, const Edge& e) {
  auto s = sides(e);
  return contains(cells, s[0]) || contains(cells, s[1]);
}

std::vector<Coord> ring_vertices(const Ring& r) {
  std::vector<Coord> out;
  for (PointId p : r.points()) {
    auto v = vertex_of(p);
    if (!v) throw Error(Errc::not_a_cycle_in_area, to_string(p) + " is not a lattice vertex");
    out.push_back(*v);
  }
  return out;
}

std::vector<Coord> path_cycle(const GridPath& a, const GridPath& b) {
  std::vector<Coord> cyc = a.pts;
  std::vector<Coord> back = b.pts;
  if (back.front() != a.pts.back()) std::reverse(back.begin(), back.end());
  cyc.insert(cyc.end(), back.begin() + 1, back.end() - 1);
  return cyc;
}

}  // namespace

Ring LatticeArea::boundary_ring() const {
  std::vector<PointId> ids;
  for (Coord v : boundary_) ids.push_back(vertex_id(v));
  return Ring::from(std::move(ids));
}

bool LatticeArea::has_cell(Coord c) const { return contains(cells_, c); }
bool LatticeArea::has_vertex(Coord v) const { return contains(vertices_, v); }
bool LatticeArea::on_boundary(Coord v) const { return contains(boundary_sorted_, v); }

LatticeArea area_from_cells(std::vector<Coord> cells) {
  cells = sorted_unique(std::move(cells));
  if (cells.empty()) throw Error(Errc::not_connected, "an area needs at least one cell");
  for (Coord c : cells) {
    if (c.r < 0 || c.c < 0 || c.r + 1 >= static_cast<int>(kLatticeStride) || c.c + 1 >= static_cast<int>(kLatticeStride)) {
      throw Error(Errc::index_out_of_range, "cell off the supported lattice");
    }
  }
  if (!four_connected(cells)) throw Error(Errc::not_connected, "cells are not 4-connected");

  int r0 = cells.front().r, r1 = cells.front().r, c0 = cells.front().c, c1 = cells.front().c;
  for (Coord c : cells) {
    r0 = std::min(r0, c.r);
    r1 = std::max(r1, c.r);
    c0 = std::min(c0, c.c);
    c1 = std::max(c1, c.c);
  }
  {
    // Flood the complement from outside the padded bounding box.
    std::set<Coord> seen{Coord{r0 - 1, c0 - 1}};
    std::deque<Coord> q{Coord{r0 - 1, c0 - 1}};
    while (!q.empty()) {
      Coord x = q.front();
      q.pop_front();
      for (Coord d : kSteps) {
        Coord y{x.r + d.r, x.c + d.c};
        if (y.r < r0 - 1 || y.r > r1 + 1 || y.c < c0 - 1 || y.c > c1 + 1) continue;
        if (!contains(cells, y) && seen.insert(y).second) q.push_back(y);
      }
    }
    std::size_t box = static_cast<std::size_t>(r1 - r0 + 3) * static_cast<std::size_t>(c1 - c0 + 3);
    if (seen.size() + cells.size() != box) throw Error(Errc::not_simply_connected, "cells enclose a hole");
  }

  LatticeArea a;
  std::map<Coord, std::vector<Coord>> adj;
  std::vector<Coord> verts;
  for (Coord cell : cells) {
    auto cs = corners(cell);
    verts.insert(verts.end(), cs.begin(), cs.end());
    for (std::size_t i = 0; i < 4; ++i) {
      Edge e = edge(cs[i], cs[(i + 1) % 4]);
      auto s = sides(e);
      if (contains(cells, s[0]) && contains(cells, s[1])) continue;
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
  }
  a.cells_ = cells;
  a.vertices_ = sorted_unique(std::move(verts));

  Coord start = adj.begin()->first;
  Coord prev = start;
  Coord cur = std::min(adj[start][0], adj[start][1]);
  a.boundary_.push_back(start);
  while (cur != start) {
    a.boundary_.push_back(cur);
    const auto& nb = adj[cur];
    Coord next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  a.boundary_sorted_ = sorted_unique(a.boundary_);
  return a;
}

std::vector<SharedLine> shared_lines(const std::vector<Coord>& a, const std::vector<Coord>& b) {
  std::map<Coord, std::vector<Coord>> adj;
  for (Coord cell : a) {
    auto cs = corners(cell);
    for (std::size_t i = 0; i < 4; ++i) {
      Edge e = edge(cs[i], cs[(i + 1) % 4]);
      auto s = sides(e);
      Coord other = s[0] == cell ? s[1] : s[0];
      if (!contains(b, other)) continue;
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
  }

  std::vector<SharedLine> out;
  std::set<Coord> seen;
  for (const auto& [v0, nb0] : adj) {
    if (seen.count(v0)) continue;
    std::vector<Coord> comp;
    std::deque<Coord> q{v0};
    seen.insert(v0);
    while (!q.empty()) {
      Coord x = q.front();
      q.pop_front();
      comp.push_back(x);
      for (Coord y : adj[x]) {
        if (seen.insert(y).second) q.push_back(y);
      }
    }
    SharedLine line;
    std::size_t degree_sum = 0;
    std::vector<Coord> ends;
    bool branching = false;
    for (Coord v : comp) {
      degree_sum += adj[v].size();
      if (adj[v].size() == 1) ends.push_back(v);
      if (adj[v].size() > 2) branching = true;
    }
    line.edges = degree_sum / 2;
    line.simple_path = !branching && ends.size() == 2;
    if (line.simple_path) {
      Coord start = std::min(ends[0], ends[1]);
      Coord prev = start;
      line.path.push_back(start);
      Coord cur = adj[start][0];
      while (true) {
        line.path.push_back(cur);
        if (adj[cur].size() == 1) break;
        Coord next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
    } else {
      line.path = sorted_unique(comp);
    }
    out.push_back(std::move(line));
  }
  return out;
}

namespace {

void require_no_overlap(const LatticeArea& a, const LatticeArea& b) {
  for (Coord c : a.cells()) {
    if (b.has_cell(c)) throw Error(Errc::cell_overlap, "areas share a cell");
  }
}

std::vector<Coord> shared_vertices(const LatticeArea& a, const LatticeArea& b) {
  std::vector<Coord> out;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(), std::back_inserter(out));
  return out;
}

}  // namespace

LatticeArea area_union(const LatticeArea& a1, const LatticeArea& a2) {
  require_no_overlap(a1, a2);
  auto lines = shared_lines(a1.cells(), a2.cells());
  if (lines.empty()) throw Error(Errc::no_common_line, "areas share no boundary edge");
  if (lines.size() > 1 || !lines.front().simple_path) throw Error(Errc::multiple_common_lines, "areas share more than one boundary line");
  if (sorted_unique(lines.front().path) != shared_vertices(a1, a2)) {
    throw Error(Errc::multiple_common_lines, "areas also touch away from their common line");
  }
  std::vector<Coord> cells = a1.cells();
  cells.insert(cells.end(), a2.cells().begin(), a2.cells().end());
  return area_from_cells(std::move(cells));
}

std::pair<LatticeArea, LatticeArea> area_split(const LatticeArea& a, const GridPath& chord) {
  if (chord.mode != PathMode::lattice4) throw Error(Errc::mode_mismatch, "chords are lattice paths");
  const auto& pts = chord.pts;
  if (pts.size() < 2) throw Error(Errc::invalid_path, "chord needs two vertices");
  if (!a.on_boundary(pts.front()) || !a.on_boundary(pts.back())) throw Error(Errc::chord_not_anchored, "chord end off the boundary");
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (a.on_boundary(pts[i])) throw Error(Errc::chord_touches_boundary, "chord touches the boundary between its ends");
    if (!a.has_vertex(pts[i])) throw Error(Errc::path_not_within, "chord leaves the area");
  }
  std::set<Edge> walls;
  for (std::size_t i = 1; i < pts.size(); ++i) walls.insert(edge(pts[i - 1], pts[i]));

  std::map<Coord, int> comp;
  int ncomp = 0;
  for (Coord seed : a.cells()) {
    if (comp.count(seed)) continue;
    ++ncomp;
    comp[seed] = ncomp;
    std::deque<Coord> q{seed};
    while (!q.empty()) {
      Coord x = q.front();
      q.pop_front();
      auto cs = corners(x);
      for (std::size_t i = 0; i < 4; ++i) {
        Edge e = edge(cs[i], cs[(i + 1) % 4]);
        if (walls.count(e)) continue;
        auto s = sides(e);
        Coord y = s[0] == x ? s[1] : s[0];
        if (a.has_cell(y) && !comp.count(y)) {
          comp[y] = ncomp;
          q.push_back(y);
        }
      }
    }
  }
  if (ncomp != 2) throw Error(Errc::not_separating, "chord does not cut the area in two");
  std::vector<Coord> first, second;
  for (auto [cell, k] : comp) (k == 1 ? first : second).push_back(cell);
  return {area_from_cells(std::move(first)), area_from_cells(std::move(second))};
}

std::vector<Coord> cells_inside(const std::vector<Coord>& cycle) {
  int r0 = cycle.front().r, r1 = r0, c0 = cycle.front().c, c1 = c0;
  for (Coord v : cycle) {
    r0 = std::min(r0, v.r);
    r1 = std::max(r1, v.r);
    c0 = std::min(c0, v.c);
    c1 = std::max(c1, v.c);
  }
  // Vertical unit edges per row band, by column.
  std::map<int, std::vector<int>> verticals;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Coord a = cycle[i];
    Coord b = cycle[(i + 1) % cycle.size()];
    if (a.c == b.c) verticals[std::min(a.r, b.r)].push_back(a.c);
  }
  std::vector<Coord> out;
  for (int r = r0; r < r1; ++r) {
    const auto& xs = verticals[r];
    for (int c = c0; c < c1; ++c) {
      auto crossings = std::count_if(xs.begin(), xs.end(), [&](int x) { return x > c; });
      if (crossings % 2 == 1) out.push_back(Coord{r, c});
    }
  }
  return out;
}

LatticeArea area_from_ring(const LatticeArea& a, const Ring& r) {
  std::vector<Coord> cyc = ring_vertices(r);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (!a.has_vertex(cyc[i])) throw Error(Errc::not_a_cycle_in_area, "ring vertex outside the area");
    if (!unit_step(cyc[i], cyc[(i + 1) % cyc.size()])) throw Error(Errc::not_a_cycle_in_area, "ring steps off the lattice edges");
  }
  std::vector<Coord> inside = cells_inside(cyc);
  if (inside.empty()) throw Error(Errc::empty_interior, "ring encloses no cell");
  for (Coord c : inside) {
    if (!a.has_cell(c)) throw Error(Errc::not_a_cycle_in_area, "ring encloses cells outside the area");
  }
  LatticeArea sub = area_from_cells(std::move(inside));
  if (sub.boundary_ring() != r) throw Error(Errc::not_a_cycle_in_area, "ring is not the boundary of the cells it encloses");
  return sub;
}

std::optional<PointId> crossing_boundary(const LatticeArea& a1, const LatticeArea& a2, const GridPath& p) {
  if (p.mode != PathMode::lattice4) throw Error(Errc::mode_mismatch, "crossing paths are lattice paths");
  if (p.pts.empty()) throw Error(Errc::invalid_path, "empty path");
  for (Coord v : p.pts) {
    if (!a1.has_vertex(v) && !a2.has_vertex(v)) throw Error(Errc::path_not_within, "path vertex outside both areas");
  }
  for (std::size_t i = 1; i < p.pts.size(); ++i) {
    Edge e = edge(p.pts[i - 1], p.pts[i]);
    if (!is_cell_side(a1.cells(), e) && !is_cell_side(a2.cells(), e)) throw Error(Errc::path_not_within, "path edge outside both areas");
  }
  bool in1 = std::any_of(p.pts.begin(), p.pts.end(), [&](Coord v) { return a1.interior_vertex(v); });
  bool in2 = std::any_of(p.pts.begin(), p.pts.end(), [&](Coord v) { return a2.interior_vertex(v); });
  if (!in1 || !in2) throw Error(Errc::no_interior_witness, "path misses the interior of an area");
  for (Coord v : p.pts) {
    if (a1.has_vertex(v) && a2.has_vertex(v)) return vertex_id(v);
  }
  return std::nullopt;
}

NestingVerdict theta_nesting(const LatticeArea& a, const GridPath& l1, const GridPath& l2, const GridPath& l3) {
  std::array<const GridPath*, 3> ls{&l1, &l2, &l3};
  for (const GridPath* l : ls) {
    if (l->mode != PathMode::lattice4) throw Error(Errc::mode_mismatch, "theta arms are lattice paths");
    if (l->pts.size() < 2) throw Error(Errc::invalid_path, "theta arm needs two vertices");
    for (std::size_t i = 1; i < l->pts.size(); ++i) {
      if (!is_cell_side(a.cells(), edge(l->pts[i - 1], l->pts[i]))) throw Error(Errc::path_not_within, "theta arm leaves the area");
    }
  }
  auto ends = [](const GridPath& l) { return std::minmax(l.pts.front(), l.pts.back()); };
  if (ends(l1) != ends(l2) || ends(l1) != ends(l3)) throw Error(Errc::endpoint_mismatch, "arms do not share both end points");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      std::vector<Coord> x = sorted_unique(ls[i]->pts);
      std::vector<Coord> y = sorted_unique(ls[j]->pts);
      std::vector<Coord> both;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
      if (both.size() != 2 || (ls[i]->pts.size() == 2 && ls[j]->pts.size() == 2)) {
        throw Error(Errc::not_internally_disjoint, "arms meet away from their end points");
      }
    }
  }
  NestingVerdict v;
  const std::array<std::array<int, 3>, 3> pairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (std::size_t k = 0; k < 3; ++k) {
    auto [i, j, o] = pairs[k];
    v.interiors[k] = cells_inside(path_cycle(*ls[static_cast<std::size_t>(i)], *ls[static_cast<std::size_t>(j)]));
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& outer = v.interiors[k];
    bool nests = true;
    for (std::size_t m = 0; m < 3 && nests; ++m) {
      if (m == k) continue;
      nests = std::includes(outer.begin(), outer.end(), v.interiors[m].begin(), v.interiors[m].end());
    }
    if (nests) {
      if (v.qualifying == 0) v.outer = {pairs[k][0], pairs[k][1]};
      ++v.qualifying;
    }
  }
  return v;
}

bool triple_point_check(const LatticeArea& a1, const LatticeArea& a2, const LatticeArea& a3) {
  require_no_overlap(a1, a2);
  require_no_overlap(a1, a3);
  require_no_overlap(a2, a3);
  auto lines = shared_lines(a1.cells(), a2.cells());
  if (lines.empty()) throw Error(Errc::no_common_line, "first two areas share no boundary line");
  for (const SharedLine& l : lines) {
    std::size_t lo = l.simple_path ? 1 : 0;
    std::size_t hi = l.simple_path ? l.path.size() - 1 : l.path.size();
    for (std::size_t i = lo; i < hi; ++i) {
      if (a3.has_vertex(l.path[i])) return false;
    }
  }
  return true;
}

bool region_connected(int rows, int cols, const std::vector<int>& labels, int label) {
  std::vector<Coord> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (labels[static_cast<std::size_t>(r * cols + c)] == label) cells.push_back({r, c});
  return four_connected(cells);
}

AdjacencyReport five_map_check(int rows, int cols, const std::vector<int>& labels, int k) {
  if (labels.size() != static_cast<std::size_t>(rows * cols)) throw Error(Errc::index_out_of_range, "label count differs from the grid size");
  std::vector<std::vector<Coord>> countries(static_cast<std::size_t>(k));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int l = labels[static_cast<std::size_t>(r * cols + c)];
      if (l < 1 || l > k) throw Error(Errc::index_out_of_range, "label outside 1.." + std::to_string(k));
      countries[static_cast<std::size_t>(l - 1)].push_back({r, c});
    }
  }
  for (int i = 0; i < k; ++i) {
    const auto& cs = countries[static_cast<std::size_t>(i)];
    if (cs.empty()) throw Error(Errc::empty_country, "country " + std::to_string(i + 1) + " has no cell");
    if (!four_connected(cs)) throw Error(Errc::disconnected_country, "country " + std::to_string(i + 1) + " is not 4-connected");
  }

  AdjacencyReport rep;
  rep.countries = k;
  auto n = static_cast<std::size_t>(k);
  rep.line_adjacent.assign(n, std::vector<bool>(n, false));
  rep.edge_adjacent.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (const SharedLine& l : shared_lines(countries[i], countries[j])) {
        rep.edge_adjacent[i][j] = rep.edge_adjacent[j][i] = true;
        if (l.edges >= 2) rep.line_adjacent[i][j] = rep.line_adjacent[j][i] = true;
      }
    }
  }
  // Largest pairwise line-adjacent set, first in subset order among ties.
  std::uint32_t best = 0;
  int best_size = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best_size) continue;
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i)
      for (std::size_t j = i + 1; j < n && clique; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u) && !rep.line_adjacent[i][j]) clique = false;
    if (clique) {
      best = mask;
      best_size = size;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (best >> i & 1u) rep.clique.push_back(static_cast<int>(i) + 1);
  rep.complete5 = best_size >= 5;
  return rep;
}

namespace {

class PartitionWalk {
 public:
  PartitionWalk(int rows, int cols, int k, const std::function<bool(const std::vector<int>&)>& visit)
      : rows_(rows), cols_(cols), k_(k), n_(rows * cols), visit_(visit), labels_(static_cast<std::size_t>(n_), 0) {}

  void run() {
    if (k_ < 1 || k_ > n_) return;
    step(0, 0);
  }

 private:
  bool step(int i, int used) {
    if (i == n_) {
      if (used != k_) return true;
      for (int l = 1; l <= k_; ++l) {
        if (!region_connected(rows_, cols_, labels_, l)) return true;
      }
      return visit_(labels_);
    }
    int top = std::min(used + 1, k_);
    for (int l = 1; l <= top; ++l) {
      int now_used = std::max(used, l);
      if (k_ - now_used > n_ - i - 1) continue;
      labels_[static_cast<std::size_t>(i)] = l;
      if (viable(i) && !step(i + 1, now_used)) return false;
    }
    labels_[static_cast<std::size_t>(i)] = 0;
    return true;
  }

  // A label split into pieces, one of which can no longer grow, is dead.
  bool viable(int i) const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<int> pieces(static_cast<std::size_t>(k_ + 1), 0);
    std::vector<bool> closed_piece(static_cast<std::size_t>(k_ + 1), false);
    for (int s = 0; s <= i; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      int l = labels_[static_cast<std::size_t>(s)];
      bool open = false;
      std::vector<int> stack{s};
      comp[static_cast<std::size_t>(s)] = s;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        int r = x / cols_, c = x % cols_;
        for (Coord d : kSteps) {
          int rr = r + d.r, cc = c + d.c;
          if (rr < 0 || rr >= rows_ || cc < 0 || cc >= cols_) continue;
          int y = rr * cols_ + cc;
          if (y > i) {
            open = true;
            continue;
          }
          if (labels_[static_cast<std::size_t>(y)] == l && comp[static_cast<std::size_t>(y)] < 0) {
            comp[static_cast<std::size_t>(y)] = s;
            stack.push_back(y);
          }
        }
      }
      ++pieces[static_cast<std::size_t>(l)];
      if (!open) closed_piece[static_cast<std::size_t>(l)] = true;
    }
    for (int l = 1; l <= k_; ++l) {
      if (pieces[static_cast<std::size_t>(l)] > 1 && closed_piece[static_cast<std::size_t>(l)]) return false;
    }
    return true;
  }

  int rows_, cols_, k_, n_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<int> labels_;
};

}  // namespace

void enumerate_partitions(int rows, int cols, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  PartitionWalk(rows, cols, k, visit).run();
}

}  // namespace seriate
