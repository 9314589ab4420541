// Lattice-cell theorems over every area inside a rows x cols cell grid.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "check_detail.hpp"

namespace seriate::check::detail {

using nlohmann::ordered_json;

namespace {

using Mask = std::uint64_t;

struct Grid {
  int rows, cols;
  Mask full, not_first_col, not_last_col;

  Grid(int r, int c) : rows(r), cols(c) {
    full = (Mask{1} << (r * c)) - 1;
    not_first_col = not_last_col = full;
    for (int i = 0; i < r; ++i) {
      not_first_col &= ~(Mask{1} << (i * c));
      not_last_col &= ~(Mask{1} << (i * c + c - 1));
    }
  }

  Mask spread(Mask m) const {
    return (((m << 1) & not_first_col) | ((m >> 1) & not_last_col) | (m << cols) | (m >> cols)) & full;
  }

  bool connected(Mask m) const {
    Mask seen = m & (~m + 1);
    for (;;) {
      Mask next = (seen | spread(seen)) & m;
      if (next == seen) return seen == m;
      seen = next;
    }
  }

  std::vector<Coord> cells(Mask m) const {
    std::vector<Coord> out;
    for (int i = 0; i < rows * cols; ++i) {
      if (m >> i & 1) out.push_back({i / cols, i % cols});
    }
    return out;
  }

  Mask bit(Coord c) const { return Mask{1} << (c.r * cols + c.c); }
};

struct AreaSet {
  std::vector<Mask> masks;
  std::vector<LatticeArea> areas;
};

void guard_grid(const Context& ctx) {
  if (ctx.b.rows * ctx.b.cols > 30) throw Error(Errc::bounds_too_large, "cell grids above 30 cells are out of reach");
  guard_estimate(ctx, static_cast<double>(Mask{1} << (ctx.b.rows * ctx.b.cols)));
}

// Every simply connected 4-connected cell set, by increasing mask.
const AreaSet& all_areas(const Context& ctx) {
  guard_grid(ctx);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<AreaSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{ctx.b.rows, ctx.b.cols}];
  if (!slot) {
    Grid g(ctx.b.rows, ctx.b.cols);
    auto set = std::make_unique<AreaSet>();
    for (Mask m = 1; m <= g.full; ++m) {
      if (!g.connected(m)) continue;
      try {
        set->areas.push_back(area_from_cells(g.cells(m)));
        set->masks.push_back(m);
      } catch (const Error& e) {
        if (e.code() != Errc::not_simply_connected) throw;
      }
    }
    slot = std::move(set);
  }
  return *slot;
}

std::vector<std::string> vertex_names(const std::vector<Coord>& vs) {
  std::vector<std::string> out;
  for (Coord v : vs) out.push_back(vertex_name(v));
  return out;
}

ModelFile areas_model(const std::vector<std::pair<std::string, const LatticeArea*>>& areas) {
  ModelFile m;
  for (const auto& [id, a] : areas) m.areas.push_back({id, a->cells()});
  return m;
}

Key cells_key(std::initializer_list<const LatticeArea*> areas, const std::vector<Coord>& extra = {}) {
  Key k;
  for (const LatticeArea* a : areas) k.push_back(static_cast<long long>(a->cells().size()));
  for (const LatticeArea* a : areas) {
    for (Coord c : a->cells()) {
      k.push_back(c.r);
      k.push_back(c.c);
    }
  }
  k.push_back(static_cast<long long>(extra.size()));
  for (Coord c : extra) {
    k.push_back(c.r);
    k.push_back(c.c);
  }
  return k;
}

std::vector<Coord> common_vertices(const LatticeArea& a, const LatticeArea& b) {
  std::vector<Coord> out;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(), std::back_inserter(out));
  return out;
}

// The single common boundary line of two disjoint areas, if they have one
// and touch nowhere else.
std::optional<std::vector<Coord>> single_line(const LatticeArea& a, const LatticeArea& b) {
  auto lines = shared_lines(a.cells(), b.cells());
  if (lines.size() != 1 || !lines.front().simple_path) return std::nullopt;
  std::vector<Coord> sorted = lines.front().path;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != common_vertices(a, b)) return std::nullopt;
  return lines.front().path;
}

std::vector<PointId> ids_of(const std::vector<Coord>& vs) {
  std::vector<PointId> out;
  for (Coord v : vs) out.push_back(vertex_id(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Pairs (i, j), i < j, of disjoint areas sharing at least one unit edge.
template <class F>
Partial over_adjacent_pairs(const Context& ctx, const AreaSet& as, F&& per_pair) {
  Grid g(ctx.b.rows, ctx.b.cols);
  guard_estimate(ctx, static_cast<double>(as.masks.size()) * static_cast<double>(as.masks.size()) / 2);
  return run_items(ctx, as.masks.size(), [&](std::size_t i, Partial& out) {
    Mask mi = as.masks[i];
    Mask near = g.spread(mi);
    for (std::size_t j = i + 1; j < as.masks.size(); ++j) {
      Mask mj = as.masks[j];
      if ((mi & mj) || !(near & mj)) continue;
      per_pair(i, j, out);
    }
  });
}

}  // namespace

Partial th2_10(const Context& ctx) {
  const AreaSet& as = all_areas(ctx);
  return over_adjacent_pairs(ctx, as, [&](std::size_t i, std::size_t j, Partial& out) {
    const LatticeArea &a = as.areas[i], &b = as.areas[j];
    auto line = single_line(a, b);
    if (!line) return;
    ++out.instances;
    LatticeArea u = area_union(a, b);
    std::vector<Coord> want_cells = a.cells();
    want_cells.insert(want_cells.end(), b.cells().begin(), b.cells().end());
    std::sort(want_cells.begin(), want_cells.end());
    std::set<Coord> bound(a.boundary().begin(), a.boundary().end());
    bound.insert(b.boundary().begin(), b.boundary().end());
    for (std::size_t k = 1; k + 1 < line->size(); ++k) bound.erase((*line)[k]);
    bool ok = u.cells() == want_cells && ids_of(u.boundary()) == ids_of({bound.begin(), bound.end()});
    if (!ok) {
      out.refute(cells_key({&a, &b}), [&] {
        return counterexample_body(areas_model({{"a", &a}, {"c", &b}}), lookup("Th2.10").statement, {}, ctx.sem);
      });
    }
  });
}

namespace {

// Chords of `a`: lattice paths from a boundary vertex through interior
// vertices only to another boundary vertex, crossing the area's inside.
template <class F>
void chords_of(const LatticeArea& a, int max_path, F&& visit) {
  const std::array<Coord, 4> steps{Coord{-1, 0}, Coord{1, 0}, Coord{0, -1}, Coord{0, 1}};
  auto inner_edge = [&](Coord u, Coord v) {
    // Both cells along the edge belong to the area.
    Coord lo = std::min(u, v);
    if (u.r == v.r) return a.has_cell({lo.r - 1, lo.c}) && a.has_cell({lo.r, lo.c});
    return a.has_cell({lo.r, lo.c - 1}) && a.has_cell({lo.r, lo.c});
  };
  std::vector<Coord> path;
  std::set<Coord> used;
  auto rec = [&](auto& self) -> void {
    Coord cur = path.back();
    for (Coord d : steps) {
      Coord n{cur.r + d.r, cur.c + d.c};
      if (used.count(n) || !a.has_vertex(n) || !inner_edge(cur, n)) continue;
      if (a.on_boundary(n)) {
        if (path.front() < n) {
          path.push_back(n);
          visit(path);
          path.pop_back();
        }
      } else if (static_cast<int>(path.size()) + 1 < max_path) {
        used.insert(n);
        path.push_back(n);
        self(self);
        path.pop_back();
        used.erase(n);
      }
    }
  };
  for (Coord s : a.boundary()) {
    path = {s};
    used = {s};
    rec(rec);
  }
}

}  // namespace

Partial th2_11(const Context& ctx) {
  const AreaSet& as = all_areas(ctx);
  return run_items(ctx, as.areas.size(), [&](std::size_t i, Partial& out) {
    const LatticeArea& a = as.areas[i];
    chords_of(a, ctx.b.max_path, [&](const std::vector<Coord>& chord) {
      ++out.instances;
      auto [s1, s2] = area_split(a, GridPath{chord, PathMode::lattice4});
      std::vector<Coord> cells = s1.cells();
      cells.insert(cells.end(), s2.cells().begin(), s2.cells().end());
      std::sort(cells.begin(), cells.end());
      std::vector<Coord> chord_sorted = chord;
      std::sort(chord_sorted.begin(), chord_sorted.end());
      bool ok = cells == a.cells() && common_vertices(s1, s2) == chord_sorted;
      if (ok) {
        LatticeArea back = area_union(s1, s2);
        ok = back == a && back.boundary_ring() == a.boundary_ring();
      }
      if (!ok) {
        out.refute(cells_key({&a}, chord), [&] {
          ModelFile m = areas_model({{"a", &a}});
          m.points = vertex_names(chord);
          m.lines.push_back({"x", vertex_names(chord)});
          return counterexample_body(m, lookup("Th2.11").statement, {}, ctx.sem);
        });
      }
    });
  });
}

namespace {

// Simple cycles of `a`'s edge graph (sides of its cells), each once: from its
// smallest vertex, toward the smaller of that vertex's two cycle neighbours.
template <class F>
void cycles_of(const LatticeArea& a, F&& visit) {
  const std::array<Coord, 4> steps{Coord{-1, 0}, Coord{1, 0}, Coord{0, -1}, Coord{0, 1}};
  auto side_edge = [&](Coord u, Coord v) {
    Coord lo = std::min(u, v);
    if (u.r == v.r) return a.has_cell({lo.r - 1, lo.c}) || a.has_cell({lo.r, lo.c});
    return a.has_cell({lo.r, lo.c - 1}) || a.has_cell({lo.r, lo.c});
  };
  std::vector<Coord> path;
  std::set<Coord> used;
  auto rec = [&](auto& self) -> void {
    Coord cur = path.back();
    for (Coord d : steps) {
      Coord n{cur.r + d.r, cur.c + d.c};
      if (!a.has_vertex(n) || !side_edge(cur, n)) continue;
      if (n == path.front()) {
        if (path.size() >= 4 && path[1] < path.back()) visit(path);
        continue;
      }
      if (n < path.front() || used.count(n)) continue;
      used.insert(n);
      path.push_back(n);
      self(self);
      path.pop_back();
      used.erase(n);
    }
  };
  for (Coord s : a.vertices()) {
    path = {s};
    used = {s};
    rec(rec);
  }
}

}  // namespace

Partial th2_12(const Context& ctx) {
  const AreaSet& as = all_areas(ctx);
  // Boundary ring -> every area drawn by it; uniqueness asks for one each.
  std::map<Ring, std::vector<std::size_t>> by_ring;
  for (std::size_t i = 0; i < as.areas.size(); ++i) by_ring[as.areas[i].boundary_ring()].push_back(i);
  return run_items(ctx, as.areas.size(), [&](std::size_t i, Partial& out) {
    const LatticeArea& a = as.areas[i];
    Mask ma = as.masks[i];
    cycles_of(a, [&](const std::vector<Coord>& cyc) {
      ++out.instances;
      std::vector<PointId> ids;
      for (Coord v : cyc) ids.push_back(vertex_id(v));
      Ring r = Ring::from(ids);
      bool ok = true;
      try {
        LatticeArea sub = area_from_ring(a, r);
        auto it = by_ring.find(r);
        ok = sub.boundary_ring() == r && it != by_ring.end() && it->second.size() == 1 && as.areas[it->second.front()] == sub &&
             (as.masks[it->second.front()] & ~ma) == 0;
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        out.refute(cells_key({&a}, cyc), [&] {
          ModelFile m = areas_model({{"a", &a}});
          m.points = vertex_names(cyc);
          m.rings.push_back({"r", vertex_names(cyc)});
          return counterexample_body(m, lookup("Th2.12").statement, {}, ctx.sem);
        });
      }
    });
  });
}

namespace {

// Lattice paths through a1 and a2 from an interior vertex of a1 to an
// interior vertex of a2, every other vertex a boundary vertex of either. Any
// path meeting both interiors contains one of these.
template <class F>
void crossings_of(const LatticeArea& a1, const LatticeArea& a2, int max_path, F&& visit) {
  const std::array<Coord, 4> steps{Coord{-1, 0}, Coord{1, 0}, Coord{0, -1}, Coord{0, 1}};
  auto side_of = [](const LatticeArea& a, Coord u, Coord v) {
    Coord lo = std::min(u, v);
    if (u.r == v.r) return a.has_cell({lo.r - 1, lo.c}) || a.has_cell({lo.r, lo.c});
    return a.has_cell({lo.r, lo.c - 1}) || a.has_cell({lo.r, lo.c});
  };
  std::vector<Coord> path;
  std::set<Coord> used;
  auto rec = [&](auto& self) -> void {
    Coord cur = path.back();
    for (Coord d : steps) {
      Coord n{cur.r + d.r, cur.c + d.c};
      if (used.count(n) || !(side_of(a1, cur, n) || side_of(a2, cur, n))) continue;
      if (a2.interior_vertex(n)) {
        path.push_back(n);
        visit(path);
        path.pop_back();
        continue;
      }
      if (a1.interior_vertex(n) || static_cast<int>(path.size()) + 2 > max_path) continue;
      used.insert(n);
      path.push_back(n);
      self(self);
      path.pop_back();
      used.erase(n);
    }
  };
  for (Coord s : a1.vertices()) {
    if (!a1.interior_vertex(s)) continue;
    path = {s};
    used = {s};
    rec(rec);
  }
}

}  // namespace

Partial th2_13(const Context& ctx) {
  const AreaSet& as = all_areas(ctx);
  std::vector<char> roomy(as.areas.size());
  for (std::size_t i = 0; i < as.areas.size(); ++i) roomy[i] = as.areas[i].vertices().size() > as.areas[i].boundary().size();
  return over_adjacent_pairs(ctx, as, [&](std::size_t i, std::size_t j, Partial& out) {
    if (!roomy[i] || !roomy[j]) return;
    const LatticeArea &a = as.areas[i], &b = as.areas[j];
    if (!single_line(a, b)) return;
    for (int dir = 0; dir < 2; ++dir) {
      const LatticeArea& from = dir == 0 ? a : b;
      const LatticeArea& to = dir == 0 ? b : a;
      crossings_of(from, to, ctx.b.max_path, [&](const std::vector<Coord>& p) {
        ++out.instances;
        auto hit = crossing_boundary(from, to, GridPath{p, PathMode::lattice4});
        bool ok = false;
        if (hit) {
          Coord v = *vertex_of(*hit);
          ok = from.has_vertex(v) && to.has_vertex(v) && std::find(p.begin(), p.end(), v) != p.end();
        }
        if (!ok) {
          out.refute(cells_key({&from, &to}, p), [&] {
            ModelFile m = areas_model({{"a", &from}, {"c", &to}});
            m.points = vertex_names(p);
            m.lines.push_back({"p", vertex_names(p)});
            return counterexample_body(m, lookup("Th2.13").statement, {}, ctx.sem);
          });
        }
      });
    }
  });
}

namespace {

struct Arm {
  std::vector<Coord> pts;
  Mask inner = 0;  // interior vertices as bits of the vertex grid
};

}  // namespace

// Thetas inside the whole grid area: three lattice paths with common ends and
// no other common vertex. Sub-areas add nothing, as nesting is decided by the
// arms alone.
Partial th2_14(const Context& ctx) {
  guard_grid(ctx);
  int vr = ctx.b.rows + 1, vc = ctx.b.cols + 1;
  std::vector<Coord> all;
  for (int r = 0; r < ctx.b.rows; ++r) {
    for (int c = 0; c < ctx.b.cols; ++c) all.push_back({r, c});
  }
  LatticeArea whole = area_from_cells(all);
  std::vector<std::pair<Coord, Coord>> ends;
  for (int p = 0; p < vr * vc; ++p) {
    for (int q = p + 1; q < vr * vc; ++q) ends.push_back({{p / vc, p % vc}, {q / vc, q % vc}});
  }
  return run_items(ctx, ends.size(), [&](std::size_t idx, Partial& out) {
    auto [P, Q] = ends[idx];
    std::vector<Arm> arms;
    const std::array<Coord, 4> steps{Coord{-1, 0}, Coord{1, 0}, Coord{0, -1}, Coord{0, 1}};
    Arm cur{{P}, 0};
    Mask used = Mask{1} << (P.r * vc + P.c);
    auto rec = [&](auto& self) -> void {
      Coord at = cur.pts.back();
      for (Coord d : steps) {
        Coord n{at.r + d.r, at.c + d.c};
        if (n.r < 0 || n.c < 0 || n.r >= vr || n.c >= vc) continue;
        Mask bit = Mask{1} << (n.r * vc + n.c);
        if (used & bit) continue;
        if (n == Q) {
          cur.pts.push_back(n);
          arms.push_back(cur);
          cur.pts.pop_back();
          continue;
        }
        if (static_cast<int>(cur.pts.size()) + 2 > ctx.b.max_path) continue;
        used |= bit;
        cur.inner |= bit;
        cur.pts.push_back(n);
        self(self);
        cur.pts.pop_back();
        cur.inner &= ~bit;
        used &= ~bit;
      }
    };
    rec(rec);
    for (std::size_t i = 0; i < arms.size(); ++i) {
      for (std::size_t j = i + 1; j < arms.size(); ++j) {
        if (arms[i].inner & arms[j].inner) continue;
        for (std::size_t k = j + 1; k < arms.size(); ++k) {
          if ((arms[k].inner & (arms[i].inner | arms[j].inner))) continue;
          int direct = (arms[i].pts.size() == 2) + (arms[j].pts.size() == 2) + (arms[k].pts.size() == 2);
          if (direct > 1) continue;
          ++out.instances;
          NestingVerdict v = theta_nesting(whole, GridPath{arms[i].pts, PathMode::lattice4}, GridPath{arms[j].pts, PathMode::lattice4},
                                           GridPath{arms[k].pts, PathMode::lattice4});
          if (v.qualifying == 1) continue;
          Key key{static_cast<long long>(idx), static_cast<long long>(i), static_cast<long long>(j), static_cast<long long>(k)};
          out.refute(key, [&] {
            ModelFile m = areas_model({{"a", &whole}});
            std::set<Coord> seen;
            for (const Arm* arm : {&arms[i], &arms[j], &arms[k]}) seen.insert(arm->pts.begin(), arm->pts.end());
            m.points = vertex_names({seen.begin(), seen.end()});
            m.lines = {{"x", vertex_names(arms[i].pts)}, {"y", vertex_names(arms[j].pts)}, {"z", vertex_names(arms[k].pts)}};
            return counterexample_body(m, lookup("Th2.14").statement, {}, ctx.sem);
          });
        }
      }
    }
  });
}

// A third area touching an interior point of a common line does so through
// one of its cells, and that cell alone is an area with the same contact, so
// single cells stand in for every third area.
Partial th2_15(const Context& ctx) {
  const AreaSet& as = all_areas(ctx);
  Grid g(ctx.b.rows, ctx.b.cols);
  std::vector<LatticeArea> singles;
  for (Coord c : g.cells(g.full)) singles.push_back(area_from_cells({c}));
  return over_adjacent_pairs(ctx, as, [&](std::size_t i, std::size_t j, Partial& out) {
    const LatticeArea &a = as.areas[i], &b = as.areas[j];
    Mask taken = as.masks[i] | as.masks[j];
    for (std::size_t c = 0; c < singles.size(); ++c) {
      if (taken >> c & 1) continue;
      ++out.instances;
      if (triple_point_check(a, b, singles[c])) continue;
      out.refute(cells_key({&a, &b, &singles[c]}), [&] {
        return counterexample_body(areas_model({{"a", &a}, {"c", &b}, {"e", &singles[c]}}), lookup("Th2.15").statement, {}, ctx.sem);
      });
    }
  });
}

Partial five_map(const Context& ctx) {
  int rows = ctx.b.rows, cols = ctx.b.cols, k = ctx.b.countries;
  guard_estimate(ctx, std::pow(static_cast<double>(k), rows * cols) / std::tgamma(k + 1.0));
  return run_items(ctx, 1, [&](std::size_t, Partial& out) {
    enumerate_partitions(rows, cols, k, [&](const std::vector<int>& labels) {
      ++out.instances;
      if (out.instances > ctx.ceiling) throw Error(Errc::bounds_too_large, "partition enumeration passed the instance ceiling");
      AdjacencyReport rep = five_map_check(rows, cols, labels, k);
      if (!rep.complete5) return true;
      Key key(labels.begin(), labels.end());
      out.refute(key, [&] {
        ModelFile m;
        std::vector<std::vector<Coord>> cells(static_cast<std::size_t>(k));
        for (int i = 0; i < rows * cols; ++i) cells[static_cast<std::size_t>(labels[i] - 1)].push_back({i / cols, i % cols});
        for (int c = 0; c < k; ++c) m.areas.push_back({"c^" + std::to_string(c + 1), cells[static_cast<std::size_t>(c)]});
        return counterexample_body(m, lookup("FiveMap").statement, {}, ctx.sem);
      });
      return true;
    });
  });
}

}  // namespace seriate::check::detail

namespace seriate::check {

MapSearch map_search(int rows, int cols, int k, bool exhaustive) {
  if (rows < 1 || cols < 1 || rows * cols > 30 || k < 1 || k > rows * cols) {
    throw std::invalid_argument("map_search: need 1 <= k <= rows*cols <= 30");
  }
  MapSearch out;
  enumerate_partitions(rows, cols, k, [&](const std::vector<int>& labels) {
    ++out.partitions;
    AdjacencyReport rep = five_map_check(rows, cols, labels, k);
    if (static_cast<int>(rep.clique.size()) < k) return true;
    ++out.complete;
    if (!out.first) out.first = labels;
    return exhaustive;
  });
  return out;
}

}  // namespace seriate::check
