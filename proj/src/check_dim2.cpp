// Transversal-semantics theorems: families of rows, seriating lines and
// row-continuous paths.

#include <algorithm>
#include <set>

#include "check_detail.hpp"
#include "seriate/seriate_set.hpp"

namespace seriate::check::detail {

using nlohmann::ordered_json;

namespace {

std::vector<std::pair<int, int>> grid_items(const Bounds& b) {
  std::vector<std::pair<int, int>> out;
  for (int k = 3; k <= b.rows; ++k) {
    for (int m = 3; m <= b.cols; ++m) out.emplace_back(k, m);
  }
  return out;
}

ModelFile family_model(const LineFamily& f) {
  ModelFile m;
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : f.rows()) {
    rows.push_back(names_of(row));
    m.points.insert(m.points.end(), rows.back().begin(), rows.back().end());
  }
  std::sort(m.points.begin(), m.points.end());
  m.families.push_back({"x", rows});
  return m;
}

Key family_key(const LineFamily& f, std::initializer_list<long long> extra) {
  Key k{static_cast<long long>(f.row_count())};
  for (const auto& row : f.rows()) k.push_back(static_cast<long long>(row.size()));
  k.insert(k.end(), extra);
  return k;
}

ordered_json generic(const std::string& id, const LineFamily& f, Semantics sem) {
  return counterexample_body(family_model(f), lookup(id).statement, {}, sem);
}

std::vector<Line> row_lines(const LineFamily& f) {
  std::vector<Line> out;
  for (std::size_t i = 0; i < f.row_count(); ++i) out.push_back(f.row_line(i));
  return out;
}

bool rows_disjoint(const LineFamily& f) {
  std::set<PointId> seen;
  std::size_t total = 0;
  for (const auto& row : f.rows()) {
    seen.insert(row.begin(), row.end());
    total += row.size();
  }
  return seen.size() == total;
}

bool family_valid(const LineFamily& f) {
  SeriateMode mode = f.row_count() >= 3 ? SeriateMode::strict : SeriateMode::relaxed;
  return rows_disjoint(f) && validate_seriate(SeriateCandidate::from_lines(row_lines(f)), mode).valid;
}

LineFamily reversed(const LineFamily& f) {
  auto rows = f.rows();
  std::reverse(rows.begin(), rows.end());
  return LineFamily::from_rows(std::move(rows), f.fixedness());
}

Line column(const LineFamily& f, std::size_t c) {
  std::vector<PointId> pts;
  for (const auto& row : f.rows()) pts.push_back(row[c]);
  return Line::from(std::move(pts));
}

// Unfixed families with `k` rows whose lengths run over 3..max_len each;
// ids are handed out row by row.
std::vector<LineFamily> unfixed_families(int k, int max_len) {
  std::vector<LineFamily> out;
  if (max_len < 3) return out;
  std::vector<int> len(static_cast<std::size_t>(k), 3);
  for (;;) {
    std::vector<std::vector<PointId>> rows;
    std::uint32_t next = 0;
    for (int l : len) {
      std::vector<PointId> row;
      for (int i = 0; i < l; ++i) row.push_back(PointId{next++});
      rows.push_back(std::move(row));
    }
    out.push_back(LineFamily::from_rows(std::move(rows), Fixedness::unfixed));
    int i = k - 1;
    while (i >= 0 && len[static_cast<std::size_t>(i)] == max_len) len[static_cast<std::size_t>(i--)] = 3;
    if (i < 0) break;
    ++len[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<LineFamily> unfixed_upto(const Bounds& b) {
  std::vector<LineFamily> out;
  for (int k = 3; k <= b.rows; ++k) {
    auto part = unfixed_families(k, b.cols);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool transversal_ok(const LineFamily& f, const Transversal& t, PointId p, PointId q) {
  if (t.picks.size() < 2 || t.picks.front().second != p || t.picks.back().second != q) return false;
  for (const auto& [row, x] : t.picks) {
    auto rc = f.locate(x);
    if (!rc || static_cast<std::size_t>(rc->r) != row) return false;
  }
  return is_seriating(t.points(), f);
}

Partial seriating_pairs(const Context& ctx, const std::string& id, const LineFamily& f) {
  Partial out;
  std::vector<PointId> pts = subsumed(f);
  for (PointId p : pts) {
    for (PointId q : pts) {
      if (f.locate(p)->r == f.locate(q)->r) continue;
      ++out.instances;
      if (transversal_ok(f, build_seriating(f, p, q), p, q)) continue;
      out.refute(family_key(f, {p.value, q.value}), [&] { return generic(id, f, ctx.sem); });
    }
  }
  return out;
}

}  // namespace

Partial th2_1(const Context& ctx) {
  auto items = grid_items(ctx.b);
  return run_items(ctx, items.size(), [&](std::size_t i, Partial& out) {
    auto [k, m] = items[i];
    LineFamily g = LineFamily::grid(k, m);
    std::vector<LineFamily> made{g, reversed(g)};
    for (std::size_t r = 1; r + 1 < g.row_count(); ++r) {
      auto [a, b] = family_split(g, r);
      made.push_back(a);
      made.push_back(b);
      made.push_back(family_concat(b, a));
    }
    made.push_back(reseriate(g, column(g, 0), column(g, static_cast<std::size_t>(m - 1))));
    for (const LineFamily& f : made) {
      ++out.instances;
      if (!family_valid(f)) out.refute(family_key(g, {static_cast<long long>(out.instances)}), [&] { return generic("Th2.1", f, ctx.sem); });
    }
  });
}

Partial th2_2(const Context& ctx) {
  auto items = grid_items(ctx.b);
  return run_items(ctx, items.size(), [&](std::size_t i, Partial& out) {
    auto [k, m] = items[i];
    LineFamily g = LineFamily::grid(k, m);
    for (std::size_t r = 1; r + 1 < g.row_count(); ++r) {
      ++out.instances;
      auto [a, b] = family_split(g, r);
      bool ok = a.row_count() == r + 1 && b.row_count() == g.row_count() - r && a.rows().back() == b.rows().front() &&
                family_concat(a, b) == g && family_concat(b, a) == reversed(g) && family_valid(a) && family_valid(b);
      if (!ok) out.refute(family_key(g, {static_cast<long long>(r)}), [&] { return generic("Th2.2", g, ctx.sem); });
    }
    // Row betweenness mirrors point betweenness on a line of row labels.
    std::vector<PointId> labels;
    for (std::size_t r = 0; r < g.row_count(); ++r) labels.push_back(PointId{static_cast<std::uint32_t>(r)});
    Line l = Line::from(labels);
    for (std::size_t a = 0; a < g.row_count(); ++a) {
      for (std::size_t b = 0; b < g.row_count(); ++b) {
        for (std::size_t c = 0; c < g.row_count(); ++c) {
          if (a == b || b == c || a == c) continue;
          ++out.instances;
          if (family_between(g, a, b, c) == between(l, labels[a], labels[b], labels[c])) continue;
          out.refute(family_key(g, {100 + static_cast<long long>(a), static_cast<long long>(b), static_cast<long long>(c)}),
                     [&] { return generic("Th2.2", g, ctx.sem); });
        }
      }
    }
  });
}

Partial th2_3(const Context& ctx) {
  std::vector<LineFamily> fams = unfixed_upto(ctx.b);
  guard_estimate(ctx, static_cast<double>(fams.size()) * ctx.b.rows * ctx.b.cols * ctx.b.rows * ctx.b.cols);
  return run_items(ctx, fams.size(), [&](std::size_t i, Partial& out) { out.absorb(seriating_pairs(ctx, "Th2.3", fams[i])); });
}

Partial th2_4(const Context& ctx) {
  std::vector<LineFamily> fams = unfixed_upto(ctx.b);
  for (auto [k, m] : grid_items(ctx.b)) fams.push_back(LineFamily::grid(k, m));
  return run_items(ctx, fams.size(), [&](std::size_t i, Partial& out) {
    const LineFamily& f = fams[i];
    ++out.instances;
    Ring ring = boundary_ring(f);
    const auto& rows = f.rows();
    std::set<PointId> want(rows.front().begin(), rows.front().end());
    want.insert(rows.back().begin(), rows.back().end());
    for (const auto& row : rows) {
      want.insert(row.front());
      want.insert(row.back());
    }
    std::vector<PointId> members = ring.member_set();
    bool ok = std::vector<PointId>(want.begin(), want.end()) == members &&
              ring.size() == rows.front().size() + rows.back().size() + 2 * (rows.size() - 2);
    // Consecutive ring points run along a row or step between the same-side
    // ends of adjacent rows.
    for (std::size_t j = 0; ok && j < ring.size(); ++j) {
      Coord a = *f.locate(ring.points()[j]);
      Coord b = *f.locate(ring.points()[(j + 1) % ring.size()]);
      bool along = a.r == b.r && std::abs(a.c - b.c) == 1;
      auto side = [&](Coord x) {
        return x.c == 0 ? 0 : static_cast<std::size_t>(x.c) + 1 == rows[static_cast<std::size_t>(x.r)].size() ? 1 : -1;
      };
      bool down = std::abs(a.r - b.r) == 1 && side(a) >= 0 && side(a) == side(b);
      ok = along || down;
    }
    if (!ok) out.refute(family_key(f, {}), [&] { return generic("Th2.4", f, ctx.sem); });
  });
}

Partial th2_5(const Context& ctx) {
  auto items = grid_items(ctx.b);
  return run_items(ctx, items.size(), [&](std::size_t i, Partial& out) {
    out.absorb(seriating_pairs(ctx, "Th2.5", LineFamily::grid(items[i].first, items[i].second)));
  });
}

Partial th2_6(const Context& ctx) {
  auto items = grid_items(ctx.b);
  return run_items(ctx, items.size(), [&](std::size_t i, Partial& out) {
    auto [k, m] = items[i];
    LineFamily g = LineFamily::grid(k, m);
    Line r0 = g.row_line(0), r1 = g.row_line(g.row_count() - 1);
    Line c0 = column(g, 0), c1 = column(g, static_cast<std::size_t>(m - 1));
    std::vector<std::pair<Line, Line>> cases{{r0, r1}, {r1, r0}, {c0, c1}, {c1, c0}};
    for (std::size_t j = 0; j < cases.size(); ++j) {
      ++out.instances;
      const auto& [b1, b2] = cases[j];
      LineFamily f = reseriate(g, b1, b2);
      bool ok = subsumed(f) == subsumed(g) && boundary_ring(f) == boundary_ring(g) && f.row_line(0) == b1 &&
                f.row_line(f.row_count() - 1) == b2 && family_valid(f);
      if (!ok) out.refute(family_key(g, {static_cast<long long>(j)}), [&] { return generic("Th2.6", g, ctx.sem); });
    }
  });
}

namespace {

struct SeriatingPair {
  std::size_t lo, hi;       // row range
  std::vector<int> c1, c2;  // columns per row
};

// Checks one pair of seriating lines bounding a sub-family.
bool bounded_family_ok(const LineFamily& g, const SeriatingPair& sp) {
  Transversal t1, t2;
  for (std::size_t r = sp.lo; r <= sp.hi; ++r) {
    t1.picks.emplace_back(r, *g.at({static_cast<int>(r), sp.c1[r - sp.lo]}));
    t2.picks.emplace_back(r, *g.at({static_cast<int>(r), sp.c2[r - sp.lo]}));
  }
  if (!is_seriating(t1.points(), g) || !is_seriating(t2.points(), g)) return false;
  LineFamily f = family_from_seriating(g, t1, t2);
  std::vector<std::vector<PointId>> want;
  std::set<PointId> ends;
  for (std::size_t r = sp.lo; r <= sp.hi; ++r) {
    int a = sp.c1[r - sp.lo], b = sp.c2[r - sp.lo];
    if (a == b) continue;
    std::vector<PointId> seg;
    for (int c = a; c <= b; ++c) seg.push_back(*g.at({static_cast<int>(r), c}));
    ends.insert(seg.front());
    ends.insert(seg.back());
    want.push_back(std::move(seg));
  }
  if (f.row_count() != want.size() || !family_valid(f)) return false;
  std::set<PointId> bound(ends);
  for (std::size_t r = 0; r < want.size(); ++r) {
    if (f.row_line(r) != Line::from(want[r])) return false;
  }
  bound.insert(want.front().begin(), want.front().end());
  bound.insert(want.back().begin(), want.back().end());
  return boundary_ring(f).member_set() == std::vector<PointId>(bound.begin(), bound.end());
}

}  // namespace

// Two seriating lines over rows lo..hi, t1 left of t2 on every row, or
// sharing a single point on the first or last row of the range.
Partial th2_7(const Context& ctx) {
  auto items = grid_items(ctx.b);
  return run_items(ctx, items.size(), [&](std::size_t i, Partial& out) {
    auto [k, m] = items[i];
    LineFamily g = LineFamily::grid(k, m);
    std::vector<std::pair<int, int>> apart;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) apart.emplace_back(a, b);
    }
    for (std::size_t lo = 0; lo < g.row_count(); ++lo) {
      for (std::size_t hi = lo + 1; hi < g.row_count(); ++hi) {
        std::size_t len = hi - lo + 1;
        // touch: -1 none, 0 shared point on the first row, 1 on the last.
        for (int touch = -1; touch <= 1; ++touch) {
          if (touch >= 0 && len < 3) continue;
          std::size_t shared_row = touch == 0 ? 0 : len - 1;
          std::vector<std::size_t> digit(len, 0);
          std::vector<std::size_t> base(len, apart.size());
          if (touch >= 0) base[shared_row] = static_cast<std::size_t>(m);
          for (;;) {
            SeriatingPair sp{lo, hi, std::vector<int>(len), std::vector<int>(len)};
            for (std::size_t r = 0; r < len; ++r) {
              if (touch >= 0 && r == shared_row) {
                sp.c1[r] = sp.c2[r] = static_cast<int>(digit[r]);
              } else {
                sp.c1[r] = apart[digit[r]].first;
                sp.c2[r] = apart[digit[r]].second;
              }
            }
            ++out.instances;
            if (!bounded_family_ok(g, sp)) {
              Key key{k, m, static_cast<long long>(lo), static_cast<long long>(hi)};
              key.insert(key.end(), sp.c1.begin(), sp.c1.end());
              key.insert(key.end(), sp.c2.begin(), sp.c2.end());
              out.refute(key, [&] { return generic("Th2.7", g, ctx.sem); });
            }
            std::size_t d = 0;
            while (d < len && ++digit[d] == base[d]) digit[d++] = 0;
            if (d == len) break;
          }
        }
      }
    }
  });
}

namespace {

// Undirected row-continuous (or free) paths of 3..max_path points starting at
// `start`; each path is reported once, from its smaller end.
template <class F>
void paths_from(const Context& ctx, int rows, int cols, Coord start, PathMode mode, Partial& out, F&& visit) {
  std::vector<Coord> path{start};
  std::vector<char> used(static_cast<std::size_t>(rows * cols), 0);
  auto idx = [&](Coord c) { return static_cast<std::size_t>(c.r * cols + c.c); };
  used[idx(start)] = 1;
  auto rec = [&](auto& self) -> void {
    if (path.size() >= 3 && start < path.back()) {
      if (out.instances > ctx.ceiling) throw Error(Errc::bounds_too_large, "path enumeration passed the instance ceiling");
      visit(path);
    }
    if (static_cast<int>(path.size()) >= ctx.b.max_path) return;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        Coord n{r, c};
        if (used[idx(n)] || !step_ok(path.back(), n, mode)) continue;
        used[idx(n)] = 1;
        path.push_back(n);
        self(self);
        path.pop_back();
        used[idx(n)] = 0;
      }
    }
  };
  rec(rec);
}

Key path_key(const std::vector<Coord>& p) {
  Key k{static_cast<long long>(p.size())};
  for (Coord c : p) {
    k.push_back(c.r);
    k.push_back(c.c);
  }
  return k;
}

ordered_json row_skip_body(const LineFamily& g, const std::vector<Coord>& p, std::size_t lo, std::size_t skip, std::size_t hi,
                           Semantics sem) {
  ModelFile m = family_model(g);
  std::vector<PointId> ids;
  for (Coord c : p) ids.push_back(*g.at(c));
  m.lines.push_back({"p", names_of(ids)});
  auto on_row = [&](std::size_t r) {
    for (PointId x : ids) {
      if (static_cast<std::size_t>(g.locate(x)->r) == r) return point_name(x.value);
    }
    return std::string();
  };
  Line l = Line::from(ids);
  std::string stmt = "[S2!(x) & L(" + point_name(l.front().value) + "," + point_name(l.back().value) + ";p) & [" + on_row(lo) +
                     " -> p] & [" + on_row(hi) + " -> p] & [" + on_row(lo) + " -> x^0] & [" + on_row(hi) +
                     " -> x^2]] => ~[x^1 -> [a - p]]";
  return counterexample_body(m, stmt,
                             {{"x^0", names_of(g.rows()[lo])},
                              {"x^1", names_of(g.rows()[skip])},
                              {"x^2", names_of(g.rows()[hi])},
                              {"a", names_of(subsumed(g))}},
                             sem);
}

std::size_t dp_min_segments(const std::vector<Coord>& p) {
  std::size_t n = p.size();
  auto valid = [&](std::size_t i, std::size_t j) {
    bool same = true, mono = true;
    int dir = p[i + 1].r - p[i].r;
    for (std::size_t k = i + 1; k <= j; ++k) {
      same = same && p[k].r == p[i].r;
      mono = mono && p[k].r - p[k - 1].r == dir && (dir == 1 || dir == -1);
    }
    return same || mono;
  };
  std::vector<std::size_t> best(n, n + 1);
  best[0] = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (best[i] + 1 < best[j] && valid(i, j)) best[j] = best[i] + 1;
    }
  }
  return best[n - 1];
}

}  // namespace

Partial th2_8(const Context& ctx) {
  int rows = ctx.b.rows, cols = ctx.b.cols;
  LineFamily g = LineFamily::grid(std::max(rows, 2), std::max(cols, 2));
  bool free = ctx.sem == Semantics::free;
  PathMode mode = free ? PathMode::free : PathMode::row_continuous;
  return run_items(ctx, static_cast<std::size_t>(rows * cols), [&](std::size_t i, Partial& out) {
    Coord start{static_cast<int>(i) / cols, static_cast<int>(i) % cols};
    paths_from(ctx, rows, cols, start, mode, out, [&](const std::vector<Coord>& p) {
      ++out.instances;
      std::vector<std::size_t> touched;
      if (free) {
        std::set<std::size_t> s;
        for (Coord c : p) s.insert(static_cast<std::size_t>(c.r));
        touched.assign(s.begin(), s.end());
      } else {
        touched = crossing_rows(GridPath{p, mode}, g);
      }
      for (std::size_t k = 1; k < touched.size(); ++k) {
        if (touched[k] == touched[k - 1] + 1) continue;
        std::size_t lo = touched[k - 1], hi = touched[k];
        out.refute(path_key(p), [&] { return row_skip_body(g, p, lo, lo + 1, hi, ctx.sem); });
        break;
      }
    });
  });
}

Partial th2_9(const Context& ctx) {
  int rows = ctx.b.rows, cols = ctx.b.cols;
  LineFamily g = LineFamily::grid(std::max(rows, 2), std::max(cols, 2));
  const std::size_t dp_limit = 8;
  return run_items(ctx, static_cast<std::size_t>(rows * cols), [&](std::size_t i, Partial& out) {
    Coord start{static_cast<int>(i) / cols, static_cast<int>(i) % cols};
    paths_from(ctx, rows, cols, start, PathMode::row_continuous, out, [&](const std::vector<Coord>& p) {
      ++out.instances;
      std::vector<SegmentClass> segs = catenate(GridPath{p, PathMode::row_continuous}, g);
      bool ok = !segs.empty() && segs.front().from == 0 && segs.back().to + 1 == p.size();
      for (std::size_t k = 0; ok && k < segs.size(); ++k) {
        const SegmentClass& s = segs[k];
        ok = s.run.size() >= 2 && std::equal(s.run.begin(), s.run.end(), p.begin() + static_cast<std::ptrdiff_t>(s.from)) &&
             s.run.size() == s.to - s.from + 1;
        if (k > 0) ok = ok && s.from == segs[k - 1].to && !(s.kind == SegmentKind::within_row && segs[k - 1].kind == SegmentKind::within_row);
        if (!ok) break;
        if (s.kind == SegmentKind::within_row) {
          ok = std::all_of(s.run.begin(), s.run.end(), [&](Coord c) { return c.r == s.run.front().r; });
        } else {
          std::vector<PointId> ids;
          for (Coord c : s.run) ids.push_back(*g.at(c));
          ok = is_seriating(ids, g);
        }
      }
      if (ok && p.size() <= dp_limit) ok = dp_min_segments(p) == segs.size();
      if (!ok) {
        out.refute(path_key(p), [&] {
          ModelFile m = family_model(g);
          std::vector<PointId> ids;
          for (Coord c : p) ids.push_back(*g.at(c));
          m.lines.push_back({"p", names_of(ids)});
          return counterexample_body(m, lookup("Th2.9").statement, {}, ctx.sem);
        });
      }
    });
  });
}

}  // namespace seriate::check::detail
