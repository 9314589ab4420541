// Dimension-1 theorems over canonical lines and rings on labels 0..n-1.

#include <algorithm>
#include <array>
#include <numeric>

#include "check_detail.hpp"
#include "seriate/seriate_set.hpp"

namespace seriate::check::detail {

using nlohmann::ordered_json;

namespace {

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

double choose(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

std::string nm(PointId p) { return point_name(p.value); }

std::vector<PointId> labels(int n) {
  std::vector<PointId> v;
  for (int i = 0; i < n; ++i) v.push_back(PointId{static_cast<std::uint32_t>(i)});
  return v;
}

ModelFile line_model(const Line& l) {
  ModelFile m;
  m.points = names_of(labels(static_cast<int>(l.size())));
  m.lines.push_back({"x", names_of({l.points().begin(), l.points().end()})});
  return m;
}

ModelFile ring_model(const Ring& r) {
  ModelFile m;
  m.points = names_of(labels(static_cast<int>(r.size())));
  m.rings.push_back({"r", names_of({r.points().begin(), r.points().end()})});
  return m;
}

Key line_key(const Line& l, std::initializer_list<long long> extra) {
  Key k{static_cast<long long>(l.size())};
  for (PointId p : l.points()) k.push_back(p.value);
  k.insert(k.end(), extra);
  return k;
}

Key ring_key(const Ring& r, std::initializer_list<long long> extra) {
  Key k{static_cast<long long>(r.size())};
  for (PointId p : r.points()) k.push_back(p.value);
  k.insert(k.end(), extra);
  return k;
}

// Work items are (n, first point); each walks the orderings of the rest.
struct LineItem {
  int n;
  std::uint32_t first;
};

std::vector<LineItem> line_items(int max_points) {
  std::vector<LineItem> out;
  for (int n = 3; n <= max_points; ++n) {
    for (int f = 0; f < n; ++f) out.push_back({n, static_cast<std::uint32_t>(f)});
  }
  return out;
}

template <class F>
void lines_of(const LineItem& it, F&& visit) {
  std::vector<std::uint32_t> rest;
  for (int i = 0; i < it.n; ++i) {
    if (static_cast<std::uint32_t>(i) != it.first) rest.push_back(i);
  }
  do {
    if (it.first > rest.back()) continue;
    std::vector<PointId> seq{PointId{it.first}};
    for (std::uint32_t x : rest) seq.push_back(PointId{x});
    visit(Line::from(std::move(seq)));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

struct RingItem {
  int m;
  std::uint32_t second;
};

std::vector<RingItem> ring_items(int max_points) {
  std::vector<RingItem> out;
  for (int m = 4; m <= max_points; ++m) {
    for (int s = 1; s < m; ++s) out.push_back({m, static_cast<std::uint32_t>(s)});
  }
  return out;
}

template <class F>
void rings_of(const RingItem& it, F&& visit) {
  std::vector<std::uint32_t> rest;
  for (int i = 1; i < it.m; ++i) {
    if (static_cast<std::uint32_t>(i) != it.second) rest.push_back(i);
  }
  do {
    if (it.second > rest.back()) continue;
    std::vector<PointId> cyc{PointId{0}, PointId{it.second}};
    for (std::uint32_t x : rest) cyc.push_back(PointId{x});
    visit(Ring::from(std::move(cyc)));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

double line_count(int max_points) {
  double t = 0;
  for (int n = 3; n <= max_points; ++n) t += factorial(n) / 2;
  return t;
}

double ring_count(int m) { return factorial(m - 1) / 2; }

bool betw(const Context& c, const Line& l, PointId a, PointId b, PointId x) {
  return c.sem == Semantics::free ? true : between(l, a, b, x);
}

template <class PerLine>
Partial over_lines(const Context& ctx, double per_line, PerLine&& per) {
  guard_estimate(ctx, line_count(ctx.b.max_points) * per_line);
  std::vector<LineItem> items = line_items(ctx.b.max_points);
  return run_items(ctx, items.size(), [&](std::size_t i, Partial& out) {
    lines_of(items[i], [&](const Line& l) { per(l, out); });
  });
}

template <class PerRing>
Partial over_rings(const Context& ctx, double per_ring, PerRing&& per) {
  double total = 0;
  for (int m = 4; m <= ctx.b.max_points; ++m) total += ring_count(m) * per_ring;
  guard_estimate(ctx, total);
  std::vector<RingItem> items = ring_items(ctx.b.max_points);
  return run_items(ctx, items.size(), [&](std::size_t i, Partial& out) {
    rings_of(items[i], [&](const Ring& r) { per(r, out); });
  });
}

ordered_json generic(const std::string& id, const ModelFile& m, Semantics sem) {
  return counterexample_body(m, lookup(id).statement, {}, sem);
}

}  // namespace

Partial th1_1(const Context& ctx) {
  return over_lines(ctx, ctx.b.max_points, [&](const Line& l, Partial& out) {
    bool valid = validate_seriate(SeriateCandidate::from_points({l.points().begin(), l.points().end()}), SeriateMode::strict).valid;
    for (std::size_t i = 1; i + 1 < l.size(); ++i) {
      ++out.instances;
      PointId p = l.points()[i];
      auto [h1, h2] = split(l, p);
      bool ok = valid && concat(h1, h2) == l && concat(h2, h1) == l;
      if (!ok) out.refute(line_key(l, {static_cast<long long>(i)}), [&] { return generic("Th1.1", line_model(l), ctx.sem); });
    }
  });
}

Partial th1_2(const Context& ctx) {
  return over_lines(ctx, ctx.b.max_points, [&](const Line& l, Partial& out) {
    for (std::size_t i = 1; i + 1 < l.size(); ++i) {
      ++out.instances;
      PointId p = l.points()[i];
      auto [h1, h2] = split(l, p);
      std::vector<PointId> a = h1.member_set(), b = h2.member_set(), common, all;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
      bool ok = common == std::vector<PointId>{p} && all == l.member_set() && h1.is_end(p) && h2.is_end(p);
      for (const Line& h : {h1, h2}) {
        ok = ok && validate_seriate(SeriateCandidate::from_points({h.points().begin(), h.points().end()}), SeriateMode::relaxed).valid;
      }
      ok = ok && concat(h1, h2) == l;
      if (!ok) out.refute(line_key(l, {static_cast<long long>(i)}), [&] { return generic("Th1.2", line_model(l), ctx.sem); });
    }
  });
}

Partial th1_3(const Context& ctx) {
  int n = ctx.b.max_points;
  return over_lines(ctx, choose(n, 2), [&](const Line& l, Partial& out) {
    for (std::size_t i = 1; i + 1 < l.size(); ++i) {
      for (std::size_t j = i + 1; j + 1 < l.size(); ++j) {
        ++out.instances;
        PointId p = l.points()[i], q = l.points()[j];
        auto parts = split3(l, p, q);
        auto again = split3(l, q, p);
        std::vector<PointId> all;
        for (const Line& x : parts) all.insert(all.end(), x.points().begin(), x.points().end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        auto meet = [](const Line& x, const Line& y) {
          std::vector<PointId> a = x.member_set(), b = y.member_set(), c;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
          return c;
        };
        bool ok = parts == again && all == l.member_set() && parts[1] == interval(l, p, q) &&
                  meet(parts[0], parts[1]) == std::vector<PointId>{p} && meet(parts[1], parts[2]) == std::vector<PointId>{q} &&
                  meet(parts[0], parts[2]).empty();
        if (!ok) {
          out.refute(line_key(l, {static_cast<long long>(i), static_cast<long long>(j)}),
                     [&] { return generic("Th1.3", line_model(l), ctx.sem); });
        }
      }
    }
  });
}

Partial th1_4(const Context& ctx) {
  return over_lines(ctx, ctx.b.max_points, [&](const Line& l, Partial& out) {
    for (std::size_t i = 1; i + 1 < l.size(); ++i) {
      ++out.instances;
      PointId c = l.points()[i];
      if (betw(ctx, l, l.front(), c, l.back())) continue;
      out.refute(line_key(l, {static_cast<long long>(i)}), [&] {
        std::string a = nm(l.front()), b = nm(l.back()), m = nm(c);
        return counterexample_body(line_model(l),
                                   "[L(" + a + "," + b + ";x) & [" + m + " -> x] & ~[" + m + " = [" + a + " | " + b + "]]] => " + a +
                                       "/" + m + "/" + b + "(x)",
                                   {}, ctx.sem);
      });
    }
  });
}

namespace {

// Unordered triples by id; calls per(a, b, c, relations) where relations are
// b-middle, a-middle, c-middle.
template <class F>
void triples(const Context& ctx, const Line& l, F&& per) {
  std::vector<PointId> ms = l.member_set();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      for (std::size_t k = j + 1; k < ms.size(); ++k) {
        PointId a = ms[i], b = ms[j], c = ms[k];
        std::array<bool, 3> rel{betw(ctx, l, a, b, c), betw(ctx, l, b, a, c), betw(ctx, l, a, c, b)};
        per(a, b, c, rel, Key{static_cast<long long>(i), static_cast<long long>(j), static_cast<long long>(k)});
      }
    }
  }
}

Key join(Key a, const Key& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string head(const Line& l) { return "L(" + nm(l.front()) + "," + nm(l.back()) + ";x)"; }

}  // namespace

Partial th1_5(const Context& ctx) {
  int n = ctx.b.max_points;
  return over_lines(ctx, choose(n, 3), [&](const Line& l, Partial& out) {
    triples(ctx, l, [&](PointId a, PointId b, PointId c, const std::array<bool, 3>& rel, const Key& k) {
      ++out.instances;
      if (rel[0] || rel[1] || rel[2]) return;
      out.refute(join(line_key(l, {}), k), [&] {
        std::string h = nm(a), j = nm(b), kk = nm(c);
        return counterexample_body(line_model(l),
                                   "[" + head(l) + " & [[" + h + " & " + j + " & " + kk + "] -> x]] => [" + h + "/" + j + "/" + kk +
                                       "(x) | " + j + "/" + h + "/" + kk + "(x) | " + h + "/" + kk + "/" + j + "(x)]",
                                   {}, ctx.sem);
      });
    });
  });
}

Partial th1_6(const Context& ctx) {
  int n = ctx.b.max_points;
  return over_lines(ctx, choose(n, 3), [&](const Line& l, Partial& out) {
    triples(ctx, l, [&](PointId a, PointId b, PointId c, const std::array<bool, 3>& rel, const Key& k) {
      ++out.instances;
      if (rel[0] + rel[1] + rel[2] <= 1) return;
      out.refute(join(line_key(l, {}), k), [&] {
        // Name the triple so that H/J/K is the first relation that holds.
        PointId h = a, j = b, kk = c;
        if (!rel[0]) {
          if (rel[1]) {
            h = b, j = a, kk = c;
          } else {
            h = a, j = c, kk = b;
          }
        }
        std::string H = nm(h), J = nm(j), K = nm(kk);
        return counterexample_body(line_model(l),
                                   "[" + head(l) + " & " + H + "/" + J + "/" + K + "(x)] => [~" + J + "/" + H + "/" + K + "(x) & ~" + H +
                                       "/" + K + "/" + J + "(x)]",
                                   {}, ctx.sem);
      });
    });
  });
}

Partial th1_7(const Context& ctx) {
  int n = ctx.b.max_points;
  return over_lines(ctx, 2 * choose(n, 2), [&](const Line& l, Partial& out) {
    std::vector<PointId> ms = l.member_set();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        for (int e = 0; e < 2; ++e) {
          PointId end = e == 0 ? l.front() : l.back();
          if (end == ms[i] || end == ms[j]) continue;
          ++out.instances;
          if (!betw(ctx, l, ms[i], end, ms[j])) continue;
          out.refute(line_key(l, {static_cast<long long>(i), static_cast<long long>(j), e}), [&] {
            std::string P = nm(ms[i]), Q = nm(ms[j]), E = nm(end);
            return counterexample_body(line_model(l), "[" + head(l) + " & [[" + P + " & " + Q + "] -> x]] => ~" + P + "/" + E + "/" + Q + "(x)",
                                       {}, ctx.sem);
          });
        }
      }
    }
  });
}

Partial th1_8(const Context& ctx) {
  int n = ctx.b.max_points;
  return over_rings(ctx, choose(n, 2), [&](const Ring& r, Partial& out) {
    std::vector<PointId> ms = r.member_set();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        ++out.instances;
        PointId p = ms[i], q = ms[j];
        auto [x, y] = ring_rechord(r, p, q);
        std::vector<PointId> a = x.member_set(), b = y.member_set(), common, all;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
        std::vector<PointId> ends{std::min(p, q), std::max(p, q)};
        bool ok = common == ends && all == ms && x.is_end(p) && x.is_end(q) && y.is_end(p) && y.is_end(q) &&
                  ring_from_lines(x, y) == r;
        if (!ok) out.refute(ring_key(r, {static_cast<long long>(i), static_cast<long long>(j)}), [&] { return generic("Th1.8", ring_model(r), ctx.sem); });
      }
    }
  });
}

Partial th1_9(const Context& ctx) {
  int n = ctx.b.max_points;
  return over_rings(ctx, choose(n, 3), [&](const Ring& r, Partial& out) {
    std::vector<PointId> ms = r.member_set();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        for (std::size_t k = j + 1; k < ms.size(); ++k) {
          ++out.instances;
          PointId a = ms[i], b = ms[j], c = ms[k];
          if (between(r, a, b, c) && between(r, b, a, c) && between(r, a, c, b)) continue;
          out.refute(ring_key(r, {static_cast<long long>(i), static_cast<long long>(j), static_cast<long long>(k)}), [&] {
            std::string H = nm(a), J = nm(b), K = nm(c);
            return counterexample_body(ring_model(r),
                                       "RING(" + H + "," + J + "," + K + ";r) => [" + H + "/" + J + "/" + K + "(r) & " + J + "/" + H + "/" + K +
                                           "(r) & " + H + "/" + K + "/" + J + "(r)]",
                                       {}, ctx.sem);
          });
        }
      }
    }
  });
}

// A ring embeds in a line when every betweenness of every ring triple also
// holds on the line for the image points. Lines of one length are all alike,
// so the line is fixed to 0..n-1 and rings are placed on every m-subset.
Partial th1_10(const Context& ctx) {
  int N = ctx.b.max_points;
  double total = 0;
  for (int n = 4; n <= N; ++n) {
    for (int m = 4; m <= n; ++m) total += choose(n, m) * ring_count(m);
  }
  guard_estimate(ctx, total);
  std::vector<std::pair<int, int>> items;
  for (int n = 4; n <= N; ++n) {
    for (int m = 4; m <= n; ++m) items.emplace_back(n, m);
  }
  return run_items(ctx, items.size(), [&](std::size_t idx, Partial& out) {
    auto [n, m] = items[idx];
    Line l = Line::from(labels(n));
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    std::vector<std::vector<PointId>> subsets;
    do {
      std::vector<PointId> s;
      for (int i = 0; i < n; ++i) {
        if (pick[i]) s.push_back(PointId{static_cast<std::uint32_t>(i)});
      }
      subsets.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(subsets.begin(), subsets.end());
    for (int second = 1; second < m; ++second) {
      rings_of({m, static_cast<std::uint32_t>(second)}, [&](const Ring& r) {
        for (std::size_t si = 0; si < subsets.size(); ++si) {
          const std::vector<PointId>& s = subsets[si];
          ++out.instances;
          auto img = [&](PointId p) { return s[p.value]; };
          bool broken = false;
          for (int a = 0; a < m && !broken; ++a) {
            for (int b = a + 1; b < m && !broken; ++b) {
              for (int c = b + 1; c < m && !broken; ++c) {
                PointId A{static_cast<std::uint32_t>(a)}, B{static_cast<std::uint32_t>(b)}, C{static_cast<std::uint32_t>(c)};
                bool held = (!between(r, A, B, C) || betw(ctx, l, img(A), img(B), img(C))) &&
                            (!between(r, B, A, C) || betw(ctx, l, img(B), img(A), img(C))) &&
                            (!between(r, A, C, B) || betw(ctx, l, img(A), img(C), img(B)));
                broken = !held;
              }
            }
          }
          if (broken) continue;
          Key k{n};
          for (PointId p : r.points()) k.push_back(img(p).value);
          out.refute(std::move(k), [&] {
            ModelFile mf = line_model(l);
            std::vector<PointId> image;
            for (PointId p : r.member_set()) image.push_back(img(p));
            std::string H = nm(img(r.points()[0])), J = nm(img(r.points()[1])), K = nm(img(r.points()[2]));
            return counterexample_body(mf,
                                       "[" + head(l) + " & [r -> x]] => ~[" + H + "/" + J + "/" + K + "(x) & " + J + "/" + H + "/" + K +
                                           "(x) & " + H + "/" + K + "/" + J + "(x)]",
                                       {{"r", names_of(image)}}, ctx.sem);
          });
        }
      });
    }
  });
}

}  // namespace seriate::check::detail
