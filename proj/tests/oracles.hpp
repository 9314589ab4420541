#pragma once
// Independent reference implementations used to cross-check the library.
// Nothing here calls into the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

// ---- seriate sets by exhaustive search over set decompositions ----------

// A set is a bitmask over member positions; `atoms` gives each position's
// point label. Sub-sets are searched as arbitrary covers, not ordered splits.
class SeriateBrute {
 public:
  explicit SeriateBrute(std::vector<int> atoms) : atoms_(std::move(atoms)) {}

  bool strict() {
    int n = static_cast<int>(atoms_.size());
    if (n < 3) return false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (atoms_[i] == atoms_[j]) return false;
    return valid((1u << n) - 1, 0, n - 1);
  }

 private:
  struct Piece {
    unsigned mask;
    int e1, e2;
  };

  // Relaxed validity of the set `mask` with end positions e1, e2.
  bool valid(unsigned mask, int e1, int e2) {
    auto key = std::make_tuple(mask, std::min(e1, e2), std::max(e1, e2));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = true;
    for (int t = 0; t < 32 && ok; ++t) {
      if (!(mask >> t & 1u) || t == e1 || t == e2) continue;
      ok = decomposable(mask, e1, e2, t);
    }
    memo_[key] = ok;
    return ok;
  }

  bool decomposable(unsigned mask, int e1, int e2, int t) {
    std::vector<Piece> pieces;
    return search(mask, e1, e2, t, pieces, 0);
  }

  // Cover `mask` by pieces; members shared between pieces must be ends of
  // every piece holding them.
  bool search(unsigned mask, int e1, int e2, int t, std::vector<Piece>& pieces, unsigned covered) {
    if (covered == mask) return accept(e1, e2, t, pieces);
    if (pieces.size() + 1 > static_cast<std::size_t>(__builtin_popcount(mask))) return false;
    int first = __builtin_ctz(mask & ~covered);
    // Every sub-mask of `mask` holding `first`, with at least two members.
    for (unsigned sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub >> first & 1u) || __builtin_popcount(sub) < 2) continue;
      for (int a = 0; a < 32; ++a) {
        if (!(sub >> a & 1u)) continue;
        for (int b = a + 1; b < 32; ++b) {
          if (!(sub >> b & 1u)) continue;
          Piece p{sub, a, b};
          if (!compatible(p, pieces)) continue;
          pieces.push_back(p);
          if (search(mask, e1, e2, t, pieces, covered | sub)) return true;
          pieces.pop_back();
        }
      }
    }
    return false;
  }

  static bool is_end(const Piece& p, int m) { return m == p.e1 || m == p.e2; }

  static bool compatible(const Piece& p, const std::vector<Piece>& pieces) {
    for (const Piece& q : pieces) {
      unsigned common = p.mask & q.mask;
      for (int m = 0; m < 32; ++m) {
        if ((common >> m & 1u) && (!is_end(p, m) || !is_end(q, m))) return false;
      }
    }
    return true;
  }

  bool accept(int e1, int e2, int t, const std::vector<Piece>& pieces) {
    std::map<int, int> holders;  // end object -> pieces holding it
    for (const Piece& p : pieces) {
      for (int m = 0; m < 32; ++m) {
        if (p.mask >> m & 1u) ++holders[m];
      }
    }
    std::vector<int> outer;
    bool t_inner = false;
    for (const Piece& p : pieces) {
      for (int e : {p.e1, p.e2}) {
        int h = holders[e];
        if (h == 1) {
          if (std::find(outer.begin(), outer.end(), e) == outer.end()) outer.push_back(e);
        } else if (h != 2) {
          return false;
        } else if (e == t) {
          t_inner = true;
        }
      }
    }
    std::sort(outer.begin(), outer.end());
    if (outer != std::vector<int>{std::min(e1, e2), std::max(e1, e2)} || !t_inner) return false;
    // No proper sub-family closed on its ends.
    std::size_t k = pieces.size();
    for (unsigned fam = 1; fam + 1 < (1u << k); ++fam) {
      bool closed = true;
      for (std::size_t i = 0; i < k && closed; ++i) {
        if (!(fam >> i & 1u)) continue;
        for (int e : {pieces[i].e1, pieces[i].e2}) {
          bool shared = false;
          for (std::size_t j = 0; j < k; ++j) {
            if (j != i && (fam >> j & 1u) && (pieces[j].mask >> e & 1u)) shared = true;
          }
          if (!shared) closed = false;
        }
      }
      if (closed) return false;
    }
    for (const Piece& p : pieces) {
      if (__builtin_popcount(p.mask) > 2 && !valid(p.mask, p.e1, p.e2)) return false;
    }
    return true;
  }

  std::vector<int> atoms_;
  std::map<std::tuple<unsigned, int, int>, bool> memo_;
};

// ---- grid partitions by brute labelling ---------------------------------

inline bool region_ok(int rows, int cols, const std::vector<int>& lab, int l) {
  int start = -1, size = 0;
  for (int i = 0; i < rows * cols; ++i) {
    if (lab[i] == l) {
      ++size;
      if (start < 0) start = i;
    }
  }
  if (start < 0) return false;
  std::vector<int> stack{start};
  std::vector<char> seen(lab.size(), 0);
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    ++reached;
    int r = i / cols, c = i % cols;
    int nb[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
    for (auto& n : nb) {
      if (n[0] < 0 || n[1] < 0 || n[0] >= rows || n[1] >= cols) continue;
      int j = n[0] * cols + n[1];
      if (lab[j] == l && !seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  return reached == size;
}

// Counts (labelled, first-occurrence canonical, canonical with every region
// 4-connected) over all k^(rows*cols) labellings using exactly k labels.
struct PartitionCounts {
  std::uint64_t labelled = 0, canonical = 0, connected = 0;
};

inline PartitionCounts count_partitions(int rows, int cols, int k) {
  PartitionCounts out;
  int n = rows * cols;
  std::vector<int> lab(n, 0);
  for (;;) {
    std::vector<int> seen_at(k, -1);
    for (int i = 0; i < n; ++i)
      if (seen_at[lab[i]] < 0) seen_at[lab[i]] = i;
    if (std::all_of(seen_at.begin(), seen_at.end(), [](int x) { return x >= 0; })) {
      ++out.labelled;
      if (std::is_sorted(seen_at.begin(), seen_at.end())) {
        ++out.canonical;
        bool all = true;
        for (int l = 0; l < k && all; ++l) all = region_ok(rows, cols, lab, l);
        if (all) ++out.connected;
      }
    }
    int i = 0;
    while (i < n && ++lab[i] == k) lab[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// ---- minimal catenation by dynamic programming ---------------------------

// A run is usable when its row is constant or steps by exactly one in a
// single direction at every step.
inline bool run_ok(const std::vector<std::pair<int, int>>& p, std::size_t i, std::size_t j) {
  bool flat = true, up = true, down = true;
  for (std::size_t k = i + 1; k <= j; ++k) {
    int d = p[k].first - p[k - 1].first;
    flat = flat && d == 0;
    up = up && d == 1;
    down = down && d == -1;
  }
  return flat || up || down;
}

inline int min_segments(const std::vector<std::pair<int, int>>& p) {
  std::size_t n = p.size();
  std::vector<int> best(n, 1 << 20);
  best[0] = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (run_ok(p, i, j)) best[j] = std::min(best[j], best[i] + 1);
  return best[n - 1];
}

// ---- random formulas over the ASCII grammar -----------------------------

class FormulaGen {
 public:
  explicit FormulaGen(std::uint32_t seed) : rng_(seed) {}

  std::string formula(int depth) {
    int pick = depth <= 0 ? 0 : pick_in(0, 9);
    if (pick <= 3) return atom();
    if (pick == 4) return "~" + formula(depth - 1);
    std::string open[] = {"(", "[", "{"}, close[] = {")", "]", "}"};
    int b = pick_in(0, 2);
    std::string s = formula(depth - 1);
    int len = pick_in(1, 3);
    for (int i = 0; i < len; ++i) {
      std::string op = ops_[static_cast<std::size_t>(pick_in(0, static_cast<int>(ops_.size()) - 1))];
      std::string rhs = formula(depth - 1);
      // Negation may not reach a mapping target through & or |.
      if ((op == "->" || op == "<->") && rhs.find('~') != std::string::npos) rhs = atom();
      s += " " + op + " " + rhs;
    }
    return open[b] + s + close[b];
  }

 private:
  int pick_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string point() {
    std::string s(1, static_cast<char>('A' + pick_in(0, 25)));
    if (pick_in(0, 4) == 0) s += "^" + std::to_string(pick_in(0, 12));
    return s;
  }
  std::string var() {
    std::string s(1, static_cast<char>('a' + pick_in(0, 25)));
    if (pick_in(0, 4) == 0) s += "^" + std::to_string(pick_in(0, 12));
    return s;
  }
  std::string atom() {
    switch (pick_in(0, 7)) {
      case 0: return point();
      case 1: return var();
      case 2: return "L(" + point() + "," + point() + ";" + var() + ")";
      case 3: return "SL(" + point() + "," + point() + ")";
      case 4: return "RING(" + point() + "," + point() + "," + point() + "," + point() + ";" + var() + ")";
      case 5: return point() + "/" + point() + "/" + point() + "(" + var() + ")";
      case 6: return pick_in(0, 1) ? "S2!(" + var() + ")" : "S2!(" + var() + ",L(" + point() + "," + point() + "),L(" + point() + "," + point() + "))";
      default: return pick_in(0, 1) ? "A!(" + var() + ")" : "A!(" + var() + ";_" + var() + ")";
    }
  }

  std::mt19937 rng_;
  std::vector<std::string> ops_{"&", "|", "\\/", "=>", "<=>", "->", "<->", "=", "+", "-"};
};

}  // namespace oracle
