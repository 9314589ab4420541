#include "seriate/seriate_set.hpp"

#include <algorithm>
#include <map>

namespace seriate {

Member Member::line(const Line& l) {
  Member m{1, {}};
  for (PointId p : l.points()) m.atoms.push_back(p.value);
  std::sort(m.atoms.begin(), m.atoms.end());
  return m;
}

SeriateCandidate SeriateCandidate::from_points(const std::vector<PointId>& seq) {
  SeriateCandidate c;
  for (PointId p : seq) c.members.push_back(Member::point(p));
  c.e1 = 0;
  c.e2 = seq.empty() ? 0 : seq.size() - 1;
  return c;
}

SeriateCandidate SeriateCandidate::from_lines(const std::vector<Line>& rows) {
  SeriateCandidate c;
  for (const Line& l : rows) c.members.push_back(Member::line(l));
  c.e1 = 0;
  c.e2 = rows.empty() ? 0 : rows.size() - 1;
  return c;
}

namespace {

bool share_atom(const Member& a, const Member& b) {
  auto i = a.atoms.begin();
  auto j = b.atoms.begin();
  while (i != a.atoms.end() && j != b.atoms.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

bool clause_a(const std::vector<Member>& ms) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (share_atom(ms[i], ms[j])) return false;
  return true;
}

Piece contiguous(std::size_t from, std::size_t to) {
  Piece p;
  for (std::size_t i = from; i <= to; ++i) p.members.push_back(i);
  p.e1 = from;
  p.e2 = to;
  return p;
}

// Relaxed-mode validity of contiguous runs [i, j] of a candidate whose clause
// (a) already holds, split search only.
class RunValidator {
 public:
  explicit RunValidator(const SeriateCandidate& c) : cand_(c) {}

  bool valid(std::size_t i, std::size_t j) {
    if (j < i + 1) return false;
    if (j == i + 1) return true;
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    SeriateCandidate sub;
    sub.members.assign(cand_.members.begin() + static_cast<std::ptrdiff_t>(i),
                       cand_.members.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    sub.e1 = 0;
    sub.e2 = j - i;
    bool ok = true;
    for (std::size_t k = i + 1; k < j && ok; ++k) {
      ok = valid(i, k) && valid(k, j) &&
           check_decomposition(sub, k - i, {contiguous(0, k - i), contiguous(k - i, j - i)}).empty();
    }
    memo_[key] = ok;
    return ok;
  }

 private:
  const SeriateCandidate& cand_;
  std::map<std::pair<std::size_t, std::size_t>, bool> memo_;
};

// The I object a witness speaks for: the first I object of the candidate that
// is an inner E object of the witness.
std::optional<std::size_t> witness_target(const SeriateCandidate& cand, const std::vector<Piece>& pieces) {
  std::vector<int> ends(cand.members.size(), 0);
  for (const Piece& p : pieces) {
    if (p.e1 < ends.size()) ++ends[p.e1];
    if (p.e2 < ends.size()) ++ends[p.e2];
  }
  for (std::size_t k = 0; k < cand.members.size(); ++k) {
    if (k != cand.e1 && k != cand.e2 && ends[k] >= 2) return k;
  }
  return std::nullopt;
}

bool piece_valid(const SeriateCandidate& cand, const Piece& piece) {
  SeriateCandidate sub;
  sub.members.push_back(cand.members[piece.e1]);
  for (std::size_t m : piece.members) {
    if (m != piece.e1 && m != piece.e2) sub.members.push_back(cand.members[m]);
  }
  sub.members.push_back(cand.members[piece.e2]);
  sub.e1 = 0;
  sub.e2 = sub.members.size() - 1;
  return validate_seriate(sub, SeriateMode::relaxed).valid;
}

}  // namespace

std::string check_decomposition(const SeriateCandidate& cand, std::size_t t, const std::vector<Piece>& pieces) {
  const std::size_t n = cand.members.size();
  std::vector<int> count(n, 0);
  for (const Piece& p : pieces) {
    std::vector<std::size_t> ms = p.members;
    std::sort(ms.begin(), ms.end());
    if (ms.size() < 2 || std::adjacent_find(ms.begin(), ms.end()) != ms.end() || ms.back() >= n) return "i";
    if (p.e1 == p.e2 || !std::binary_search(ms.begin(), ms.end(), p.e1) || !std::binary_search(ms.begin(), ms.end(), p.e2)) return "i";
    for (std::size_t m : ms) ++count[m];
  }
  // (i)
  for (int c : count) {
    if (c == 0) return "i";
  }
  // (ii)
  for (const Piece& p : pieces) {
    for (std::size_t m : p.members) {
      if (count[m] > 1 && m != p.e1 && m != p.e2) return "ii";
    }
  }
  // (iii)
  std::vector<std::size_t> ends;
  for (const Piece& p : pieces) {
    ends.push_back(p.e1);
    ends.push_back(p.e2);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<std::size_t> outer;
  for (std::size_t e : ends) {
    if (count[e] == 1) outer.push_back(e);
  }
  std::vector<std::size_t> want{std::min(cand.e1, cand.e2), std::max(cand.e1, cand.e2)};
  if (outer != want) return "iii";
  // (iv)
  bool t_inner = false;
  for (std::size_t e : ends) {
    if (count[e] == 1) continue;
    if (count[e] != 2) return "iv";
    t_inner = t_inner || e == t;
  }
  if (!t_inner) return "iv";
  // (v): strip sets holding an E object no other remaining set holds; any
  // survivors form a closed sub-family.
  std::vector<bool> alive(pieces.size(), true);
  auto held_elsewhere = [&](std::size_t self, std::size_t m) {
    for (std::size_t q = 0; q < pieces.size(); ++q) {
      if (q == self || !alive[q]) continue;
      const auto& ms = pieces[q].members;
      if (std::find(ms.begin(), ms.end(), m) != ms.end()) return true;
    }
    return false;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < pieces.size(); ++q) {
      if (alive[q] && (!held_elsewhere(q, pieces[q].e1) || !held_elsewhere(q, pieces[q].e2))) {
        alive[q] = false;
        changed = true;
      }
    }
  }
  if (std::find(alive.begin(), alive.end(), true) != alive.end()) return "v";
  return {};
}

ValidationReport validate_seriate(const SeriateCandidate& cand, SeriateMode mode) {
  ValidationReport rep;
  const auto& ms = cand.members;
  if (ms.empty()) {
    rep.failed_clause = "count";
    return rep;
  }
  for (const Member& m : ms) {
    if (m.dimension != ms.front().dimension) throw Error(Errc::dimension_mismatch, "members differ in dimension");
  }
  if (ms.size() < (mode == SeriateMode::strict ? 3u : 2u)) {
    rep.failed_clause = "count";
    return rep;
  }
  if (cand.e1 == cand.e2 || cand.e1 >= ms.size() || cand.e2 >= ms.size()) {
    rep.failed_clause = "e-pair";
    return rep;
  }
  if (!clause_a(ms)) {
    rep.failed_clause = "a";
    return rep;
  }

  std::optional<std::size_t> target;
  if (cand.witness) target = witness_target(cand, *cand.witness);

  RunValidator runs(cand);
  const std::size_t n = ms.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == cand.e1 || k == cand.e2) continue;
    if (target && *target == k) {
      std::string clause = check_decomposition(cand, k, *cand.witness);
      if (clause.empty()) {
        for (const Piece& p : *cand.witness) {
          if (!piece_valid(cand, p)) {
            clause = "sub";
            break;
          }
        }
      }
      if (!clause.empty()) {
        rep.failed_clause = clause;
        rep.failed_at = k;
        return rep;
      }
      rep.decompositions.push_back({k, *cand.witness});
      continue;
    }
    std::vector<Piece> halves{contiguous(0, k), contiguous(k, n - 1)};
    std::string clause = check_decomposition(cand, k, halves);
    if (clause.empty() && !(runs.valid(0, k) && runs.valid(k, n - 1))) clause = "sub";
    if (!clause.empty()) {
      rep.failed_clause = clause;
      rep.failed_at = k;
      return rep;
    }
    rep.decompositions.push_back({k, std::move(halves)});
  }
  rep.valid = true;
  return rep;
}

}  // namespace seriate
