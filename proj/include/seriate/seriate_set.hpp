#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seriate/core.hpp"

namespace seriate {

// A member object as seen by the validator: its dimension and the atoms
// (Dimension-0 parts) it is made of.
struct Member {
  int dimension = 0;
  std::vector<std::uint32_t> atoms;  // sorted

  static Member point(PointId p) { return {0, {p.value}}; }
  static Member line(const Line& l);

  friend bool operator==(const Member&, const Member&) = default;
};

// One set of a decomposition: indices into the parent's member list, plus the
// positions (in that list) of its two E objects.
struct Piece {
  std::vector<std::size_t> members;
  std::size_t e1 = 0;
  std::size_t e2 = 0;
};

struct SeriateCandidate {
  std::vector<Member> members;
  std::size_t e1 = 0;
  std::size_t e2 = 0;
  std::optional<std::vector<Piece>> witness;

  // Members in sequence order with E objects at both ends.
  static SeriateCandidate from_points(const std::vector<PointId>& seq);
  static SeriateCandidate from_lines(const std::vector<Line>& rows);
};

enum class SeriateMode { strict, relaxed };

struct Decomposition {
  std::size_t i_object = 0;
  std::vector<Piece> pieces;
};

struct ValidationReport {
  bool valid = false;
  std::string failed_clause;           // "", "a", "count", "e-pair", "i".."v", "sub"
  std::optional<std::size_t> failed_at;  // I object with no admissible decomposition
  std::vector<Decomposition> decompositions;
};

// Clause (b)(i)-(v) for a proposed decomposition of `cand` at I object `t`.
// Returns the first failing clause name, or empty when all hold.
std::string check_decomposition(const SeriateCandidate& cand, std::size_t t, const std::vector<Piece>& pieces);

// Throws Errc::dimension_mismatch when members differ in dimension.
ValidationReport validate_seriate(const SeriateCandidate& cand, SeriateMode mode);

}  // namespace seriate
