#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seriate {

/// Error codes raised by the model, dimension-2 and checker operations.
enum class Errc {
  // core model
  dimension_mismatch,
  stability_violation,
  consistency_violation,
  shared_interior,
  no_shared_endpoint,
  multiple_shared,
  not_interior,
  duplicate_cut,
  not_member,
  not_distinct,
  endpoint_mismatch,
  not_injective,
  too_few_points,
  // transversal semantics
  point_not_subsumed,
  same_row,
  index_out_of_range,
  shared_interior_row,
  no_shared_end_row,
  not_interior_row,
  rows_not_disjoint,
  not_rectangular,
  not_on_boundary,
  not_disjoint,
  cover_failure,
  range_mismatch,
  entangled,
  mode_mismatch,
  invalid_path,
  // lattice semantics
  not_connected,
  not_simply_connected,
  no_common_line,
  multiple_common_lines,
  cell_overlap,
  chord_not_anchored,
  chord_touches_boundary,
  not_separating,
  not_a_cycle_in_area,
  empty_interior,
  no_interior_witness,
  path_not_within,
  not_internally_disjoint,
  disconnected_country,
  empty_country,
  // checker
  bounds_too_large,
  unknown_theorem,
  unsupported_semantics,
};

/// CamelCase name of an error code, as printed in diagnostics.
std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace seriate
