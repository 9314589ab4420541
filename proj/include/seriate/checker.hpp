#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seriate/core.hpp"

namespace seriate::check {

enum class Semantics { interval, free, row_continuous, lattice4 };

std::string_view to_string(Semantics s) noexcept;
std::optional<Semantics> semantics_from(std::string_view s) noexcept;

// Zero means "use the registry default".
struct Bounds {
  int max_points = 0;
  int rows = 0;
  int cols = 0;
  int max_path = 0;
  int countries = 0;
};

struct TheoremInfo {
  std::string id;
  Semantics semantics;
  std::vector<Semantics> modes;  // accepted semantics, default first
  std::vector<std::string> bound_names;
  std::string description;
  std::string statement;  // ASCII notation
};

const std::vector<TheoremInfo>& registry();
// Throws Errc::unknown_theorem.
const TheoremInfo& lookup(const std::string& id);

Bounds default_bounds(const std::string& id, Semantics s);

struct Options {
  std::optional<Semantics> semantics;
  Bounds bounds;
  unsigned jobs = 1;
  bool timing = false;
  std::uint64_t ceiling = 0;  // 0: SERIATE_INSTANCE_CEILING or 10^8
};

struct Verdict {
  std::string theorem;
  Semantics semantics = Semantics::interval;
  std::vector<std::pair<std::string, int>> bounds;
  bool verified = true;
  std::uint64_t instances = 0;
  std::optional<nlohmann::ordered_json> counterexample;
  std::optional<long long> elapsed_ms;
};

std::uint64_t instance_ceiling();

// Throws Errc::unknown_theorem, unsupported_semantics, bounds_too_large.
Verdict check(const std::string& id, const Options& opt = {});

nlohmann::ordered_json to_json(const Verdict& v);
std::string to_text(const Verdict& v);

// Partitions of a rows x cols cell grid into k countries, looking for one
// whose countries are pairwise line-adjacent. Stops at the first unless
// exhaustive.
struct MapSearch {
  std::uint64_t partitions = 0;
  std::uint64_t complete = 0;
  std::optional<std::vector<int>> first;  // row-major labels 1..k
};

MapSearch map_search(int rows, int cols, int k, bool exhaustive);

// Every canonical line over the labels {0..n-1}, n = 3..max_points.
void enumerate_lines(int max_points, const std::function<void(const Line&)>& visit);
// Every canonical ring over the labels {0..m-1}, m = 4..max_points.
void enumerate_rings(int max_points, const std::function<void(const Ring&)>& visit);

}  // namespace seriate::check
