#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seriate/checker.hpp"
#include "seriate/model_file.hpp"

namespace seriate::check::detail {

using Key = std::vector<long long>;

struct Counterexample {
  Key key;
  nlohmann::ordered_json body;
};

// Per-item result; merged in item order so the outcome ignores scheduling.
struct Partial {
  std::uint64_t instances = 0;
  std::optional<Counterexample> cex;

  // body is only built when key beats the current best.
  void refute(Key key, const std::function<nlohmann::ordered_json()>& body);
  void absorb(Partial&& other);
};

struct Context {
  Semantics sem;
  Bounds b;
  unsigned jobs = 1;
  std::uint64_t ceiling = 0;
};

// Runs item(i, out) for i in [0, n) over ctx.jobs threads.
Partial run_items(const Context& ctx, std::size_t n, const std::function<void(std::size_t, Partial&)>& item);

// Throws bounds_too_large when estimate exceeds the ceiling.
void guard_estimate(const Context& ctx, double estimate);

// {"model", "statement", "vars", "semantics"} for re-evaluation through the
// statement language.
nlohmann::ordered_json counterexample_body(const ModelFile& m, const std::string& statement,
                                           const std::vector<std::pair<std::string, std::vector<std::string>>>& vars,
                                           Semantics sem);

std::vector<std::string> names_of(const std::vector<PointId>& pts);

Partial th1_1(const Context&);
Partial th1_2(const Context&);
Partial th1_3(const Context&);
Partial th1_4(const Context&);
Partial th1_5(const Context&);
Partial th1_6(const Context&);
Partial th1_7(const Context&);
Partial th1_8(const Context&);
Partial th1_9(const Context&);
Partial th1_10(const Context&);

Partial th2_1(const Context&);
Partial th2_2(const Context&);
Partial th2_3(const Context&);
Partial th2_4(const Context&);
Partial th2_5(const Context&);
Partial th2_6(const Context&);
Partial th2_7(const Context&);
Partial th2_8(const Context&);
Partial th2_9(const Context&);

Partial th2_10(const Context&);
Partial th2_11(const Context&);
Partial th2_12(const Context&);
Partial th2_13(const Context&);
Partial th2_14(const Context&);
Partial th2_15(const Context&);
Partial five_map(const Context&);

}  // namespace seriate::check::detail
