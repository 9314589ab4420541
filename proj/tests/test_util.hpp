#pragma once

#include <optional>

#include "seriate/core.hpp"
#include "seriate/error.hpp"

namespace test {

inline seriate::PointId P(std::uint32_t v) { return seriate::PointId{v}; }

// The library error code thrown by f, if any.
template <class F>
std::optional<seriate::Errc> code_of(F&& f) {
  try {
    f();
  } catch (const seriate::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace test
