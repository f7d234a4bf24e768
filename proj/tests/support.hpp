#pragma once

#include <algorithm>
#include <functional>
#include <set>

#include <doctest.h>

#include "fernhex/error.hpp"
#include "fernhex/lattice.hpp"

namespace fernhex::testing {

// Plain backtracking over the first uncovered cell. Slow, but shares no code
// with the engines, which is the point.
inline long brute_force_tilings(const TriRegion &r) {
  std::set<UnitTriangle> left(r.cells().begin(), r.cells().end());
  auto neighbours = [](const UnitTriangle &t) {
    std::vector<UnitTriangle> out;
    if (t.is_up()) {
      out = {UnitTriangle::down(t.u, t.v), UnitTriangle::down(t.u - 1, t.v), UnitTriangle::down(t.u, t.v - 1)};
    } else {
      out = {UnitTriangle::up(t.u, t.v), UnitTriangle::up(t.u + 1, t.v), UnitTriangle::up(t.u, t.v + 1)};
    }
    return out;
  };
  std::function<long()> go = [&]() -> long {
    if (left.empty()) return 1;
    const UnitTriangle t = *left.begin();
    long total = 0;
    left.erase(t);
    for (const auto &n : neighbours(t)) {
      if (left.erase(n)) {
        total += go();
        left.insert(n);
      }
    }
    left.insert(t);
    return total;
  };
  return go();
}

template <class F>
void require_kind(ErrorKind kind, F &&f) {
  try {
    f();
    FAIL("expected " << to_string(kind));
  } catch (const Error &e) {
    CHECK_MESSAGE(e.kind() == kind, e.what());
  }
}

} // namespace fernhex::testing
