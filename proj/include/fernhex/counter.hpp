#pragma once

// Exact lozenge-tiling counts (perfect matchings of the dual graph).
//
// Three independent engines:
//   FrontierDP      row sweep over boundary profiles, the workhorse
//   Kasteleyn       |det| of a face-signed biadjacency matrix
//   RyserPermanent  inclusion-exclusion permanent, tiny instances only

#include <cstddef>
#include <map>
#include <mutex>
#include <string_view>
#include <vector>

#include "fernhex/bignum.hpp"
#include "fernhex/lattice.hpp"

namespace fernhex {

enum class EngineKind { FrontierDP, Kasteleyn, RyserPermanent, Auto };

std::string_view to_string(EngineKind k);
/// Accepts dp, kasteleyn, ryser, auto. Throws InvalidInput otherwise.
EngineKind parse_engine(std::string_view name);

struct CounterConfig {
  std::size_t dp_width_cap = 22;
  std::size_t ryser_cap = 16;
  /// Auto cross-checks with Kasteleyn up to this many Up cells.
  std::size_t kasteleyn_check_cap = 400;

  /// Defaults, with FERNHEX_DP_WIDTH_CAP applied when set.
  static CounterConfig from_env();
};

/// Number of profile bits the DP needs: umax - umin + 1 over the region.
std::size_t frontier_width(const TriRegion &r);

BigNat count_frontier_dp(const TriRegion &r, const CounterConfig &cfg = CounterConfig::from_env());
BigNat count_kasteleyn(const TriRegion &r);
BigNat count_ryser(const TriRegion &r, const CounterConfig &cfg = CounterConfig::from_env());

/// Kasteleyn signs (+1/-1) for each edge of g, indexed like g.edges.
std::vector<int> kasteleyn_signs(const DualGraph &g);

/// Exact determinant by fraction-free elimination. Row-major n*n input.
BigNat abs_determinant(std::vector<BigNat> m, std::size_t n);

struct CountResult {
  BigNat count;
  /// Engines that produced `count` (all agreed).
  std::vector<EngineKind> engines;
};

/// Auto runs FrontierDP (Kasteleyn if the frontier is too wide) and compares
/// against the other engines when the instance is within their caps.
/// Throws EngineMismatch naming both values.
CountResult count_checked(const TriRegion &r, EngineKind engine = EngineKind::Auto,
                          const CounterConfig &cfg = CounterConfig::from_env());

BigNat count_tilings(const TriRegion &r, EngineKind engine = EngineKind::Auto,
                     const CounterConfig &cfg = CounterConfig::from_env());

/// Memoized Auto counts keyed by cell set. Safe for concurrent use.
class CountCache {
public:
  explicit CountCache(CounterConfig cfg = CounterConfig::from_env()) : cfg_(cfg) {}

  CountResult get(const TriRegion &r);
  std::size_t hits() const;
  std::size_t misses() const;
  /// Every region counted so far with its result, in cell-set order.
  std::vector<std::pair<TriRegion, CountResult>> entries() const;

private:
  CounterConfig cfg_;
  mutable std::mutex mu_;
  std::map<std::vector<UnitTriangle>, CountResult> memo_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

} // namespace fernhex
