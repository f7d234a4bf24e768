#pragma once

// Checks each identity by comparing exact counts with formulas (or counts
// with counts, for the condensation recurrences).

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fernhex/bignum.hpp"
#include "fernhex/counter.hpp"
#include "fernhex/region_builder.hpp"

namespace fernhex {

struct VerificationReport {
  std::string identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  BigRat lhs = 0;
  BigRat rhs = 0;
  bool pass = false;
  /// Instance outside the identity's domain (a fern that does not fit). Not a failure.
  bool skipped = false;
  std::string reason;
  EngineKind engine = EngineKind::Auto;
  double ms = 0;

  nlohmann::ordered_json to_json() const;
};

struct GridConfig {
  std::int64_t max_xyz = 3;
  std::int64_t max_lobe = 2;
  std::int64_t max_k = 4;
  CounterConfig caps = CounterConfig::from_env();
  unsigned jobs = 1;
  /// Adds one to every F-cored hexagon formula value, so the failure path can be exercised.
  bool inject_fault = false;

  /// Throws InvalidInput on negative bounds or zero jobs.
  void validate() const;
};

enum class KuoVariant { C32, W33, SW34, SW35, NW36, NW37 };
std::string_view to_string(KuoVariant v);
/// The variant whose parity precondition (x,y,z) and k satisfy.
KuoVariant kuo_variant_for(std::int64_t x, std::int64_t y, std::int64_t z, std::size_t k);

VerificationReport check_macmahon(std::int64_t a, std::int64_t b, std::int64_t c, CountCache &cache);
VerificationReport check_semihex(const std::vector<std::int64_t> &blocks, CountCache &cache);
VerificationReport check_theorem21(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec,
                                   CountCache &cache, bool inject_fault = false);
/// Throws PreconditionViolated unless x,y,z >= 1 and the parities match the variant.
VerificationReport check_kuo(KuoVariant variant, std::int64_t x, std::int64_t y, std::int64_t z,
                             const FernSpec &spec, CountCache &cache);
/// z = 0, x and y even. Throws PreconditionViolated otherwise.
VerificationReport check_base_case(std::int64_t x, std::int64_t y, const FernSpec &spec, CountCache &cache);
/// x = y (mod 2), z of the other parity, x,y >= 1. The reversed list is the
/// zero-padded one, (0, a_k, ..., a_1) when k is odd.
VerificationReport check_g_identity(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec);
/// Throws PreconditionViolated when x+y+z+2o+2e = 0, DivisionByZero when it is 1.
VerificationReport check_scalar_identity_413(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t o,
                                             std::int64_t e);
VerificationReport check_remark4(const FernSpec &spec, CountCache &cache);
/// theorem21_ratio(x, y, y, spec) over 0 <= x, y <= max_xy equals s_product(spec) everywhere.
VerificationReport check_remark5_constancy(const FernSpec &spec, std::int64_t max_xy);

/// Regions a Kuo check counts, in the order they appear in the identity.
std::vector<TriRegion> kuo_regions(KuoVariant variant, std::int64_t x, std::int64_t y, std::int64_t z,
                                   const FernSpec &spec);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct SuiteResult {
  std::vector<VerificationReport> reports;
  SuiteSummary summary;

  nlohmann::ordered_json to_json() const;
};

/// macmahon, semihex, theorem21, kuo, base-case, g-identity, remark4, remark5, all.
const std::vector<std::string> &suite_names();

/// Deterministic: the report order depends only on the suite and cfg.
SuiteResult run_suite(const std::string &suite, const GridConfig &cfg);

/// Every fern with 1 <= k <= max_k lobes of size 0..max_lobe, in lexicographic order by k then lobes.
std::vector<FernSpec> enumerate_ferns(std::int64_t max_k, std::int64_t max_lobe);

} // namespace fernhex
