#include <doctest.h>

#include "fernhex/formulas.hpp"
#include "fernhex/verifier.hpp"
#include "support.hpp"

using namespace fernhex;
using fernhex::testing::require_kind;
using Blocks = std::vector<std::int64_t>;

namespace {

CountCache &shared_cache() {
  static CountCache cache;
  return cache;
}

void passes(const VerificationReport &r) {
  CHECK_MESSAGE(r.pass, r.identity << " " << r.params.dump() << " " << to_decimal(r.lhs) << " vs "
                                    << to_decimal(r.rhs) << " " << r.reason);
  CHECK(!r.skipped);
}

} // namespace

TEST_CASE("single checks") {
  auto &c = shared_cache();
  passes(check_macmahon(2, 2, 2, c));
  CHECK(check_macmahon(2, 2, 2, c).lhs == 20);
  passes(check_semihex(Blocks{2, 1, 1}, c));
  passes(check_semihex(Blocks{1, 2, 3, 1}, c));

  auto t = check_theorem21(0, 0, 0, FernSpec({1, 1, 1}), c);
  passes(t);
  CHECK(t.lhs == 2);
  passes(check_theorem21(2, 2, 2, FernSpec({1, 1, 1, 1}), c));
  passes(check_theorem21(3, 1, 2, FernSpec({0, 0, 0}), c));
  CHECK(check_theorem21(3, 1, 2, FernSpec({0, 0, 0}), c).lhs == macmahon_P(3, 1, 2));
}

TEST_CASE("large instances with fern 1,2,6,3") {
  auto &c = shared_cache();
  const FernSpec fern({1, 2, 6, 3});
  auto r = check_theorem21(2, 6, 4, fern, c);
  passes(r);
  CHECK(r.lhs == BigNat("12934106682131869292298240"));
  passes(check_theorem21(3, 6, 4, fern, c));
  CHECK(check_theorem21(2, 6, 5, fern, c).lhs == BigNat("3569813444268395924674314240"));
  CHECK(check_theorem21(2, 7, 4, fern, c).lhs == BigNat("349348519628239403812700160"));
}

TEST_CASE("fault injection surfaces as a failure") {
  auto r = check_theorem21(1, 1, 1, FernSpec({1, 1}), shared_cache(), true);
  CHECK(!r.pass);
  CHECK(!r.skipped);
  CHECK(r.rhs == r.lhs + 1);
}

TEST_CASE("Kuo variants") {
  auto &c = shared_cache();
  CHECK(kuo_variant_for(2, 2, 2, 2) == KuoVariant::C32);
  CHECK(kuo_variant_for(1, 2, 2, 3) == KuoVariant::W33);
  CHECK(kuo_variant_for(2, 2, 1, 2) == KuoVariant::SW34);
  CHECK(kuo_variant_for(2, 2, 1, 3) == KuoVariant::SW35);
  CHECK(kuo_variant_for(2, 1, 2, 2) == KuoVariant::NW36);
  CHECK(kuo_variant_for(2, 1, 2, 1) == KuoVariant::NW37);
  CHECK(to_string(KuoVariant::SW35) == "3.5");

  passes(check_kuo(KuoVariant::C32, 2, 2, 2, FernSpec({1, 1}), c));
  passes(check_kuo(KuoVariant::SW35, 2, 2, 1, FernSpec({1, 1, 1}), c));
  passes(check_kuo(KuoVariant::NW36, 3, 2, 3, FernSpec({2, 1}), c));
  passes(check_kuo(KuoVariant::W33, 2, 3, 3, FernSpec({1, 2, 1}), c));
  CHECK(kuo_regions(KuoVariant::C32, 2, 2, 2, FernSpec({1, 1})).size() == 6);

  require_kind(ErrorKind::PreconditionViolated,
               [&] { check_kuo(KuoVariant::C32, 0, 2, 2, FernSpec({1, 1}), c); });
  require_kind(ErrorKind::PreconditionViolated,
               [&] { check_kuo(KuoVariant::C32, 1, 2, 2, FernSpec({1, 1}), c); });
}

TEST_CASE("base case") {
  auto &c = shared_cache();
  passes(check_base_case(2, 2, FernSpec({1, 1}), c));
  passes(check_base_case(4, 2, FernSpec({0, 0, 0}), c));
  passes(check_base_case(4, 6, FernSpec({1, 1, 2, 1}), c));
  passes(check_base_case(2, 4, FernSpec({2, 1, 1}), c));
  require_kind(ErrorKind::PreconditionViolated, [&] { check_base_case(1, 1, FernSpec({1}), c); });
}

TEST_CASE("g identity and the scalar identity") {
  passes(check_g_identity(2, 2, 1, FernSpec({1, 2})));
  passes(check_g_identity(2, 2, 1, FernSpec({1, 1, 1})));
  passes(check_g_identity(3, 1, 2, FernSpec({2, 1, 2, 1})));
  passes(check_g_identity(1, 3, 0, FernSpec({1, 2, 1})));
  require_kind(ErrorKind::PreconditionViolated, [] { check_g_identity(2, 1, 1, FernSpec({1})); });

  passes(check_scalar_identity_413(1, 1, 1, 1, 1));
  passes(check_scalar_identity_413(0, 0, 0, 1, 0));
  passes(check_scalar_identity_413(2, 0, 0, 0, 0));
  require_kind(ErrorKind::DivisionByZero, [] { check_scalar_identity_413(1, 0, 0, 0, 0); });
  require_kind(ErrorKind::PreconditionViolated, [] { check_scalar_identity_413(0, 0, 0, 0, 0); });
}

TEST_CASE("envelope hexagons") {
  auto &c = shared_cache();
  auto r = check_remark4(FernSpec({1, 1, 1}), c);
  passes(r);
  CHECK(r.lhs == 2);
  CHECK(check_remark4(FernSpec({2, 3}), c).lhs == 1);
  passes(check_remark4(FernSpec({1, 2, 1, 2}), c));
  passes(check_remark4(FernSpec({2, 1, 1, 2, 1}), c));

  auto k = check_remark5_constancy(FernSpec({1, 1, 1}), 3);
  passes(k);
  CHECK(k.rhs == 2);
  CHECK(check_remark5_constancy(FernSpec({4}), 3).rhs == 1);
  CHECK(check_remark5_constancy(FernSpec({1, 2}), 3).rhs == 1);
}

TEST_CASE("grid config") {
  GridConfig g;
  g.max_xyz = -1;
  require_kind(ErrorKind::InvalidInput, [&] { g.validate(); });
  g = GridConfig{};
  g.jobs = 0;
  require_kind(ErrorKind::InvalidInput, [&] { g.validate(); });
  require_kind(ErrorKind::InvalidInput, [] { run_suite("nonsense", GridConfig{}); });
}

TEST_CASE("ferns enumeration") {
  auto f = enumerate_ferns(2, 1);
  REQUIRE(f.size() == 6);
  CHECK(f.front() == FernSpec({0}));
  CHECK(f.back() == FernSpec({1, 1}));
}

TEST_CASE("suites") {
  GridConfig small;
  small.max_xyz = 0;
  small.max_k = 3;
  small.max_lobe = 1;
  auto all = run_suite("all", small);
  CHECK(all.summary.failed == 0);
  CHECK(all.summary.skipped == 0);
  CHECK(all.summary.total == all.reports.size());
  CHECK(all.summary.passed + all.summary.failed + all.summary.skipped == all.summary.total);

  GridConfig cfg;
  cfg.max_xyz = 2;
  cfg.max_k = 3;
  cfg.max_lobe = 1;
  cfg.jobs = 1;
  auto one = run_suite("theorem21", cfg);
  cfg.jobs = 4;
  auto four = run_suite("theorem21", cfg);
  REQUIRE(one.reports.size() == four.reports.size());
  for (std::size_t i = 0; i < one.reports.size(); ++i) {
    CHECK(one.reports[i].params == four.reports[i].params);
    CHECK(one.reports[i].lhs == four.reports[i].lhs);
    CHECK(one.reports[i].pass == four.reports[i].pass);
  }
  CHECK(one.summary.failed == 0);

  cfg.inject_fault = true;
  auto broken = run_suite("theorem21", cfg);
  CHECK(broken.summary.failed > 0);
  CHECK(broken.summary.failed + broken.summary.skipped == broken.summary.total);

  auto j = one.to_json();
  CHECK(j["summary"]["total"] == one.summary.total);
  const auto &first = j["reports"][0];
  for (const char *key : {"identity", "params", "lhs", "rhs", "pass", "ms"}) CHECK(first.contains(key));
}
