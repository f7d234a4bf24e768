#include "fernhex/verifier.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "fernhex/formulas.hpp"

namespace fernhex {

using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

json lobes_json(const FernSpec &spec) { return json(std::vector<std::int64_t>(spec.lobes().begin(), spec.lobes().end())); }

json xyz_params(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec) {
  return json{{"x", x}, {"y", y}, {"z", z}, {"lobes", lobes_json(spec)}};
}

// Runs body, fills timing, and turns library errors into skipped or failed reports.
VerificationReport measured(std::string identity, json params, const std::function<void(VerificationReport &)> &body) {
  VerificationReport rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  const auto t0 = Clock::now();
  try {
    body(rep);
    rep.pass = rep.lhs == rep.rhs;
  } catch (const Error &err) {
    rep.pass = false;
    rep.reason = err.what();
    rep.skipped = err.kind() == ErrorKind::FernDoesNotFit;
  }
  rep.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return rep;
}

BigNat count_of(const TriRegion &r, CountCache &cache, VerificationReport &rep) {
  auto res = cache.get(r);
  rep.engine = res.engines.front();
  return res.count;
}

bool same_parity(std::int64_t a, std::int64_t b) { return (a - b) % 2 == 0; }

FernSpec padded_reverse(const FernSpec &spec) { return spec.padded_even().reversed(); }

} // namespace

json VerificationReport::to_json() const {
  json j{{"identity", identity}, {"params", params}};
  j["lhs"] = to_decimal(lhs);
  j["rhs"] = to_decimal(rhs);
  j["pass"] = pass;
  j["skipped"] = skipped;
  if (!reason.empty()) j["reason"] = reason;
  j["engine"] = std::string(to_string(engine));
  j["ms"] = ms;
  return j;
}

void GridConfig::validate() const {
  if (max_xyz < 0) throw Error(ErrorKind::InvalidInput, "--max-xyz must be >= 0");
  if (max_lobe < 0) throw Error(ErrorKind::InvalidInput, "--max-lobe must be >= 0");
  if (max_k < 0) throw Error(ErrorKind::InvalidInput, "--max-k must be >= 0");
  if (jobs == 0) throw Error(ErrorKind::InvalidInput, "--jobs must be >= 1");
}

std::string_view to_string(KuoVariant v) {
  switch (v) {
  case KuoVariant::C32: return "3.2";
  case KuoVariant::W33: return "3.3";
  case KuoVariant::SW34: return "3.4";
  case KuoVariant::SW35: return "3.5";
  case KuoVariant::NW36: return "3.6";
  case KuoVariant::NW37: return "3.7";
  }
  return "?";
}

KuoVariant kuo_variant_for(std::int64_t x, std::int64_t y, std::int64_t z, std::size_t k) {
  const bool even_k = k % 2 == 0;
  switch (placement_kind(x, y, z)) {
  case PlacementKind::Center: return KuoVariant::C32;
  case PlacementKind::West: return KuoVariant::W33;
  case PlacementKind::SouthWest: return even_k ? KuoVariant::SW34 : KuoVariant::SW35;
  case PlacementKind::NorthWest: return even_k ? KuoVariant::NW36 : KuoVariant::NW37;
  }
  return KuoVariant::C32;
}

// ---------------------------------------------------------------------------
// Individual checks

VerificationReport check_macmahon(std::int64_t a, std::int64_t b, std::int64_t c, CountCache &cache) {
  return measured("macmahon", json{{"a", a}, {"b", b}, {"c", c}}, [&](VerificationReport &rep) {
    rep.lhs = count_of(hexagon({a, b, c, a, b, c}), cache, rep);
    rep.rhs = macmahon_P(a, b, c);
  });
}

VerificationReport check_semihex(const std::vector<std::int64_t> &blocks, CountCache &cache) {
  return measured("semihex", json{{"blocks", blocks}}, [&](VerificationReport &rep) {
    rep.lhs = count_of(semihexagon_S(blocks), cache, rep);
    rep.rhs = semihex_s(blocks);
  });
}

VerificationReport check_theorem21(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec,
                                   CountCache &cache, bool inject_fault) {
  return measured("theorem21", xyz_params(x, y, z, spec), [&](VerificationReport &rep) {
    rep.lhs = count_of(f_cored_hexagon(x, y, z, spec), cache, rep);
    rep.rhs = fc_count_formula(x, y, z, spec);
    if (inject_fault) rep.rhs += 1;
  });
}

std::vector<TriRegion> kuo_regions(KuoVariant variant, std::int64_t x, std::int64_t y, std::int64_t z,
                                   const FernSpec &spec) {
  const auto fc = [&](std::int64_t a, std::int64_t b, std::int64_t c) { return f_cored_hexagon(a, b, c, spec); };
  const FernSpec rev = spec.reversed();
  switch (variant) {
  case KuoVariant::C32:
    return {fc(x, y, z), fc(x, y - 1, z - 1), fc(x, y - 1, z), fc(x, y, z - 1), fc(x - 1, y, z),
            fc(x + 1, y - 1, z - 1)};
  case KuoVariant::W33:
    return {fc(x, y, z), fc(x, y - 1, z - 1), fc(x, y, z - 1), fc(x, y - 1, z), fc(x + 1, y - 1, z - 1),
            fc(x - 1, y, z)};
  case KuoVariant::SW34:
  case KuoVariant::SW35: {
    auto twisted = variant == KuoVariant::SW34 ? f_cored_hexagon(x - 1, y, z, rev) : f_cored_hexagon(x - 1, z, y, rev);
    return {fc(x, y, z), fc(x - 1, y - 1, z), fc(x, y - 1, z), std::move(twisted), fc(x, y, z - 1),
            fc(x - 1, y - 1, z + 1)};
  }
  case KuoVariant::NW36:
  case KuoVariant::NW37: {
    auto twisted = variant == KuoVariant::NW36 ? f_cored_hexagon(x - 1, y, z, rev) : f_cored_hexagon(x - 1, z, y, rev);
    return {fc(x, y, z), fc(x - 1, y, z - 1), fc(x, y, z - 1), std::move(twisted), fc(x, y - 1, z),
            fc(x - 1, y + 1, z - 1)};
  }
  }
  return {};
}

VerificationReport check_kuo(KuoVariant variant, std::int64_t x, std::int64_t y, std::int64_t z,
                             const FernSpec &spec, CountCache &cache) {
  if (x < 1 || y < 1 || z < 1) {
    throw Error(ErrorKind::PreconditionViolated, "condensation recurrences need x, y, z >= 1");
  }
  if (kuo_variant_for(x, y, z, spec.k()) != variant) {
    throw Error(ErrorKind::PreconditionViolated,
                "recurrence " + std::string(to_string(variant)) + " does not apply to x=" + std::to_string(x) +
                    " y=" + std::to_string(y) + " z=" + std::to_string(z) + " k=" + std::to_string(spec.k()));
  }
  auto params = xyz_params(x, y, z, spec);
  params["variant"] = std::string(to_string(variant));
  return measured("kuo", std::move(params), [&](VerificationReport &rep) {
    const auto regions = kuo_regions(variant, x, y, z, spec);
    std::vector<BigNat> m;
    for (const auto &r : regions) m.push_back(count_of(r, cache, rep));
    rep.lhs = m[0] * m[1];
    rep.rhs = m[2] * m[3] + m[4] * m[5];
  });
}

VerificationReport check_base_case(std::int64_t x, std::int64_t y, const FernSpec &spec, CountCache &cache) {
  if (x < 0 || y < 0 || x % 2 != 0 || y % 2 != 0) {
    throw Error(ErrorKind::PreconditionViolated, "base case needs x and y even and nonnegative");
  }
  auto params = xyz_params(x, y, 0, spec);
  return measured("base-case", std::move(params), [&](VerificationReport &rep) {
    rep.lhs = count_of(f_cored_hexagon(x, y, 0, spec), cache, rep);
    const FernSpec padded = spec.padded_even();
    const auto a = padded.lobes();
    std::vector<std::int64_t> h1{y / 2, x / 2};
    h1.insert(h1.end(), a.begin(), a.end() - 1);
    std::vector<std::int64_t> h2(a.begin() + 1, a.end());
    h2.push_back(x / 2);
    h2.push_back(y / 2);
    rep.rhs = count_of(semihexagon_S(h1), cache, rep) * count_of(semihexagon_S(h2), cache, rep);
  });
}

VerificationReport check_g_identity(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec) {
  if (x < 1 || y < 1 || z < 0 || !same_parity(x, y) || same_parity(x, z)) {
    throw Error(ErrorKind::PreconditionViolated, "g identity needs x = y (mod 2), z of the other parity, x, y >= 1");
  }
  return measured("g-identity", xyz_params(x, y, z, spec), [&](VerificationReport &rep) {
    rep.lhs = g_function(x, y - 1, z, spec) * g_function(x - 1, y, z, padded_reverse(spec));
    rep.rhs = g_function(x, y, z, spec) * g_function(x - 1, y - 1, z, spec);
  });
}

VerificationReport check_scalar_identity_413(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t o,
                                             std::int64_t e) {
  for (auto v : {x, y, z, o, e}) {
    if (v < 0) throw Error(ErrorKind::NegativeArgument, "arguments must be nonnegative");
  }
  const std::int64_t total = x + y + z + 2 * o + 2 * e;
  if (total == 0) throw Error(ErrorKind::PreconditionViolated, "x+y+z+2o+2e must be at least 1");
  const std::int64_t d = total - 1;
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "x+y+z+2o+2e-1 vanishes");
  return measured("identity-4.13", json{{"x", x}, {"y", y}, {"z", z}, {"o", o}, {"e", e}}, [&](VerificationReport &rep) {
    rep.lhs = 1;
    rep.rhs = make_rat(BigNat(static_cast<long>(x + y + z)), BigNat(static_cast<long>(d))) +
              make_rat(BigNat(static_cast<long>(2 * o + 2 * e - 1)), BigNat(static_cast<long>(d)));
  });
}

VerificationReport check_remark4(const FernSpec &spec, CountCache &cache) {
  return measured("remark4", json{{"lobes", lobes_json(spec)}}, [&](VerificationReport &rep) {
    rep.lhs = count_of(envelope_H_F(spec), cache, rep);
    rep.rhs = s_product(spec);
  });
}

VerificationReport check_remark5_constancy(const FernSpec &spec, std::int64_t max_xy) {
  if (max_xy < 0) throw Error(ErrorKind::InvalidInput, "grid bound must be >= 0");
  return measured("remark5", json{{"lobes", lobes_json(spec)}, {"max_xy", max_xy}}, [&](VerificationReport &rep) {
    rep.rhs = s_product(spec);
    rep.lhs = rep.rhs;
    for (std::int64_t x = 0; x <= max_xy; ++x) {
      for (std::int64_t y = 0; y <= max_xy; ++y) {
        const BigRat v = theorem21_ratio(x, y, y, spec);
        if (v != rep.rhs) {
          rep.lhs = v;
          rep.reason = "differs at x=" + std::to_string(x) + " y=" + std::to_string(y);
          return;
        }
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Suites

std::vector<FernSpec> enumerate_ferns(std::int64_t max_k, std::int64_t max_lobe) {
  std::vector<FernSpec> out;
  for (std::int64_t k = 1; k <= max_k; ++k) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(k), 0);
    while (true) {
      out.emplace_back(a);
      std::int64_t i = k - 1;
      while (i >= 0 && a[static_cast<std::size_t>(i)] == max_lobe) a[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++a[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"macmahon", "semihex", "theorem21", "kuo", "base-case",
                                              "g-identity", "remark4", "remark5", "all"};
  return names;
}

namespace {

using Task = std::function<VerificationReport()>;

void add_tasks(const std::string &suite, const GridConfig &cfg, CountCache &cache, std::vector<Task> &tasks) {
  const std::int64_t N = cfg.max_xyz;
  if (suite == "macmahon") {
    for (std::int64_t a = 0; a <= N; ++a)
      for (std::int64_t b = 0; b <= N; ++b)
        for (std::int64_t c = 0; c <= N; ++c) tasks.push_back([=, &cache] { return check_macmahon(a, b, c, cache); });
  } else if (suite == "semihex") {
    for (const auto &f : enumerate_ferns(cfg.max_k + 1, cfg.max_lobe)) {
      std::vector<std::int64_t> blocks(f.lobes().begin(), f.lobes().end());
      tasks.push_back([blocks, &cache] { return check_semihex(blocks, cache); });
    }
  } else if (suite == "theorem21") {
    const auto ferns = enumerate_ferns(cfg.max_k, cfg.max_lobe);
    for (std::int64_t x = 0; x <= N; ++x)
      for (std::int64_t y = 0; y <= N; ++y)
        for (std::int64_t z = 0; z <= N; ++z)
          for (const auto &f : ferns)
            tasks.push_back([=, &cache] { return check_theorem21(x, y, z, f, cache, cfg.inject_fault); });
  } else if (suite == "kuo") {
    const auto ferns = enumerate_ferns(cfg.max_k, cfg.max_lobe);
    for (std::int64_t x = 1; x <= N; ++x)
      for (std::int64_t y = 1; y <= N; ++y)
        for (std::int64_t z = 1; z <= N; ++z)
          for (const auto &f : ferns) {
            const auto v = kuo_variant_for(x, y, z, f.k());
            tasks.push_back([=, &cache] { return check_kuo(v, x, y, z, f, cache); });
          }
  } else if (suite == "base-case") {
    const auto ferns = enumerate_ferns(cfg.max_k, cfg.max_lobe);
    for (std::int64_t x = 0; x <= N; x += 2)
      for (std::int64_t y = 0; y <= N; y += 2)
        for (const auto &f : ferns) tasks.push_back([=, &cache] { return check_base_case(x, y, f, cache); });
  } else if (suite == "g-identity") {
    const auto ferns = enumerate_ferns(cfg.max_k, cfg.max_lobe);
    for (std::int64_t x = 1; x <= N; ++x)
      for (std::int64_t y = 1; y <= N; ++y)
        for (std::int64_t z = 0; z <= N; ++z) {
          if (!same_parity(x, y) || same_parity(x, z)) continue;
          for (const auto &f : ferns) {
            tasks.push_back([=] { return check_g_identity(x, y, z, f); });
            tasks.push_back([=] { return check_scalar_identity_413(x, y, z, f.o(), f.e()); });
          }
        }
  } else if (suite == "remark4") {
    for (const auto &f : enumerate_ferns(cfg.max_k + 1, cfg.max_lobe))
      tasks.push_back([f, &cache] { return check_remark4(f, cache); });
  } else if (suite == "remark5") {
    for (const auto &f : enumerate_ferns(cfg.max_k, cfg.max_lobe))
      tasks.push_back([f, N] { return check_remark5_constancy(f, N); });
  } else if (suite == "all") {
    for (const auto &name : suite_names()) {
      if (name != "all") add_tasks(name, cfg, cache, tasks);
    }
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown suite '" + suite + "'");
  }
}

} // namespace

SuiteResult run_suite(const std::string &suite, const GridConfig &cfg) {
  cfg.validate();
  CountCache cache(cfg.caps);
  std::vector<Task> tasks;
  add_tasks(suite, cfg, cache, tasks);

  SuiteResult res;
  res.reports.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) res.reports[i] = tasks[i]();
  };
  const unsigned n = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();

  for (const auto &r : res.reports) {
    ++res.summary.total;
    if (r.skipped) {
      ++res.summary.skipped;
    } else if (r.pass) {
      ++res.summary.passed;
    } else {
      ++res.summary.failed;
    }
  }
  return res;
}

json SuiteResult::to_json() const {
  json reps = json::array();
  for (const auto &r : reports) reps.push_back(r.to_json());
  return json{{"reports", std::move(reps)},
              {"summary",
               {{"total", summary.total}, {"passed", summary.passed}, {"failed", summary.failed},
                {"skipped", summary.skipped}}}};
}

} // namespace fernhex
