// fernhex: build regions, count tilings, evaluate formulas, run checks.
//
// Exit codes: 0 success, 1 failed check or engine disagreement, 2 bad input.

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fernhex/counter.hpp"
#include "fernhex/formulas.hpp"
#include "fernhex/region_builder.hpp"
#include "fernhex/verifier.hpp"
#include "render.hpp"

using namespace fernhex;

namespace {

constexpr int kFailed = 1;
constexpr int kBadInput = 2;

std::vector<std::int64_t> parse_int_list(const std::string &text, const char *what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::int64_t v = 0;
    const char *end = item.data() + item.size();
    auto [p, ec] = std::from_chars(item.data(), end, v);
    if (item.empty() || ec != std::errc() || p != end) {
      throw Error(ErrorKind::InvalidInput, std::string(what) + ": '" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, std::string(what) + " is empty");
  return out;
}

std::int64_t parse_int(const std::string &text) {
  std::int64_t v = 0;
  const char *end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || p != end) {
    throw Error(ErrorKind::InvalidInput, "'" + text + "' is not an integer");
  }
  return v;
}

struct BuildFlags {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  std::string lobes = "0";
  std::optional<std::int64_t> m;
  std::string hexagon;
  std::string region_file;

  void attach(CLI::App *cmd, bool allow_file) {
    cmd->add_option("--x", x, "auxiliary hexagon side x");
    cmd->add_option("--y", y, "auxiliary hexagon side y");
    cmd->add_option("--z", z, "auxiliary hexagon side z");
    cmd->add_option("--lobes", lobes, "fern lobe sizes, comma separated");
    cmd->add_option("--m", m, "single-lobe core of size m (overrides --lobes)");
    cmd->add_option("--hexagon", hexagon, "plain hexagon, six sides clockwise from the top");
    if (allow_file) cmd->add_option("--region", region_file, "region JSON file");
  }

  FernSpec fern() const {
    if (m) return FernSpec({*m});
    return FernSpec(parse_int_list(lobes, "--lobes"));
  }

  // region plus the cells to highlight
  std::pair<TriRegion, TriRegion> build() const {
    if (!region_file.empty()) {
      std::ifstream in(region_file);
      if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + region_file);
      std::stringstream ss;
      ss << in.rdbuf();
      return {region_from_json(ss.str()), {}};
    }
    if (!hexagon.empty()) {
      const auto s = parse_int_list(hexagon, "--hexagon");
      if (s.size() != 6) throw Error(ErrorKind::InvalidInput, "--hexagon needs six side lengths");
      return {fernhex::hexagon({s[0], s[1], s[2], s[3], s[4], s[5]}), {}};
    }
    auto layout = f_cored_layout(x, y, z, fern());
    return {layout.region, layout.fern};
  }
};

void emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + out_path);
  out << text;
}

int exit_code_for(ErrorKind k) {
  return k == ErrorKind::EngineMismatch || k == ErrorKind::NonIntegralResult ? kFailed : kBadInput;
}

// ---------------------------------------------------------------------------

int cmd_region(const BuildFlags &b, const std::string &format, const std::string &out) {
  const auto [region, fern] = b.build();
  if (format == "json") {
    emit(region_to_json(region) + "\n", out);
  } else if (format == "ascii") {
    emit(render_ascii(region, fern), out);
  } else if (format == "svg") {
    emit(render_svg(region, fern), out);
  } else {
    emit(render_csv(region), out);
  }
  return 0;
}

int cmd_count(const BuildFlags &b, const std::string &engine_name, bool cross_check, const std::string &out) {
  const auto [region, fern] = b.build();
  const auto cfg = CounterConfig::from_env();
  const EngineKind engine = parse_engine(engine_name);
  BigNat value = count_tilings(region, engine, cfg);
  if (cross_check) {
    std::vector<std::pair<EngineKind, BigNat>> all;
    if (frontier_width(region) <= cfg.dp_width_cap) all.emplace_back(EngineKind::FrontierDP, count_frontier_dp(region, cfg));
    all.emplace_back(EngineKind::Kasteleyn, count_kasteleyn(region));
    if (region.up_count() <= cfg.ryser_cap) all.emplace_back(EngineKind::RyserPermanent, count_ryser(region, cfg));
    for (const auto &[k, v] : all) {
      if (v != value) {
        std::cerr << "engine mismatch: " << to_string(engine) << " gives " << to_decimal(value) << ", "
                  << to_string(k) << " gives " << to_decimal(v) << "\n";
        return kFailed;
      }
    }
  }
  emit(to_decimal(value) + "\n", out);
  return 0;
}

int cmd_formula(const std::string &name, const std::vector<std::string> &raw, const std::string &out) {
  std::vector<std::int64_t> a;
  std::optional<HalfInt> half;
  if (name == "H" && raw.size() == 1 && raw[0].size() > 2 && raw[0].ends_with("/2")) {
    half = HalfInt::half(parse_int(raw[0].substr(0, raw[0].size() - 2)));
  } else {
    for (const auto &s : raw) a.push_back(parse_int(s));
  }
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (a.size() < lo || a.size() > hi) {
      throw Error(ErrorKind::InvalidInput, "formula '" + name + "' takes " +
                                               (lo == hi ? std::to_string(lo) : std::to_string(lo) + "+") +
                                               " integer arguments, got " + std::to_string(a.size()));
    }
  };
  constexpr std::size_t any = static_cast<std::size_t>(-1);
  auto fern_from = [&](std::size_t from) { return FernSpec(std::vector<std::int64_t>(a.begin() + from, a.end())); };

  std::string result;
  if (name == "H") {
    if (half) {
      result = hyperfactorial_half(*half).str();
    } else {
      arity(1, 1);
      result = to_decimal(hyperfactorial(a[0]));
    }
  } else if (name == "P") {
    arity(3, 3);
    result = to_decimal(macmahon_P(a[0], a[1], a[2]));
  } else if (name == "s") {
    result = to_decimal(semihex_s(a));
  } else if (name == "s-runs") {
    result = to_decimal(semihex_s_run_product(a));
  } else if (name == "trapezoid") {
    arity(2, any);
    result = to_decimal(trapezoid_count(a[0], a[1], std::span(a).subspan(2)));
  } else if (name == "cored") {
    arity(4, 4);
    result = to_decimal(cored_count(a[0], a[1], a[2], a[3]));
  } else if (name == "two-lobe-ratio") {
    arity(5, 5);
    result = to_decimal(two_lobe_ratio(a[0], a[1], a[2], a[3], a[4]));
  } else if (name == "two-lobe-count") {
    arity(5, 5);
    result = to_decimal(fc_two_lobe_count(a[0], a[1], a[2], a[3], a[4]));
  } else if (name == "theorem21-ratio") {
    arity(4, any);
    result = to_decimal(theorem21_ratio(a[0], a[1], a[2], fern_from(3)));
  } else if (name == "fc-count") {
    arity(4, any);
    result = to_decimal(fc_count_formula(a[0], a[1], a[2], fern_from(3)));
  } else if (name == "g") {
    arity(4, any);
    result = to_decimal(g_function(a[0], a[1], a[2], fern_from(3)));
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown formula '" + name +
                                             "' (H, P, s, s-runs, trapezoid, cored, two-lobe-ratio, two-lobe-count, "
                                             "theorem21-ratio, fc-count, g)");
  }
  emit(result + "\n", out);
  return 0;
}

int cmd_verify(const std::string &suite, const GridConfig &cfg, const std::string &report, const std::string &out) {
  const auto res = run_suite(suite, cfg);
  std::ostringstream os;
  for (const auto &r : res.reports) {
    if (!r.pass && !r.skipped) {
      os << "FAIL " << r.identity << " " << r.params.dump() << " lhs=" << to_decimal(r.lhs)
         << " rhs=" << to_decimal(r.rhs);
      if (!r.reason.empty()) os << " (" << r.reason << ")";
      os << "\n";
    }
  }
  os << "suite " << suite << ": " << res.summary.total << " instances, " << res.summary.passed << " passed, "
     << res.summary.failed << " failed, " << res.summary.skipped << " skipped\n";
  emit(os.str(), out);
  if (!report.empty()) {
    std::ofstream f(report, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + report);
    f << res.to_json().dump(2) << "\n";
  }
  return res.summary.failed == 0 ? 0 : kFailed;
}

int cmd_bench(const std::string &family, std::int64_t max_size, const std::string &lobes,
              const std::vector<std::string> &engines, const std::string &out) {
  if (max_size < 0) throw Error(ErrorKind::InvalidInput, "--max-xyz must be >= 0");
  std::vector<EngineKind> kinds;
  for (const auto &e : engines) kinds.push_back(parse_engine(e));
  const auto cfg = CounterConfig::from_env();

  std::vector<std::pair<std::string, TriRegion>> instances;
  if (family == "hexagon") {
    for (std::int64_t a = 1; a <= max_size; ++a) {
      instances.emplace_back("hexagon(" + std::to_string(a) + ")", hexagon({a, a, a, a, a, a}));
    }
  } else {
    const FernSpec spec(parse_int_list(lobes, "--lobes"));
    for (std::int64_t s = 0; s <= max_size; ++s) {
      instances.emplace_back("fc(" + std::to_string(s) + ";" + spec.str() + ")", f_cored_hexagon(s, s, s, spec));
    }
  }

  std::ostringstream os;
  os << "instance,engine,cells,ms,digits,count,status\n";
  int code = 0;
  for (const auto &[name, region] : instances) {
    std::optional<BigNat> reference;
    for (auto k : kinds) {
      os << '"' << name << "\"," << to_string(k) << ',' << region.size() << ',';
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const BigNat v = count_tilings(region, k, cfg);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const std::string digits = to_decimal(v);
        std::string status = "ok";
        if (reference && *reference != v) {
          status = "mismatch";
          code = kFailed;
        }
        if (!reference) reference = v;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", ms);
        os << buf << ',' << digits.size() << ',' << digits << ',' << status << '\n';
      } catch (const Error &e) {
        if (e.kind() != ErrorKind::InstanceTooLarge) throw;
        os << ",,,skipped\n";
      }
    }
  }
  emit(os.str(), out);
  return code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Lozenge tilings of F-cored hexagons: regions, exact counts, product formulas, checks"};
  app.require_subcommand(1, 1);
  std::string out;

  auto *region = app.add_subcommand("region", "build a region and print it");
  BuildFlags region_flags;
  region_flags.attach(region, false);
  std::string region_format = "json";
  region->add_option("--format", region_format, "json|csv|ascii|svg")
      ->check(CLI::IsMember({"json", "csv", "ascii", "svg"}));
  region->add_option("--out", out, "output file (default stdout)");

  auto *count = app.add_subcommand("count", "count lozenge tilings");
  BuildFlags count_flags;
  count_flags.attach(count, true);
  std::string engine = "auto";
  bool cross_check = false;
  count->add_option("--engine", engine, "dp|kasteleyn|ryser|auto")
      ->check(CLI::IsMember({"dp", "kasteleyn", "ryser", "auto"}));
  count->add_flag("--cross-check", cross_check, "compare against every engine within its caps");
  count->add_option("--out", out, "output file (default stdout)");

  auto *formula = app.add_subcommand("formula", "evaluate a product formula");
  std::string formula_name;
  std::vector<std::string> formula_args;
  formula->add_option("name", formula_name, "H, P, s, s-runs, trapezoid, cored, two-lobe-ratio, two-lobe-count, "
                                            "theorem21-ratio, fc-count, g")
      ->required();
  formula->add_option("args", formula_args, "integer arguments");
  formula->add_option("--out", out, "output file (default stdout)");

  auto *verify = app.add_subcommand("verify", "check identities over a parameter grid");
  std::string suite = "all";
  GridConfig grid;
  std::string report;
  verify->add_option("--suite", suite, "macmahon|semihex|theorem21|kuo|base-case|g-identity|remark4|remark5|all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-xyz", grid.max_xyz, "largest x, y, z");
  verify->add_option("--max-lobe", grid.max_lobe, "largest lobe size");
  verify->add_option("--max-k", grid.max_k, "most lobes");
  verify->add_option("--jobs", grid.jobs, "worker threads");
  verify->add_option("--report", report, "write the JSON report here");
  verify->add_option("--out", out, "summary output file (default stdout)");
  verify->add_flag("--inject-fault", grid.inject_fault)->group("");

  auto *bench = app.add_subcommand("bench", "time the engines on a family of regions");
  std::string family = "hexagon";
  std::int64_t bench_max = 4;
  std::string bench_lobes = "1,1";
  std::vector<std::string> bench_engines{"dp", "kasteleyn"};
  bench->add_option("--family", family, "hexagon|fc")->check(CLI::IsMember({"hexagon", "fc"}));
  bench->add_option("--max-xyz", bench_max, "largest size parameter");
  bench->add_option("--lobes", bench_lobes, "fern for the fc family");
  bench->add_option("--engine", bench_engines, "engines to run, repeatable")
      ->check(CLI::IsMember({"dp", "kasteleyn", "ryser", "auto"}));
  bench->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (*region) return cmd_region(region_flags, region_format, out);
    if (*count) return cmd_count(count_flags, engine, cross_check, out);
    if (*formula) return cmd_formula(formula_name, formula_args, out);
    if (*verify) return cmd_verify(suite, grid, report, out);
    if (*bench) return cmd_bench(family, bench_max, bench_lobes, bench_engines, out);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
