#include "fernhex/formulas.hpp"

#include <mutex>
#include <numeric>

namespace fernhex {

namespace {

std::int64_t fl2(std::int64_t n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }
std::int64_t ce2(std::int64_t n) { return n - fl2(n); }

void require_nonnegative(std::int64_t v, const char *what) {
  if (v < 0) throw Error(ErrorKind::NegativeArgument, std::string(what) + " must be nonnegative, got " + std::to_string(v));
}

// Running quotient of integer hyperfactorials.
struct HRatio {
  BigNat num = 1;
  BigNat den = 1;

  HRatio &up(std::int64_t n) {
    num *= hyperfactorial(n);
    return *this;
  }
  HRatio &down(std::int64_t n) {
    den *= hyperfactorial(n);
    return *this;
  }
  BigRat value() const { return make_rat(num, den); }
};

// Hyperfactorials at integer or half-integer points, by twice the argument.
struct HalfProduct {
  PiMonomial acc;

  void up(std::int64_t twice) { acc = acc * hyperfactorial_half(HalfInt::from_twice(twice)); }
  void down(std::int64_t twice) { acc = acc / hyperfactorial_half(HalfInt::from_twice(twice)); }
};

BigNat require_integral(const BigRat &q, const std::string &what) {
  if (q.get_den() != 1 || sgn(q) < 0) {
    throw Error(ErrorKind::NonIntegralResult, what + " evaluated to " + to_decimal(q));
  }
  return q.get_num();
}

} // namespace

// ---------------------------------------------------------------------------
// Hyperfactorials

BigNat hyperfactorial(std::int64_t n) {
  require_nonnegative(n, "hyperfactorial argument");
  static std::mutex mu;
  static std::vector<BigNat> memo{1};
  static std::vector<BigNat> fact{1};
  std::lock_guard lock(mu);
  while (static_cast<std::int64_t>(memo.size()) <= n) {
    const auto j = memo.size() - 1;  // extend by j!
    memo.push_back(memo.back() * fact.back());
    fact.push_back(fact.back() * BigNat(static_cast<unsigned long>(j + 1)));
  }
  return memo[static_cast<std::size_t>(n)];
}

PiMonomial operator/(const PiMonomial &a, const PiMonomial &b) {
  if (sgn(b.q) == 0) throw Error(ErrorKind::DivisionByZero, "division by a zero monomial");
  return {a.q / b.q, a.t - b.t};
}

std::string PiMonomial::str() const {
  if (t == 0) return to_decimal(q);
  return to_decimal(q) + "*pi^(" + std::to_string(t) + "/2)";
}

PiMonomial hyperfactorial_half(HalfInt x) {
  if (x.twice() < 0) throw Error(ErrorKind::NegativeArgument, "hyperfactorial argument " + x.str() + " is negative");
  if (x.is_integer()) return {BigRat(hyperfactorial(x.to_integer())), 0};
  // Gamma(k + 3/2) = (2k+1)!! / 2^(k+1) * sqrt(pi)
  const std::int64_t n = (x.twice() - 1) / 2;
  BigNat num = 1;
  BigNat den = 1;
  BigNat dfact = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    dfact *= BigNat(static_cast<unsigned long>(2 * k + 1));
    num *= dfact;
    den <<= static_cast<mp_bitcnt_t>(k + 1);
  }
  return {make_rat(num, den), n};
}

// ---------------------------------------------------------------------------
// MacMahon, trapezoids, semihexagons

BigNat macmahon_P(std::int64_t a, std::int64_t b, std::int64_t c) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  require_nonnegative(c, "c");
  HRatio r;
  r.up(a).up(b).up(c).up(a + b + c).down(a + b).down(a + c).down(b + c);
  return require_integral(r.value(), "P(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

BigNat trapezoid_count(std::int64_t m, std::int64_t n, std::span<const std::int64_t> dents) {
  require_nonnegative(m, "m");
  require_nonnegative(n, "n");
  if (static_cast<std::int64_t>(dents.size()) != n) {
    throw Error(ErrorKind::BadDentCount, "expected " + std::to_string(n) + " dents, got " + std::to_string(dents.size()));
  }
  for (std::size_t i = 0; i < dents.size(); ++i) {
    if (dents[i] < 1 || dents[i] > m + n) {
      throw Error(ErrorKind::DentOutOfRange, "dent " + std::to_string(dents[i]) + " outside 1.." + std::to_string(m + n));
    }
    if (i > 0 && dents[i] <= dents[i - 1]) {
      throw Error(ErrorKind::BadDentPositions, "dent positions must be strictly increasing");
    }
  }
  BigNat num = 1;
  BigNat den = 1;
  for (std::size_t i = 0; i < dents.size(); ++i) {
    for (std::size_t j = i + 1; j < dents.size(); ++j) {
      num *= BigNat(static_cast<long>(dents[j] - dents[i]));
      den *= BigNat(static_cast<long>(j - i));
    }
  }
  return require_integral(make_rat(num, den), "trapezoid count");
}

BigNat semihex_s(std::span<const std::int64_t> blocks) {
  for (auto b : blocks) require_nonnegative(b, "block length");
  if (blocks.empty()) return 1;
  if (blocks.size() % 2 == 0) return semihex_s(blocks.first(blocks.size() - 1));
  const auto dents = semihexagon_dents(blocks);
  const std::int64_t base = std::accumulate(blocks.begin(), blocks.end(), std::int64_t{0});
  const auto n = static_cast<std::int64_t>(dents.size());
  return trapezoid_count(base - n, n, dents);
}

BigRat semihex_s_run_product(std::span<const std::int64_t> blocks) {
  for (auto b : blocks) require_nonnegative(b, "block length");
  std::size_t l = blocks.size();
  if (l % 2 == 0 && l > 0) --l;
  HRatio r;
  for (std::size_t i = 0; i < l; ++i) {
    std::int64_t sum = blocks[i];
    for (std::size_t j = i + 1; j < l; ++j) {
      sum += blocks[j];
      if ((j - i + 1) % 2 == 1) {
        r.up(sum);
      } else {
        r.down(sum);
      }
    }
  }
  return r.value();
}

// ---------------------------------------------------------------------------
// Cored hexagons

std::string_view to_string(ParityBranch b) {
  switch (b) {
  case ParityBranch::YZ: return "y=z";
  case ParityBranch::XY: return "x=y";
  case ParityBranch::XZ: return "x=z";
  }
  return "?";
}

std::vector<ParityBranch> applicable_branches(std::int64_t x, std::int64_t y, std::int64_t z) {
  std::vector<ParityBranch> out;
  if ((y - z) % 2 == 0) out.push_back(ParityBranch::YZ);
  if ((x - y) % 2 == 0) out.push_back(ParityBranch::XY);
  if ((x - z) % 2 == 0) out.push_back(ParityBranch::XZ);
  return out;
}

Rounding branch_rounding(ParityBranch b) { return b == ParityBranch::YZ ? Rounding::Standard : Rounding::Interchanged; }

PiMonomial cored_expression(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t m, Rounding rounding) {
  require_nonnegative(x, "x");
  require_nonnegative(y, "y");
  require_nonnegative(z, "z");
  require_nonnegative(m, "m");
  if ((y - z) % 2 != 0) {
    throw Error(ErrorKind::PreconditionViolated, "cored expression needs y and z of equal parity");
  }
  const bool swap = rounding == Rounding::Interchanged;
  auto fl = [&](std::int64_t n) { return swap ? ce2(n) : fl2(n); };
  auto ce = [&](std::int64_t n) { return swap ? fl2(n) : ce2(n); };
  const std::int64_t yz = (y + z) / 2;

  // everything below is twice the hyperfactorial argument
  HalfProduct p;
  for (auto a : {x + m, y + m, z + m, x + y + z + m, fl(x + y + z) + m, ce(x + y + z) + m}) p.up(2 * a);
  for (auto a : {x + y + m, x + z + m, y + z + m, ce(x + y) + m, fl(x + z) + m, yz + m}) p.down(2 * a);

  p.up(m);
  p.up(m);
  for (auto a : {fl(x), ce(x), fl(y), ce(y), fl(z), ce(z)}) {
    p.up(2 * a);
    p.down(2 * a + m);
  }

  for (auto a : {fl(x + y), ce(x + y), fl(x + z), ce(x + z)}) p.up(2 * a + m);
  p.up(2 * yz + m);
  p.up(2 * yz + m);
  for (auto a : {fl(x + y + z), ce(x + y + z)}) p.down(2 * a + m);
  for (auto a : {fl(x + y), ce(x + z), yz}) p.down(2 * a);
  return p.acc;
}

BigNat cored_count_branch(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t m, ParityBranch b) {
  PiMonomial v;
  switch (b) {
  case ParityBranch::YZ: v = cored_expression(x, y, z, m, branch_rounding(b)); break;
  case ParityBranch::XY: v = cored_expression(z, x, y, m, branch_rounding(b)); break;
  case ParityBranch::XZ: v = cored_expression(y, z, x, m, branch_rounding(b)); break;
  }
  if (!v.is_integral()) {
    throw Error(ErrorKind::NonIntegralResult, "cored count (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                                  std::to_string(z) + "," + std::to_string(m) + ") evaluated to " +
                                                  v.str());
  }
  return v.q.get_num();
}

BigNat cored_count(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t m) {
  return cored_count_branch(x, y, z, m, applicable_branches(x, y, z).front());
}

// ---------------------------------------------------------------------------
// Two-lobe ferns

BigRat two_lobe_ratio_branch(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t a, std::int64_t b,
                             ParityBranch branch, Rounding rounding) {
  for (auto [v, name] : {std::pair{x, "x"}, {y, "y"}, {z, "z"}, {a, "a"}, {b, "b"}}) require_nonnegative(v, name);
  const bool swap = rounding == Rounding::Interchanged;
  auto fl = [&](std::int64_t n) { return swap ? ce2(n) : fl2(n); };
  auto ce = [&](std::int64_t n) { return swap ? fl2(n) : ce2(n); };

  HRatio r;
  r.up(a).up(b).down(a + b);
  switch (branch) {
  case ParityBranch::YZ: {
    if ((y - z) % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "branch y=z needs y and z of equal parity");
    const std::int64_t yz = (y + z) / 2;
    r.up(ce(x + z)).up(yz).down(ce(x + y));
    r.up(a + fl(x + y)).up(b + ce(x + y)).down(a + b + fl(x + y));
    r.up(a + b + fl(x + z)).down(a + fl(x + z)).down(b + ce(x + z));
    r.up(a + b + yz).down(a + yz).down(b + yz);
    break;
  }
  case ParityBranch::XY: {
    if ((x - y) % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "branch x=y needs x and y of equal parity");
    const std::int64_t xy = (x + y) / 2;
    r.up(fl(x + z)).up(ce(y + z)).down(xy);
    r.up(a + xy).up(b + xy).down(a + b + xy);
    r.up(a + b + ce(x + z)).down(a + ce(x + z)).down(b + fl(x + z));
    r.up(a + b + fl(y + z)).down(a + fl(y + z)).down(b + ce(y + z));
    break;
  }
  case ParityBranch::XZ: {
    if ((x - z) % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "branch x=z needs x and z of equal parity");
    const std::int64_t xz = (x + z) / 2;
    r.up(xz).up(fl(y + z)).down(fl(x + y));
    r.up(a + ce(x + y)).up(b + fl(x + y)).down(a + b + ce(x + y));
    r.up(a + b + xz).down(a + xz).down(b + xz);
    r.up(a + b + ce(y + z)).down(a + ce(y + z)).down(b + fl(y + z));
    break;
  }
  }
  return r.value();
}

BigRat two_lobe_ratio(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t a, std::int64_t b) {
  const auto branch = applicable_branches(x, y, z).front();
  return two_lobe_ratio_branch(x, y, z, a, b, branch, branch_rounding(branch));
}

BigNat fc_two_lobe_count(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t a, std::int64_t b) {
  const BigRat v = two_lobe_ratio(x, y, z, a, b) * BigRat(cored_count(x, y, z, a + b));
  return require_integral(v, "two-lobe count");
}

// ---------------------------------------------------------------------------
// General ferns

BigNat first_s_factor(const FernSpec &spec) {
  const auto a = spec.lobes();
  return spec.k() % 2 == 0 ? semihex_s(a.first(spec.k() - 1)) : semihex_s(a);
}

BigNat s_product(const FernSpec &spec) { return first_s_factor(spec) * semihex_s(spec.lobes().subspan(1)); }

BigRat g_function(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec) {
  require_nonnegative(x, "x");
  require_nonnegative(y, "y");
  require_nonnegative(z, "z");
  const std::int64_t fz = fl2(x + z), cz = ce2(x + z);
  const std::int64_t fy = fl2(x + y), cy = ce2(x + y);
  const std::size_t k = spec.k();

  HRatio r;
  r.num = s_product(spec);
  r.up(fz + spec.o()).down(fy + spec.o());
  r.up(cz + spec.e()).down(cy + spec.e());
  for (std::size_t j = 1; j <= k; j += 2) {
    r.up(fy + spec.prefix(j)).down(fz + spec.prefix(j));
    r.up(cy + spec.complement(j)).down(cz + spec.complement(j));
  }
  for (std::size_t j = 2; j < k; j += 2) {
    r.up(fz + spec.prefix(j)).down(fy + spec.prefix(j));
    r.up(cz + spec.complement(j)).down(cy + spec.complement(j));
  }
  return r.value();
}

BigRat theorem21_ratio(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec) {
  return g_function(x, y, z, spec);
}

BigNat fc_count_formula(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec) {
  const BigRat v = theorem21_ratio(x, y, z, spec) * BigRat(fc_two_lobe_count(x, y, z, spec.o(), spec.e()));
  return require_integral(v, "F-cored count for (" + spec.str() + ")");
}

} // namespace fernhex
