#pragma once

// Closed-form tiling counts in exact arithmetic.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fernhex/bignum.hpp"
#include "fernhex/lattice.hpp"
#include "fernhex/region_builder.hpp"

namespace fernhex {

/// 0! 1! ... (n-1)!, memoized. Throws NegativeArgument for n < 0.
BigNat hyperfactorial(std::int64_t n);

/// q * pi^(t/2).
struct PiMonomial {
  BigRat q = 1;
  std::int64_t t = 0;

  bool is_integral() const { return t == 0 && q.get_den() == 1 && sgn(q) >= 0; }
  std::string str() const;

  friend PiMonomial operator*(const PiMonomial &a, const PiMonomial &b) { return {a.q * b.q, a.t + b.t}; }
  friend PiMonomial operator/(const PiMonomial &a, const PiMonomial &b);
  friend bool operator==(const PiMonomial &a, const PiMonomial &b) { return a.q == b.q && a.t == b.t; }
};

/// Integer x gives (H(x), 0); x = n + 1/2 gives prod_{k<n} Gamma(k + 3/2).
PiMonomial hyperfactorial_half(HalfInt x);

BigNat macmahon_P(std::int64_t a, std::int64_t b, std::int64_t c);

/// prod_{i<j} (x_j - x_i)/(j - i) for the dented trapezoid T_{m,n}.
BigNat trapezoid_count(std::int64_t m, std::int64_t n, std::span<const std::int64_t> dents);

/// Tilings of the semihexagon S(b_1, ..., b_l).
BigNat semihex_s(std::span<const std::int64_t> blocks);
inline BigNat semihex_s(std::initializer_list<std::int64_t> blocks) {
  return semihex_s(std::span<const std::int64_t>(blocks.begin(), blocks.size()));
}

/// Hyperfactorials of consecutive block sums, odd-length runs over even-length
/// runs (runs of length >= 2). Diagnostic only: matches semihex_s on symmetric
/// lists such as (1,1,1) but not in general, e.g. (2,1,1) gives 6, not 3.
BigRat semihex_s_run_product(std::span<const std::int64_t> blocks);

/// Which two of x, y, z share parity; selects the form of the cored and
/// two-lobe formulas.
enum class ParityBranch { YZ, XY, XZ };
std::string_view to_string(ParityBranch b);
std::vector<ParityBranch> applicable_branches(std::int64_t x, std::int64_t y, std::int64_t z);

/// Standard: floor and ceiling as in the y,z branch.
/// Interchanged: every floor becomes a ceiling and vice versa.
enum class Rounding { Standard, Interchanged };
Rounding branch_rounding(ParityBranch b);

/// The cored-hexagon product for y = z (mod 2), possibly non-integral when
/// evaluated off its domain. Throws PreconditionViolated if y, z differ in parity.
PiMonomial cored_expression(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t m,
                            Rounding rounding = Rounding::Standard);

/// The branch's substitution applied to cored_expression, checked integral.
BigNat cored_count_branch(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t m, ParityBranch b);
/// Tilings of the cored hexagon C_{x,y,z}(m).
BigNat cored_count(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t m);

/// M(FC_{x,y,z}(a,b)) / M(C_{x,y,z}(a+b)).
BigRat two_lobe_ratio_branch(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t a, std::int64_t b,
                             ParityBranch branch, Rounding rounding);
BigRat two_lobe_ratio(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t a, std::int64_t b);
BigNat fc_two_lobe_count(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t a, std::int64_t b);

/// First s-factor: s(a_1..a_{k-1}) for even k, s(a_1..a_k) for odd k.
BigNat first_s_factor(const FernSpec &spec);
/// first_s_factor * s(a_2..a_k).
BigNat s_product(const FernSpec &spec);

/// M(FC(a_1..a_k)) / M(FC(o,e)).
BigRat theorem21_ratio(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec);
BigRat g_function(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec);
BigNat fc_count_formula(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec);

} // namespace fernhex
