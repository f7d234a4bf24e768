#pragma once

// Constructors for every region family: hexagons, dented trapezoids and
// semihexagons, ferns, F-cored hexagons and their special cases.
//
// All hexagons are anchored with their western corner at the origin.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fernhex/lattice.hpp"

namespace fernhex {

/// Lobe sizes (a_1, ..., a_k), k >= 1. Odd-indexed lobes point up.
class FernSpec {
public:
  explicit FernSpec(std::vector<std::int64_t> lobes);

  std::span<const std::int64_t> lobes() const { return lobes_; }
  std::size_t k() const { return lobes_.size(); }
  std::int64_t lobe(std::size_t i) const { return lobes_.at(i); }  // 0-based

  /// a_1 + a_3 + a_5 + ...
  std::int64_t o() const { return o_; }
  /// a_2 + a_4 + a_6 + ...
  std::int64_t e() const { return e_; }
  std::int64_t total() const { return o_ + e_; }

  /// a_1 + ... + a_i
  std::int64_t prefix(std::size_t i) const;
  /// a_{i+1} + ... + a_k
  std::int64_t complement(std::size_t i) const { return total() - prefix(i); }

  FernSpec reversed() const;
  /// Appends a trailing zero lobe when k is odd.
  FernSpec padded_even() const;
  /// The two-lobe fern (o, e).
  FernSpec flattened() const { return FernSpec({o_, e_}); }

  std::string str() const;

  friend bool operator==(const FernSpec &a, const FernSpec &b) { return a.lobes_ == b.lobes_; }

private:
  std::vector<std::int64_t> lobes_;
  std::int64_t o_ = 0;
  std::int64_t e_ = 0;
};

struct CoreHexSpec {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
};

enum class PlacementKind { Center, West, SouthWest, NorthWest };

std::string_view to_string(PlacementKind k);

/// Center if x, y, z share parity; otherwise named after the displacement of
/// the fern base from the auxiliary-hexagon center.
PlacementKind placement_kind(std::int64_t x, std::int64_t y, std::int64_t z);

/// Offset of the fern base from the auxiliary center for each kind.
LatticeVec placement_offset(PlacementKind k);

/// Six side lengths, clockwise from the top side. The boundary is walked from
/// the western corner along directions +e2, +e1, e1-e2, -e2, -e1, e2-e1.
/// Throws NonClosingBoundary if the walk does not return to the origin.
TriRegion hexagon(const std::array<std::int64_t, 6> &sides);

/// Boundary vertices of the hexagon walk, starting at the western corner.
std::array<LatticeVec, 6> hexagon_vertices(const std::array<std::int64_t, 6> &sides);

/// Trapezoid with sides m, n, m+n, n (clockwise from top), bottom-left corner
/// at the origin, minus the Up cells at base positions dents (1-based).
TriRegion trapezoid_with_dents(std::int64_t m, std::int64_t n, std::span<const std::int64_t> dents);

/// Dent positions of S(b_1, ..., b_l): the odd-indexed blocks are removed.
std::vector<std::int64_t> semihexagon_dents(std::span<const std::int64_t> blocks);
TriRegion semihexagon_S(std::span<const std::int64_t> blocks);

/// Cells of the fern with its leftmost point at `base`.
TriRegion fern_cells(const LatticeVec &base, const FernSpec &spec);

/// Everything that goes into an F-cored hexagon, kept for rendering and checks.
struct FCoredLayout {
  CoreHexSpec core;
  PlacementKind kind = PlacementKind::Center;
  std::array<std::int64_t, 6> sides{};
  LatticeVec aux_center;   // center of the auxiliary x,y,z hexagon
  LatticeVec base_point;   // leftmost point of the fern
  LatticeVec east_aux_center;  // auxiliary hexagon translated into the eastern corner
  LatticeVec fern_tip;     // rightmost point of the fern
  TriRegion outer;         // the hexagon H
  TriRegion fern;
  TriRegion region;        // outer minus fern
};

/// Throws FernDoesNotFit naming the first fern cell outside H.
FCoredLayout f_cored_layout(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec);
TriRegion f_cored_hexagon(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec);
TriRegion cored_hexagon(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t m);
/// The x=y=z=0 F-cored hexagon: the smallest balanced hexagon around the fern, minus the fern.
TriRegion envelope_H_F(const FernSpec &spec);

} // namespace fernhex
