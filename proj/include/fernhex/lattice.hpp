#pragma once

// Triangular-lattice geometry in oblique coordinates.
//
// Basis: e1 is the unit step east, e2 the unit step at 60 degrees (northeast).
// A point u*e1 + v*e2 has Cartesian position (u + v/2, v*sqrt(3)/2).
//
//   Up(u,v)   has corners (u,v), (u+1,v), (u,v+1)
//   Down(u,v) has corners (u+1,v), (u,v+1), (u+1,v+1)
//
// Cells are ordered lexicographically by (v, u, orient) with Up before Down.
// Every sweep, matrix and serialization in the library uses that order.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fernhex/error.hpp"

namespace fernhex {

/// Integer or exact half-integer, stored as twice its value.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t integer) : twice_(2 * integer) {}

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt half(std::int64_t numerator) { return from_twice(numerator); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Precondition: is_integer().
  std::int64_t to_integer() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const;

private:
  std::int64_t twice_ = 0;
};

struct LatticeVec {
  HalfInt u;
  HalfInt v;

  static constexpr LatticeVec of(std::int64_t u, std::int64_t v) { return {HalfInt(u), HalfInt(v)}; }
  constexpr bool is_lattice_point() const { return u.is_integer() && v.is_integer(); }

  friend constexpr LatticeVec operator+(LatticeVec a, LatticeVec b) { return {a.u + b.u, a.v + b.v}; }
  friend constexpr LatticeVec operator-(LatticeVec a, LatticeVec b) { return {a.u - b.u, a.v - b.v}; }
  friend constexpr auto operator<=>(const LatticeVec &, const LatticeVec &) = default;
};

enum class Orient : std::uint8_t { Up = 0, Down = 1 };

struct UnitTriangle {
  std::int64_t u = 0;
  std::int64_t v = 0;
  Orient orient = Orient::Up;

  static constexpr UnitTriangle up(std::int64_t u, std::int64_t v) { return {u, v, Orient::Up}; }
  static constexpr UnitTriangle down(std::int64_t u, std::int64_t v) { return {u, v, Orient::Down}; }

  constexpr bool is_up() const { return orient == Orient::Up; }

  friend constexpr bool operator==(const UnitTriangle &, const UnitTriangle &) = default;
  friend constexpr auto operator<=>(const UnitTriangle &a, const UnitTriangle &b) {
    if (auto c = a.v <=> b.v; c != 0) return c;
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.orient <=> b.orient;
  }
};

/// Corners counterclockwise, starting at (u,v) for Up and (u+1,v) for Down.
std::array<LatticeVec, 3> triangle_corners(const UnitTriangle &t);

/// Centroid scaled by 3, so it is an integer point in oblique coordinates.
std::pair<std::int64_t, std::int64_t> centroid3(const UnitTriangle &t);

/// A finite set of unit triangles, kept sorted and free of duplicates.
class TriRegion {
public:
  TriRegion() = default;
  explicit TriRegion(std::vector<UnitTriangle> cells);

  std::span<const UnitTriangle> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(const UnitTriangle &t) const;

  std::size_t up_count() const;
  std::size_t down_count() const { return size() - up_count(); }

  /// Cells of this region that are not in `other`.
  TriRegion minus(const TriRegion &other) const;
  TriRegion without(std::span<const UnitTriangle> removed) const;
  bool is_subset_of(const TriRegion &other) const;

  friend bool operator==(const TriRegion &, const TriRegion &) = default;

private:
  std::vector<UnitTriangle> cells_;
};

/// #Up - #Down. Regions with nonzero balance have no tilings.
std::int64_t region_balance(const TriRegion &r);

/// Bipartite adjacency between Up and Down cells sharing a full lattice edge.
///
/// Node order is the region's cell order restricted to each colour, so two
/// calls on equal regions produce identical graphs.
struct DualGraph {
  std::vector<UnitTriangle> up_nodes;
  std::vector<UnitTriangle> down_nodes;
  /// (up index, down index), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  friend bool operator==(const DualGraph &, const DualGraph &) = default;
};

DualGraph dual_graph(const TriRegion &r);

/// One face of the dual graph embedded with nodes at cell centroids.
///
/// Nodes are numbered up-first: up node i is i, down node j is up_nodes.size()+j.
/// The walk lists darts (from, to) with the face on the left; an edge with the
/// same face on both sides (a bridge) appears twice.
struct DualFace {
  std::vector<std::size_t> walk;   // node sequence, closed implicitly
  std::vector<std::size_t> edges;  // edge index for each step walk[i] -> walk[i+1]
  std::int64_t twice_area9 = 0;    // signed area * 2 in centroid3 units; > 0 for bounded faces
  std::size_t component = 0;
  bool outer = false;
};

/// All faces of every connected component. Each component with at least one
/// edge contributes exactly one outer face; isolated nodes contribute none.
std::vector<DualFace> dual_faces(const DualGraph &g);

/// Node ids of each connected component (up-first numbering as in DualFace).
std::vector<std::vector<std::size_t>> dual_components(const DualGraph &g);

struct Rotate180 {
  LatticeVec center;
};
struct MirrorHorizontal {
  HalfInt line_v;  // the mirror is the horizontal line v = line_v
};

TriRegion transform(const TriRegion &r, const Rotate180 &t);
/// Throws NonLatticeTransform unless line_v is an integer lattice line.
TriRegion transform(const TriRegion &r, const MirrorHorizontal &t);

/// {"triangles":[{"u":..,"v":..,"orient":"up"|"down"}]} sorted by (v,u,orient).
std::string region_to_json(const TriRegion &r);
/// Throws InvalidInput on malformed documents.
TriRegion region_from_json(const std::string &text);

} // namespace fernhex
