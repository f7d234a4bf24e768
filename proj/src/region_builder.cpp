#include "fernhex/region_builder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fernhex {

namespace {

void require_nonnegative(std::int64_t value, const char *what) {
  if (value < 0) {
    throw Error(ErrorKind::NegativeArgument, std::string(what) + " must be nonnegative, got " +
                                                 std::to_string(value));
  }
}

// Cells whose centroid lies strictly inside a convex lattice polygon. Polygon
// edges lie on lattice lines and centroids never do, so "strictly" is exact.
// Degenerate polygons (all vertices collinear) contain nothing.
std::vector<UnitTriangle> cells_in_convex(std::span<const std::pair<std::int64_t, std::int64_t>> poly) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (const auto &p : poly) {
    if (pts.empty() || pts.back() != p) pts.push_back(p);
  }
  while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  if (pts.size() < 3) return {};

  std::int64_t umin = pts[0].first, umax = umin, vmin = pts[0].second, vmax = vmin;
  for (const auto &[u, v] : pts) {
    umin = std::min(umin, u);
    umax = std::max(umax, u);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }

  auto inside = [&](std::int64_t px, std::int64_t py) {
    int sign = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto [ax, ay] = pts[i];
      const auto [bx, by] = pts[(i + 1) % pts.size()];
      const std::int64_t cross = (3 * bx - 3 * ax) * (py - 3 * ay) - (3 * by - 3 * ay) * (px - 3 * ax);
      const int s = cross > 0 ? 1 : (cross < 0 ? -1 : 0);
      if (s == 0) return false;
      if (sign == 0) sign = s;
      if (s != sign) return false;
    }
    return true;
  };

  std::vector<UnitTriangle> out;
  for (std::int64_t v = vmin; v < vmax; ++v) {
    for (std::int64_t u = umin - (vmax - vmin); u <= umax; ++u) {
      for (auto cell : {UnitTriangle::up(u, v), UnitTriangle::down(u, v)}) {
        const auto [cx, cy] = centroid3(cell);
        if (inside(cx, cy)) out.push_back(cell);
      }
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> as_point(const LatticeVec &p) {
  return {p.u.to_integer(), p.v.to_integer()};
}

} // namespace

// ---------------------------------------------------------------------------
// FernSpec

FernSpec::FernSpec(std::vector<std::int64_t> lobes) : lobes_(std::move(lobes)) {
  if (lobes_.empty()) {
    throw Error(ErrorKind::InvalidInput, "a fern needs at least one lobe");
  }
  for (std::size_t i = 0; i < lobes_.size(); ++i) {
    require_nonnegative(lobes_[i], "lobe size");
    (i % 2 == 0 ? o_ : e_) += lobes_[i];
  }
}

std::int64_t FernSpec::prefix(std::size_t i) const {
  return std::accumulate(lobes_.begin(), lobes_.begin() + static_cast<std::ptrdiff_t>(std::min(i, k())),
                         std::int64_t{0});
}

FernSpec FernSpec::reversed() const { return FernSpec(std::vector<std::int64_t>(lobes_.rbegin(), lobes_.rend())); }

FernSpec FernSpec::padded_even() const {
  auto lobes = lobes_;
  if (lobes.size() % 2 == 1) lobes.push_back(0);
  return FernSpec(std::move(lobes));
}

std::string FernSpec::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < lobes_.size(); ++i) {
    os << (i ? "," : "") << lobes_[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Placement

std::string_view to_string(PlacementKind k) {
  switch (k) {
  case PlacementKind::Center: return "center";
  case PlacementKind::West: return "west";
  case PlacementKind::SouthWest: return "southwest";
  case PlacementKind::NorthWest: return "northwest";
  }
  return "?";
}

PlacementKind placement_kind(std::int64_t x, std::int64_t y, std::int64_t z) {
  const bool px = x % 2 != 0, py = y % 2 != 0, pz = z % 2 != 0;
  if (px == py && py == pz) return PlacementKind::Center;
  if (py == pz) return PlacementKind::West;
  if (px == py) return PlacementKind::SouthWest;
  return PlacementKind::NorthWest;
}

LatticeVec placement_offset(PlacementKind k) {
  switch (k) {
  case PlacementKind::Center: return {HalfInt(0), HalfInt(0)};
  case PlacementKind::West: return {HalfInt::half(-1), HalfInt(0)};
  case PlacementKind::SouthWest: return {HalfInt(0), HalfInt::half(-1)};
  case PlacementKind::NorthWest: return {HalfInt::half(-1), HalfInt::half(1)};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Hexagons and trapezoids

std::array<LatticeVec, 6> hexagon_vertices(const std::array<std::int64_t, 6> &sides) {
  for (auto s : sides) require_nonnegative(s, "hexagon side");
  // walk order: upper-left, top, upper-right, lower-right, bottom, lower-left
  const std::array<std::pair<std::int64_t, std::int64_t>, 6> dirs{
      {{0, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}}};
  const std::array<std::int64_t, 6> lengths{sides[5], sides[0], sides[1], sides[2], sides[3], sides[4]};
  std::array<LatticeVec, 6> verts;
  std::int64_t u = 0, v = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    verts[i] = LatticeVec::of(u, v);
    u += dirs[i].first * lengths[i];
    v += dirs[i].second * lengths[i];
  }
  if (u != 0 || v != 0) {
    std::ostringstream os;
    os << "hexagon sides (" << sides[0] << "," << sides[1] << "," << sides[2] << "," << sides[3] << ","
       << sides[4] << "," << sides[5] << ") leave the walk at (" << u << "," << v << ")";
    throw Error(ErrorKind::NonClosingBoundary, os.str());
  }
  return verts;
}

TriRegion hexagon(const std::array<std::int64_t, 6> &sides) {
  const auto verts = hexagon_vertices(sides);
  std::vector<std::pair<std::int64_t, std::int64_t>> poly;
  for (const auto &p : verts) poly.push_back(as_point(p));
  return TriRegion(cells_in_convex(poly));
}

TriRegion trapezoid_with_dents(std::int64_t m, std::int64_t n, std::span<const std::int64_t> dents) {
  require_nonnegative(m, "trapezoid top");
  require_nonnegative(n, "trapezoid leg");
  if (static_cast<std::int64_t>(dents.size()) != n) {
    throw Error(ErrorKind::BadDentCount, "expected " + std::to_string(n) + " dents, got " +
                                             std::to_string(dents.size()));
  }
  for (std::size_t i = 0; i < dents.size(); ++i) {
    if (dents[i] < 1 || dents[i] > m + n) {
      throw Error(ErrorKind::DentOutOfRange, "dent " + std::to_string(dents[i]) + " outside 1.." +
                                                 std::to_string(m + n));
    }
    if (i > 0 && dents[i] <= dents[i - 1]) {
      throw Error(ErrorKind::BadDentPositions, "dent positions must be strictly increasing");
    }
  }
  std::vector<UnitTriangle> cells;
  for (std::int64_t v = 0; v < n; ++v) {
    for (std::int64_t u = 0; u < m + n - v; ++u) cells.push_back(UnitTriangle::up(u, v));
    for (std::int64_t u = 0; u + 1 < m + n - v; ++u) cells.push_back(UnitTriangle::down(u, v));
  }
  TriRegion full(std::move(cells));
  std::vector<UnitTriangle> removed;
  for (auto x : dents) removed.push_back(UnitTriangle::up(x - 1, 0));
  return full.without(removed);
}

std::vector<std::int64_t> semihexagon_dents(std::span<const std::int64_t> blocks) {
  std::vector<std::int64_t> dents;
  std::int64_t pos = 1;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    require_nonnegative(blocks[i], "block length");
    if (i % 2 == 0) {
      for (std::int64_t j = 0; j < blocks[i]; ++j) dents.push_back(pos + j);
    }
    pos += blocks[i];
  }
  return dents;
}

TriRegion semihexagon_S(std::span<const std::int64_t> blocks) {
  const auto dents = semihexagon_dents(blocks);
  const std::int64_t base = std::accumulate(blocks.begin(), blocks.end(), std::int64_t{0});
  const auto n = static_cast<std::int64_t>(dents.size());
  return trapezoid_with_dents(base - n, n, dents);
}

// ---------------------------------------------------------------------------
// Ferns

TriRegion fern_cells(const LatticeVec &base, const FernSpec &spec) {
  if (!base.is_lattice_point()) {
    throw Error(ErrorKind::InvalidInput, "fern base must be a lattice point");
  }
  const auto [bu, bv] = as_point(base);
  std::vector<UnitTriangle> cells;
  std::int64_t offset = 0;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const std::int64_t a = spec.lobe(i);
    const std::int64_t pu = bu + offset;
    if (a > 0) {
      std::vector<std::pair<std::int64_t, std::int64_t>> tri;
      if (i % 2 == 0) {
        tri = {{pu, bv}, {pu + a, bv}, {pu, bv + a}};
      } else {
        tri = {{pu, bv}, {pu + a, bv}, {pu + a, bv - a}};
      }
      auto lobe = cells_in_convex(tri);
      cells.insert(cells.end(), lobe.begin(), lobe.end());
    }
    offset += a;
  }
  return TriRegion(std::move(cells));
}

FCoredLayout f_cored_layout(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec) {
  require_nonnegative(x, "x");
  require_nonnegative(y, "y");
  require_nonnegative(z, "z");
  const std::int64_t o = spec.o();
  const std::int64_t e = spec.e();

  FCoredLayout L;
  L.core = {x, y, z};
  L.kind = placement_kind(x, y, z);
  L.sides = {x + e, y + o, z + e, x + o, y + e, z + o};
  // mean of the auxiliary hexagon's vertices (0,0),(0,z),(x,z),(x+y,z-y),(x+y,-y),(y,-y)
  L.aux_center = {HalfInt::half(x + y), HalfInt::half(z - y)};
  L.base_point = L.aux_center + placement_offset(L.kind);
  // the eastern corner of H sits (o+e, 0) east of the auxiliary hexagon's eastern corner
  L.east_aux_center = L.aux_center + LatticeVec::of(o + e, 0);
  L.fern_tip = L.base_point + LatticeVec::of(o + e, 0);

  L.outer = hexagon(L.sides);
  L.fern = fern_cells(L.base_point, spec);
  for (const auto &c : L.fern.cells()) {
    if (!L.outer.contains(c)) {
      std::ostringstream os;
      os << "fern (" << spec.str() << ") cell " << (c.is_up() ? "Up" : "Down") << "(" << c.u << "," << c.v
         << ") lies outside the hexagon for x=" << x << " y=" << y << " z=" << z;
      throw Error(ErrorKind::FernDoesNotFit, os.str());
    }
  }
  L.region = L.outer.minus(L.fern);
  return L;
}

TriRegion f_cored_hexagon(std::int64_t x, std::int64_t y, std::int64_t z, const FernSpec &spec) {
  return f_cored_layout(x, y, z, spec).region;
}

TriRegion cored_hexagon(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t m) {
  return f_cored_hexagon(x, y, z, FernSpec({m}));
}

TriRegion envelope_H_F(const FernSpec &spec) { return f_cored_hexagon(0, 0, 0, spec); }

} // namespace fernhex
