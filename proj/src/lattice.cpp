#include "fernhex/lattice.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace fernhex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NonLatticeTransform: return "NonLatticeTransform";
  case ErrorKind::NonClosingBoundary: return "NonClosingBoundary";
  case ErrorKind::BadDentCount: return "BadDentCount";
  case ErrorKind::DentOutOfRange: return "DentOutOfRange";
  case ErrorKind::BadDentPositions: return "BadDentPositions";
  case ErrorKind::FernDoesNotFit: return "FernDoesNotFit";
  case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
  case ErrorKind::EngineMismatch: return "EngineMismatch";
  case ErrorKind::NonIntegralResult: return "NonIntegralResult";
  case ErrorKind::NegativeArgument: return "NegativeArgument";
  case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  case ErrorKind::DivisionByZero: return "DivisionByZero";
  case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::int64_t HalfInt::to_integer() const {
  if (!is_integer()) {
    throw Error(ErrorKind::NonLatticeTransform, "half-integer " + str() + " is not an integer");
  }
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) {
    return std::to_string(twice_ / 2);
  }
  return std::to_string(twice_) + "/2";
}

std::array<LatticeVec, 3> triangle_corners(const UnitTriangle &t) {
  const auto u = t.u;
  const auto v = t.v;
  if (t.is_up()) {
    return {LatticeVec::of(u, v), LatticeVec::of(u + 1, v), LatticeVec::of(u, v + 1)};
  }
  return {LatticeVec::of(u + 1, v), LatticeVec::of(u + 1, v + 1), LatticeVec::of(u, v + 1)};
}

std::pair<std::int64_t, std::int64_t> centroid3(const UnitTriangle &t) {
  const std::int64_t off = t.is_up() ? 1 : 2;
  return {3 * t.u + off, 3 * t.v + off};
}

// ---------------------------------------------------------------------------
// TriRegion

TriRegion::TriRegion(std::vector<UnitTriangle> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool TriRegion::contains(const UnitTriangle &t) const {
  return std::binary_search(cells_.begin(), cells_.end(), t);
}

std::size_t TriRegion::up_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const UnitTriangle &t) { return t.is_up(); }));
}

TriRegion TriRegion::minus(const TriRegion &other) const {
  std::vector<UnitTriangle> out;
  std::set_difference(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                      std::back_inserter(out));
  TriRegion r;
  r.cells_ = std::move(out);
  return r;
}

TriRegion TriRegion::without(std::span<const UnitTriangle> removed) const {
  return minus(TriRegion(std::vector<UnitTriangle>(removed.begin(), removed.end())));
}

bool TriRegion::is_subset_of(const TriRegion &other) const {
  return std::includes(other.cells_.begin(), other.cells_.end(), cells_.begin(), cells_.end());
}

std::int64_t region_balance(const TriRegion &r) {
  return static_cast<std::int64_t>(r.up_count()) - static_cast<std::int64_t>(r.down_count());
}

// ---------------------------------------------------------------------------
// Dual graph

DualGraph dual_graph(const TriRegion &r) {
  DualGraph g;
  for (const auto &t : r.cells()) {
    (t.is_up() ? g.up_nodes : g.down_nodes).push_back(t);
  }
  auto down_index = [&](const UnitTriangle &t) -> std::ptrdiff_t {
    auto it = std::lower_bound(g.down_nodes.begin(), g.down_nodes.end(), t);
    if (it == g.down_nodes.end() || *it != t) return -1;
    return it - g.down_nodes.begin();
  };
  for (std::size_t i = 0; i < g.up_nodes.size(); ++i) {
    const auto &t = g.up_nodes[i];
    for (auto nb : {UnitTriangle::down(t.u, t.v - 1), UnitTriangle::down(t.u - 1, t.v),
                    UnitTriangle::down(t.u, t.v)}) {
      if (auto j = down_index(nb); j >= 0) {
        g.edges.emplace_back(i, static_cast<std::size_t>(j));
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

struct Rotation {
  // neighbours of each node in counterclockwise angular order, with edge ids
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> around;
};

Rotation rotation_system(const DualGraph &g) {
  const std::size_t n_up = g.up_nodes.size();
  Rotation rot;
  rot.around.resize(n_up + g.down_nodes.size());

  // Angular slot of each neighbour direction (degrees / 30 is enough to sort).
  // Up(u,v):   Down(u,v) at 30, Down(u-1,v) at 150, Down(u,v-1) at 270.
  // Down(u,v): Up(u,v+1) at 90, Up(u,v) at 210, Up(u+1,v) at 330.
  std::vector<std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>>> slots(rot.around.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [i, j] = g.edges[e];
    const auto &up = g.up_nodes[i];
    const auto &dn = g.down_nodes[j];
    int up_angle = 0;
    int dn_angle = 0;
    if (dn.u == up.u && dn.v == up.v) {
      up_angle = 30;
      dn_angle = 210;
    } else if (dn.u == up.u - 1 && dn.v == up.v) {
      up_angle = 150;
      dn_angle = 330;
    } else {
      up_angle = 270;
      dn_angle = 90;
    }
    slots[i].push_back({up_angle, {n_up + j, e}});
    slots[n_up + j].push_back({dn_angle, {i, e}});
  }
  for (std::size_t a = 0; a < slots.size(); ++a) {
    std::sort(slots[a].begin(), slots[a].end());
    for (const auto &s : slots[a]) rot.around[a].push_back(s.second);
  }
  return rot;
}

std::pair<std::int64_t, std::int64_t> node_point(const DualGraph &g, std::size_t node) {
  const std::size_t n_up = g.up_nodes.size();
  return centroid3(node < n_up ? g.up_nodes[node] : g.down_nodes[node - n_up]);
}

} // namespace

std::vector<std::vector<std::size_t>> dual_components(const DualGraph &g) {
  const std::size_t n = g.up_nodes.size() + g.down_nodes.size();
  const auto rot = rotation_system(g);
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    const std::size_t id = out.size();
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const auto a = stack.back();
      stack.pop_back();
      out[id].push_back(a);
      for (const auto &[b, e] : rot.around[a]) {
        if (comp[b] == n) {
          comp[b] = id;
          stack.push_back(b);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<DualFace> dual_faces(const DualGraph &g) {
  const std::size_t n = g.up_nodes.size() + g.down_nodes.size();
  const auto rot = rotation_system(g);
  const auto comps = dual_components(g);
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (auto a : comps[c]) comp_of[a] = c;
  }

  // Darts are (node, slot in its rotation). Position of node b within a's list
  // is found by linear scan; degrees are at most 3.
  auto slot_of = [&](std::size_t at, std::size_t nb) {
    const auto &ar = rot.around[at];
    for (std::size_t k = 0; k < ar.size(); ++k) {
      if (ar[k].first == nb) return k;
    }
    return ar.size();
  };

  std::vector<std::vector<bool>> used(n);
  for (std::size_t a = 0; a < n; ++a) used[a].assign(rot.around[a].size(), false);

  std::vector<DualFace> faces;
  for (std::size_t a0 = 0; a0 < n; ++a0) {
    for (std::size_t k0 = 0; k0 < rot.around[a0].size(); ++k0) {
      if (used[a0][k0]) continue;
      DualFace f;
      f.component = comp_of[a0];
      std::size_t a = a0;
      std::size_t k = k0;
      while (!used[a][k]) {
        used[a][k] = true;
        const auto [b, e] = rot.around[a][k];
        f.walk.push_back(a);
        f.edges.push_back(e);
        // next dart leaves b towards the neighbour just clockwise of a
        const auto &ar = rot.around[b];
        const std::size_t back = slot_of(b, a);
        k = (back + ar.size() - 1) % ar.size();
        a = b;
      }
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < f.walk.size(); ++i) {
        const auto [x0, y0] = node_point(g, f.walk[i]);
        const auto [x1, y1] = node_point(g, f.walk[(i + 1) % f.walk.size()]);
        acc += x0 * y1 - x1 * y0;
      }
      f.twice_area9 = acc;
      f.outer = acc <= 0;
      faces.push_back(std::move(f));
    }
  }
  return faces;
}

// ---------------------------------------------------------------------------
// Symmetries

TriRegion transform(const TriRegion &r, const Rotate180 &t) {
  // p -> 2c - p maps Up(u,v) to Down(U-1,V-1) and Down(u,v) to Up(U-1,V-1),
  // with (U,V) = 2c - (u,v); 2c is always integral.
  const std::int64_t cu2 = t.center.u.twice();
  const std::int64_t cv2 = t.center.v.twice();
  std::vector<UnitTriangle> out;
  out.reserve(r.size());
  for (const auto &c : r.cells()) {
    const std::int64_t U = cu2 - c.u;
    const std::int64_t V = cv2 - c.v;
    out.push_back({U - 1, V - 1, c.is_up() ? Orient::Down : Orient::Up});
  }
  return TriRegion(std::move(out));
}

TriRegion transform(const TriRegion &r, const MirrorHorizontal &t) {
  if (!t.line_v.is_integer()) {
    throw Error(ErrorKind::NonLatticeTransform,
                "mirror line v = " + t.line_v.str() + " is not a lattice line");
  }
  // (u,v) -> (u + v - c, 2c - v)
  const std::int64_t c = t.line_v.to_integer();
  std::vector<UnitTriangle> out;
  out.reserve(r.size());
  for (const auto &cell : r.cells()) {
    const std::int64_t A = cell.u + cell.v - c;
    const std::int64_t B = 2 * c - cell.v;
    out.push_back(cell.is_up() ? UnitTriangle::down(A, B - 1) : UnitTriangle::up(A + 1, B - 1));
  }
  return TriRegion(std::move(out));
}

// ---------------------------------------------------------------------------
// JSON

std::string region_to_json(const TriRegion &r) {
  nlohmann::ordered_json doc;
  doc["triangles"] = nlohmann::ordered_json::array();
  for (const auto &t : r.cells()) {
    nlohmann::ordered_json cell;
    cell["u"] = t.u;
    cell["v"] = t.v;
    cell["orient"] = t.is_up() ? "up" : "down";
    doc["triangles"].push_back(std::move(cell));
  }
  return doc.dump();
}

TriRegion region_from_json(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::InvalidInput, std::string("region JSON does not parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("triangles") || !doc["triangles"].is_array()) {
    throw Error(ErrorKind::InvalidInput, "region JSON needs a \"triangles\" array");
  }
  std::vector<UnitTriangle> cells;
  for (const auto &cell : doc["triangles"]) {
    if (!cell.is_object() || !cell.contains("u") || !cell.contains("v") || !cell.contains("orient") ||
        !cell["u"].is_number_integer() || !cell["v"].is_number_integer() || !cell["orient"].is_string()) {
      throw Error(ErrorKind::InvalidInput, "triangle entries need integer u, v and string orient");
    }
    const auto orient = cell["orient"].get<std::string>();
    if (orient != "up" && orient != "down") {
      throw Error(ErrorKind::InvalidInput, "orient must be \"up\" or \"down\", got \"" + orient + "\"");
    }
    cells.push_back({cell["u"].get<std::int64_t>(), cell["v"].get<std::int64_t>(),
                     orient == "up" ? Orient::Up : Orient::Down});
  }
  return TriRegion(std::move(cells));
}

} // namespace fernhex
