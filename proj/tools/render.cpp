#include "render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace fernhex {

namespace {

std::int64_t column_of(const UnitTriangle &t) { return 2 * t.u + t.v + (t.is_up() ? 1 : 2); }

std::string fmt(double v) {
  if (v == 0) v = 0;  // no "-0.000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

} // namespace

std::string render_ascii(const TriRegion &region, const TriRegion &highlight) {
  std::vector<std::pair<UnitTriangle, char>> marks;
  for (const auto &t : region.cells()) marks.emplace_back(t, t.is_up() ? '^' : 'v');
  for (const auto &t : highlight.cells()) marks.emplace_back(t, '*');
  if (marks.empty()) return "";

  std::int64_t vmin = marks[0].first.v, vmax = vmin, cmin = column_of(marks[0].first);
  for (const auto &[t, c] : marks) {
    vmin = std::min(vmin, t.v);
    vmax = std::max(vmax, t.v);
    cmin = std::min(cmin, column_of(t));
  }
  std::map<std::int64_t, std::string> rows;
  for (const auto &[t, c] : marks) {
    auto &row = rows[t.v];
    const auto col = static_cast<std::size_t>(column_of(t) - cmin);
    if (row.size() <= col) row.resize(col + 1, ' ');
    row[col] = c;
  }
  std::string out;
  for (std::int64_t v = vmax; v >= vmin; --v) {
    out += rows[v];
    out += '\n';
  }
  return out;
}

std::string render_svg(const TriRegion &region, const TriRegion &highlight, double unit) {
  const double h = std::sqrt(3.0) / 2.0;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  auto corners = [&](const UnitTriangle &t) {
    std::array<std::pair<double, double>, 3> pts;
    const auto cs = triangle_corners(t);
    for (std::size_t i = 0; i < 3; ++i) {
      const double u = static_cast<double>(cs[i].u.twice()) / 2.0;
      const double v = static_cast<double>(cs[i].v.twice()) / 2.0;
      pts[i] = {(u + v / 2.0) * unit, -v * h * unit};
    }
    return pts;
  };
  auto grow = [&](const TriRegion &r) {
    for (const auto &t : r.cells()) {
      for (const auto &[x, y] : corners(t)) {
        if (first) {
          xmin = xmax = x;
          ymin = ymax = y;
          first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  };
  grow(region);
  grow(highlight);
  const double pad = unit / 2.0;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(xmin - pad) << ' ' << fmt(ymin - pad) << ' '
     << fmt(xmax - xmin + 2 * pad) << ' ' << fmt(ymax - ymin + 2 * pad) << "\">\n";
  auto draw = [&](const TriRegion &r, const char *cls, const char *fill) {
    os << "<g class=\"" << cls << "\" fill=\"" << fill << "\" stroke=\"#444444\" stroke-width=\"" << fmt(unit / 24.0)
       << "\">\n";
    for (const auto &t : r.cells()) {
      os << "<polygon points=\"";
      bool sep = false;
      for (const auto &[x, y] : corners(t)) {
        os << (sep ? " " : "") << fmt(x) << ',' << fmt(y);
        sep = true;
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  };
  draw(region, "region", "#f2e6c9");
  draw(highlight, "fern", "#2f6f3e");
  os << "</svg>\n";
  return os.str();
}

std::string render_csv(const TriRegion &region) {
  std::string out = "u,v,orient\n";
  for (const auto &t : region.cells()) {
    out += std::to_string(t.u) + "," + std::to_string(t.v) + "," + (t.is_up() ? "up" : "down") + "\n";
  }
  return out;
}

} // namespace fernhex
