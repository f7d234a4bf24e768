#include <doctest.h>

#include "fernhex/region_builder.hpp"
#include "render.hpp"

using namespace fernhex;

TEST_CASE("ascii") {
  CHECK(render_ascii(TriRegion{}) == "");
  CHECK(render_ascii(hexagon({1, 1, 1, 1, 1, 1})) == "^v^\nv^v\n");
  CHECK(render_ascii(TriRegion({UnitTriangle::up(0, 0)}), TriRegion({UnitTriangle::up(0, 0)})) == "*\n");
  auto l = f_cored_layout(2, 2, 2, FernSpec({1, 1}));
  auto pic = render_ascii(l.region, l.fern);
  CHECK(std::count(pic.begin(), pic.end(), '*') == 2);
  CHECK(std::count(pic.begin(), pic.end(), '^') + std::count(pic.begin(), pic.end(), 'v') ==
        static_cast<long>(l.region.size()));
}

TEST_CASE("svg is deterministic") {
  auto l = f_cored_layout(2, 6, 4, FernSpec({1, 2, 6, 3}));
  auto a = render_svg(l.region, l.fern);
  auto b = render_svg(l.region, l.fern);
  CHECK(a == b);
  CHECK(a.rfind("<?xml", 0) == 0);
  std::size_t polygons = 0;
  for (auto p = a.find("<polygon"); p != std::string::npos; p = a.find("<polygon", p + 1)) ++polygons;
  CHECK(polygons == l.region.size() + l.fern.size());
  CHECK(a.find("-0.000") == std::string::npos);
  CHECK(a.find("class=\"fern\"") != std::string::npos);
}

TEST_CASE("csv") {
  CHECK(render_csv(TriRegion({UnitTriangle::up(0, 0), UnitTriangle::down(-1, 2)})) ==
        "u,v,orient\n0,0,up\n-1,2,down\n");
}
