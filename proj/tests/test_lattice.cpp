#include <doctest.h>

#include "fernhex/counter.hpp"
#include "fernhex/lattice.hpp"
#include "fernhex/region_builder.hpp"
#include "support.hpp"

using namespace fernhex;
using fernhex::testing::require_kind;

namespace {

std::vector<LatticeVec> corners(const UnitTriangle &t) {
  auto c = triangle_corners(t);
  return {c.begin(), c.end()};
}

} // namespace

TEST_CASE("triangle corners") {
  using V = std::vector<LatticeVec>;
  CHECK(corners(UnitTriangle::up(0, 0)) == V{LatticeVec::of(0, 0), LatticeVec::of(1, 0), LatticeVec::of(0, 1)});
  CHECK(corners(UnitTriangle::up(2, 0)) == V{LatticeVec::of(2, 0), LatticeVec::of(3, 0), LatticeVec::of(2, 1)});
  // counterclockwise from (u+1,v)
  CHECK(corners(UnitTriangle::down(0, 0)) == V{LatticeVec::of(1, 0), LatticeVec::of(1, 1), LatticeVec::of(0, 1)});
}

TEST_CASE("centroids") {
  CHECK(centroid3(UnitTriangle::up(0, 0)) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK(centroid3(UnitTriangle::down(0, 0)) == std::pair<std::int64_t, std::int64_t>{2, 2});
  CHECK(centroid3(UnitTriangle::down(-1, 3)) == std::pair<std::int64_t, std::int64_t>{-1, 11});
}

TEST_CASE("cell order is (v, u, orient)") {
  TriRegion r({UnitTriangle::down(0, 0), UnitTriangle::up(5, -1), UnitTriangle::up(0, 0), UnitTriangle::up(0, 0)});
  REQUIRE(r.size() == 3);
  CHECK(r.cells()[0] == UnitTriangle::up(5, -1));
  CHECK(r.cells()[1] == UnitTriangle::up(0, 0));
  CHECK(r.cells()[2] == UnitTriangle::down(0, 0));
}

TEST_CASE("half integers") {
  CHECK(HalfInt::half(3).str() == "3/2");
  CHECK(HalfInt(2).str() == "2");
  CHECK(HalfInt::half(-1).str() == "-1/2");
  CHECK((HalfInt::half(1) + HalfInt::half(1)).to_integer() == 1);
}

TEST_CASE("balance") {
  CHECK(region_balance(TriRegion{}) == 0);
  CHECK(region_balance(TriRegion({UnitTriangle::up(0, 0)})) == 1);
  CHECK(region_balance(fern_cells(LatticeVec::of(0, 0), FernSpec({1, 1, 1}))) == 1);
  // a lobe of side a: a(a+1)/2 up, a(a-1)/2 down
  for (std::int64_t a = 0; a <= 5; ++a) {
    auto up = fern_cells(LatticeVec::of(0, 0), FernSpec({a}));
    CHECK(region_balance(up) == a);
    CHECK(up.size() == static_cast<std::size_t>(a * a));
    auto down = fern_cells(LatticeVec::of(0, 0), FernSpec({0, a}));
    CHECK(region_balance(down) == -a);
  }
}

TEST_CASE("dual graph") {
  auto lozenge = TriRegion({UnitTriangle::up(0, 0), UnitTriangle::down(0, 0)});
  CHECK(dual_graph(lozenge).edges.size() == 1);
  CHECK(dual_graph(TriRegion({UnitTriangle::up(0, 0)})).edges.empty());

  SUBCASE("unit hexagon is a 6-cycle") {
    auto g = dual_graph(hexagon({1, 1, 1, 1, 1, 1}));
    CHECK(g.up_nodes.size() == 3);
    CHECK(g.down_nodes.size() == 3);
    CHECK(g.edges.size() == 6);
    std::vector<int> deg(6, 0);
    for (auto [a, b] : g.edges) {
      ++deg[a];
      ++deg[3 + b];
    }
    for (int d : deg) CHECK(d == 2);
    CHECK(dual_components(g).size() == 1);
    auto faces = dual_faces(g);
    REQUIRE(faces.size() == 2);
    int outer = 0;
    for (const auto &f : faces) {
      CHECK(f.walk.size() == 6);
      outer += f.outer;
    }
    CHECK(outer == 1);
  }

  SUBCASE("adjacency rule") {
    auto g = dual_graph(TriRegion({UnitTriangle::up(0, 0), UnitTriangle::down(0, 0), UnitTriangle::down(-1, 0),
                                   UnitTriangle::down(0, -1), UnitTriangle::down(1, 0), UnitTriangle::down(0, 1)}));
    CHECK(g.edges.size() == 3);
  }

  SUBCASE("deterministic") {
    auto r = f_cored_hexagon(2, 3, 3, FernSpec({1, 2}));
    CHECK(dual_graph(r) == dual_graph(TriRegion(std::vector<UnitTriangle>(r.cells().rbegin(), r.cells().rend()))));
  }
}

TEST_CASE("faces: Euler and a bridge") {
  // V - E + F = 2 for a connected plane graph
  auto r = hexagon({2, 2, 2, 2, 2, 2});
  auto g = dual_graph(r);
  auto faces = dual_faces(g);
  const auto v = g.up_nodes.size() + g.down_nodes.size();
  CHECK(v - g.edges.size() + faces.size() == 2);

  // a path of three cells: one face that uses each edge twice
  auto path = dual_graph(TriRegion({UnitTriangle::up(0, 0), UnitTriangle::down(0, 0), UnitTriangle::up(1, 0)}));
  auto pf = dual_faces(path);
  REQUIRE(pf.size() == 1);
  CHECK(pf[0].outer);
  CHECK(pf[0].edges.size() == 4);
}

TEST_CASE("transforms") {
  SUBCASE("rotate a single up cell") {
    auto r = transform(TriRegion({UnitTriangle::up(0, 0)}), Rotate180{{HalfInt::half(1), HalfInt::half(1)}});
    CHECK(r == TriRegion({UnitTriangle::down(0, 0)}));
  }
  SUBCASE("mirror a single up cell across v=0") {
    auto r = transform(TriRegion({UnitTriangle::up(0, 0)}), MirrorHorizontal{HalfInt(0)});
    REQUIRE(r.size() == 1);
    CHECK(!r.cells()[0].is_up());
    auto c = triangle_corners(r.cells()[0]);
    int on_line = 0;
    for (const auto &p : c) on_line += p.v == HalfInt(0);
    CHECK(on_line == 2);
  }
  SUBCASE("mirror needs a lattice line") {
    require_kind(ErrorKind::NonLatticeTransform,
                 [] { transform(TriRegion({UnitTriangle::up(0, 0)}), MirrorHorizontal{HalfInt::half(1)}); });
  }
  SUBCASE("symmetric hexagon is fixed by rotation about its center") {
    // sides (a,b,c,a,b,c) with (a,b,c) = (1,2,1): center ((a+b)/2, (c-b)/2)
    auto h = hexagon({1, 2, 1, 1, 2, 1});
    CHECK(transform(h, Rotate180{{HalfInt::half(3), HalfInt::half(-1)}}) == h);
  }
  SUBCASE("(1,2,1,2,1,2) is not centrally symmetric") {
    auto h = hexagon({1, 2, 1, 2, 1, 2});
    CHECK(region_balance(transform(h, Rotate180{{HalfInt(1), HalfInt(0)}})) == -region_balance(h));
  }
}

TEST_CASE("transforms preserve counts and negate balance") {
  const std::vector<TriRegion> regions = {
      hexagon({2, 1, 3, 2, 1, 3}), f_cored_hexagon(2, 3, 3, FernSpec({1, 2})),
      f_cored_hexagon(2, 2, 1, FernSpec({1, 1, 1})), hexagon({1, 2, 1, 2, 1, 2}),
      semihexagon_S(std::vector<std::int64_t>{2, 1, 1})};
  for (const auto &r : regions) {
    const auto n = count_tilings(r);
    for (auto rot : {Rotate180{{HalfInt(0), HalfInt(0)}}, Rotate180{{HalfInt::half(1), HalfInt::half(-3)}}}) {
      auto img = transform(r, rot);
      CHECK(img.size() == r.size());
      CHECK(region_balance(img) == -region_balance(r));
      CHECK(count_tilings(img) == n);
    }
    for (std::int64_t line : {0, 3, -2}) {
      auto img = transform(r, MirrorHorizontal{HalfInt(line)});
      CHECK(img.size() == r.size());
      CHECK(region_balance(img) == -region_balance(r));
      CHECK(count_tilings(img) == n);
    }
  }
}

TEST_CASE("json round trip") {
  auto r = f_cored_hexagon(1, 2, 2, FernSpec({1, 1}));
  auto text = region_to_json(r);
  CHECK(region_from_json(text) == r);
  CHECK(region_to_json(TriRegion{}) == R"({"triangles":[]})");
  CHECK(region_to_json(TriRegion({UnitTriangle::down(-1, 2)})) ==
        R"({"triangles":[{"u":-1,"v":2,"orient":"down"}]})");
  require_kind(ErrorKind::InvalidInput, [] { region_from_json("{"); });
  require_kind(ErrorKind::InvalidInput, [] { region_from_json(R"({"triangles":[{"u":0,"v":0,"orient":"left"}]})"); });
  require_kind(ErrorKind::InvalidInput, [] { region_from_json(R"({"cells":[]})"); });
}
