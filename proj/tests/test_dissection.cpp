#include <doctest.h>

#include "hingekit/dissection.hpp"

using namespace hingekit;

namespace {

int ceil_half(int k) { return (k + 1) / 2; }

Exact unit_area(int k) { return signed_area(regular_polygon<Exact>(k)); }

}  // namespace

TEST_CASE("piece-count formulas and area conservation") {
  for (int n = 1; n <= 8; ++n) {
    auto a = h_polyomino_2n<Exact>(n);
    CHECK(a.size() == static_cast<size_t>(2 * n));
    CHECK(a.hinges.size() == a.size());
    CHECK(a.area() == Exact(n));
    a.validate();
    if (n >= 2) {
      auto b = h_polyomino_2nm2<Exact>(n);
      CHECK(b.size() == static_cast<size_t>(2 * n - 2));
      CHECK(b.area() == Exact(n));
      b.validate();
    }
    auto c = h_polyabolo_4n<Exact>(n);
    CHECK(c.size() == static_cast<size_t>(4 * n));
    CHECK(c.area() == Exact::rational(n, 2));
    for (const auto& p : c.pieces) CHECK(signed_area(p.polygon) == Exact::rational(1, 8));
  }
  for (int k : {3, 4, 6, 8, 12}) {
    for (int n = 1; n <= 8; ++n) {
      auto a = h_polyregular_kn<Exact>(k, n);
      auto b = h_polyregular_half<Exact>(k, n);
      CHECK(a.size() == static_cast<size_t>(k * n));
      CHECK(b.size() == static_cast<size_t>(ceil_half(k) * n));
      CHECK(a.area() == Exact(n) * unit_area(k));
      CHECK(b.area() == Exact(n) * unit_area(k));
      if (n >= 2) {
        auto c = h_polyregular_knmk<Exact>(k, n);
        auto d = h_polyregular_half_m1<Exact>(k, n);
        CHECK(c.size() == static_cast<size_t>(k * (n - 1)));
        CHECK(d.size() == static_cast<size_t>(ceil_half(k) * (n - 1)));
        CHECK(c.area() == Exact(n) * unit_area(k));
        CHECK(d.area() == Exact(n) * unit_area(k));
        c.validate();
        d.validate();
      }
    }
  }
  // k = 5 needs approximate coordinates.
  CHECK_THROWS(h_polyregular_kn<Exact>(5, 1));
  auto five = h_polyregular_knmk<Real>(5, 4);
  CHECK(five.size() == 15);
  CHECK(!five.exact);
  five.validate();
  Real expect = Real(4) * signed_area(regular_polygon<Real>(5));
  CHECK(abs(five.area() - expect) < Real(1e-20));
  CHECK_THROWS(h_polyomino_2n<Exact>(0));
  CHECK_THROWS(h_polyomino_2nm2<Exact>(1));
  CHECK_THROWS(h_polyregular_kn<Exact>(2, 1));
}

TEST_CASE("piece shapes of the base cases") {
  // Equilateral pieces for hexagons.
  auto hex = h_polyregular_kn<Exact>(6, 1);
  for (const auto& p : hex.pieces) {
    REQUIRE(p.polygon.size() == 3);
    for (int i = 0; i < 3; ++i) {
      Point<Exact> e = p.polygon[(i + 1) % 3] - p.polygon[i];
      CHECK(dot<Exact>(e, e) == Exact(1));
    }
  }
  // The moniamond in two pieces: one double, one single.
  auto mon = h_polyregular_half<Exact>(3, 1);
  REQUIRE(mon.size() == 2);
  CHECK(mon.pieces[0].polygon.size() == 4);
  CHECK(mon.pieces[1].polygon.size() == 3);
  // Odd k: singles recur with period ceil(k/2).
  auto tri4 = h_polyregular_half<Exact>(3, 4);
  for (size_t i = 0; i < tri4.size(); ++i)
    CHECK((tri4.pieces[i].polygon.size() == 3) == (i % 2 == 1));
  auto pent = h_polyregular_half<Real>(5, 3);
  for (size_t i = 0; i < pent.size(); ++i)
    CHECK((pent.pieces[i].polygon.size() == 3) == (i % 3 == 2));
  // Domino in two pieces: a triangle and a merged pentagon-free quadrilateral.
  auto dom = h_polyomino_2nm2<Exact>(2);
  CHECK(dom.size() == 2);
  CHECK(signed_area(dom.pieces[0].polygon) == Exact::rational(3, 2));
  // Diamond in three pieces.
  auto dia = h_polyregular_knmk<Exact>(3, 2);
  CHECK(dia.size() == 3);
  auto dia2 = h_polyregular_half_m1<Exact>(3, 2);
  CHECK(dia2.size() == 2);
}

TEST_CASE("signatures") {
  for (int n = 1; n <= 5; ++n)
    CHECK(signature(h_polyregular_half<Exact>(4, n)) == signature(h_polyomino_2n<Exact>(n)));
  CHECK(signature(h_polyomino_2nm2<Exact>(5)) != signature(h_polyomino_2n<Exact>(4)));
  CHECK(signature(h_polyomino_2n<Exact>(3)) != signature(h_polyomino_2n<Exact>(4)));

  // Reversal and renumbering leave the signature alone.
  auto h = h_polyregular_half<Exact>(3, 3);
  auto pcs = chain_pieces(h);
  std::vector<LocalPiece<Exact>> rev;
  for (auto it = pcs.rbegin(); it != pcs.rend(); ++it) rev.push_back({it->polygon, it->out, it->in});
  CHECK(signature(make_chain<Exact>("r", rev, Topology::Cycle)) == signature(h));
  std::rotate(pcs.begin(), pcs.begin() + 2, pcs.end());
  CHECK(signature(make_chain<Exact>("s", pcs, Topology::Cycle)) == signature(h));

  // Moving each local frame does not matter either.
  auto moved = h;
  for (size_t i = 0; i < moved.pieces.size(); ++i) {
    auto m = motion_from_angle(Angle15(static_cast<int>(3 * i)), Vec2<Exact>(Exact(int(i)), Exact(2)));
    moved.pieces[i].polygon = transform(moved.pieces[i].polygon, m);
    for (auto& a : moved.pieces[i].anchors) a = m.apply(a);
  }
  CHECK(signature(moved) == signature(h));

  // Swapping which vertex carries the hinge changes the structure.
  auto bad = h;
  std::swap(bad.pieces[0].anchors[0], bad.pieces[0].anchors[1]);
  CHECK(signature(bad) != signature(h));

  // Paths and trees.
  auto path = h_polyomino_2n<Exact>(2);
  path.topology = Topology::Path;
  path.hinges.pop_back();
  path.validate();
  auto path_r = path;
  std::reverse(path_r.pieces.begin(), path_r.pieces.end());
  for (auto& hg : path_r.hinges) {
    hg.piece_a = 3 - hg.piece_a;
    hg.piece_b = 3 - hg.piece_b;
  }
  CHECK(signature(path_r) == signature(path));
  auto tree = path;
  tree.topology = Topology::Tree;
  CHECK(signature(tree).text.rfind("tree:4:", 0) == 0);
}

TEST_CASE("validation rejects broken structures") {
  auto h = h_polyomino_2n<Exact>(2);
  auto b = h;
  b.hinges.pop_back();
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  b = h;
  b.hinges[0].piece_b = b.hinges[0].piece_a;
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  b = h;
  b.pieces[0].anchors[0] = Point<Exact>(Exact(7), Exact(7));
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  b = h;
  std::reverse(b.pieces[1].polygon.begin(), b.pieces[1].polygon.end());
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
}

TEST_CASE("restricted cut-up") {
  using P = Point<Exact>;
  auto check_cut = [](const Polygon<Exact>& base, const std::vector<Polygon<Exact>>& holes = {}) {
    auto pcs = cut_restricted_with_holes<Exact>(base, holes);
    size_t k = base.size();
    for (const auto& h : holes) k += h.size();
    REQUIRE(pcs.size() == k);
    Exact total(0);
    for (size_t i = 0; i < pcs.size(); ++i) {
      total += signed_area(pcs[i].polygon);
      CHECK(same_point(pcs[i].out, pcs[(i + 1) % pcs.size()].in));
      for (size_t j = i + 1; j < pcs.size(); ++j) CHECK(interiors_disjoint(pcs[i].polygon, pcs[j].polygon));
    }
    Exact expect = signed_area(base);
    for (const auto& h : holes) expect += signed_area(h);
    CHECK(total == expect);
    // Every boundary-edge midpoint is an anchor and each piece holds exactly one corner of P.
    std::vector<P> corners = base;
    for (const auto& h : holes) corners.insert(corners.end(), h.begin(), h.end());
    for (const auto& p : pcs) {
      int held = 0;
      for (const auto& c : corners) held += find_vertex(p.polygon, c) >= 0;
      CHECK(held >= 1);
    }
    return pcs;
  };
  check_cut({P(Exact(0), Exact(0)), P(Exact(1), Exact(0)), P(Exact(1), Exact(1)), P(Exact(0), Exact(1))});
  auto tri = check_cut(regular_polygon<Exact>(3));
  // Centroid cuts in a triangle give kites around the corners.
  for (const auto& p : tri) CHECK(p.polygon.size() == 4);
  auto lshape = check_cut({P(Exact(0), Exact(0)), P(Exact(2), Exact(0)), P(Exact(2), Exact(1)),
                           P(Exact(1), Exact(1)), P(Exact(1), Exact(2)), P(Exact(0), Exact(2))});
  CHECK(lshape.size() == 6);
  check_cut({P(Exact(0), Exact(0)), P(Exact(4), Exact(0)), P(Exact(3), Exact(2)), P(Exact(0), Exact(1))});
  // Square with a square hole: one artificial edge keeps the pieces in a single cycle.
  check_cut({P(Exact(0), Exact(0)), P(Exact(4), Exact(0)), P(Exact(4), Exact(4)), P(Exact(0), Exact(4))},
            {{P(Exact(1), Exact(1)), P(Exact(1), Exact(3)), P(Exact(3), Exact(3)), P(Exact(3), Exact(1))}});
  auto h = h_restricted<Exact>(regular_polygon<Exact>(4), 2);
  CHECK(h.size() == 8);
  auto pent = h_restricted<Real>(regular_polygon<Real>(5), 3);
  CHECK(pent.size() == 15);
  CHECK(signature(h_restricted<Exact>(regular_polygon<Exact>(3), 1)) ==
        signature(make_chain<Exact>("t", cut_restricted(regular_polygon<Exact>(3)), Topology::Cycle)));
  CHECK_THROWS(cut_restricted<Exact>({P(Exact(0), Exact(0)), P(Exact(1), Exact(0)), P(Exact(2), Exact(0))}));
}
