#include <doctest.h>

#include <functional>
#include <random>

#include "hingekit/realize.hpp"
#include "hingekit/search.hpp"
#include "oracles.hpp"

using namespace hingekit;

namespace {

Polygon<Exact> box(int x0, int y0, int x1, int y1) {
  return {{Exact(x0), Exact(y0)}, {Exact(x1), Exact(y0)}, {Exact(x1), Exact(y1)}, {Exact(x0), Exact(y1)}};
}

Polygon<Exact> shifted(const Polygon<Exact>& p, const Exact& dx, const Exact& dy) {
  return transform(p, RigidMotion<Exact>::translate({dx, dy}));
}

// Four unit squares around the origin, counter-clockwise from the first quadrant.
Realization<Exact> pinwheel(const std::vector<std::array<int, 2>>& pairs) {
  Realization<Exact> r;
  r.dissection.topology = Topology::Graph;
  const Polygon<Exact> sq = box(0, 0, 1, 1);
  for (int q = 0; q < 4; ++q) {
    r.dissection.pieces.push_back({"s" + std::to_string(q), sq, {sq[0]}});
    // Quarter turn q about the origin puts the square's corner (0, 0) there.
    r.motions.push_back(motion_from_angle(Angle15(6 * q), {Exact(0), Exact(0)}));
  }
  for (const auto& p : pairs) r.dissection.hinges.push_back({p[0], 0, p[1], 0});
  r.target.family = "omino";
  r.target.cells = {box(0, 0, 1, 1), box(-1, 0, 0, 1), box(-1, -1, 0, 0), box(0, -1, 1, 0)};
  return r;
}

}  // namespace

TEST_CASE("interiors_disjoint examples") {
  auto a = box(0, 0, 1, 1);
  CHECK(interiors_disjoint(a, box(1, 0, 2, 1)));
  CHECK(interiors_disjoint(a, box(1, 1, 2, 2)));
  CHECK_FALSE(interiors_disjoint(a, shifted(a, Exact::rational(1, 2), Exact::rational(1, 2))));
  Polygon<Exact> inner{{Exact::rational(1, 4), Exact::rational(1, 4)},
                       {Exact::rational(3, 4), Exact::rational(1, 4)},
                       {Exact::rational(1, 2), Exact::rational(3, 4)}};
  CHECK_FALSE(interiors_disjoint(a, inner));
  CHECK_FALSE(interiors_disjoint(inner, a));
  CHECK_FALSE(interiors_disjoint(a, a));
  // Non-convex: an L-shape and a square sitting in its notch.
  Polygon<Exact> ell{{Exact(0), Exact(0)}, {Exact(2), Exact(0)}, {Exact(2), Exact(1)},
                     {Exact(1), Exact(1)}, {Exact(1), Exact(2)}, {Exact(0), Exact(2)}};
  CHECK(interiors_disjoint(ell, box(1, 1, 2, 2)));
  CHECK_FALSE(interiors_disjoint(ell, shifted(box(1, 1, 2, 2), Exact::rational(-1, 2), Exact(0))));
}

TEST_CASE("chord non-crossing matches the interleaving oracle") {
  long cases = oracle::for_each_chord_set(7, 6, [](int m, const auto& chords) {
    REQUIRE(chords_noncrossing(m, chords) == oracle::crossing_free(chords));
    return true;
  });
  CHECK(cases > 80000);
  // Orientation of a chord and duplicates do not matter.
  CHECK(chords_noncrossing(4, {{1, 0}, {3, 2}}));
  CHECK(chords_noncrossing(4, {{0, 1}, {0, 1}}));
  CHECK_FALSE(chords_noncrossing(4, {{2, 0}, {1, 3}}));
}

TEST_CASE("hinge non-crossing around a point") {
  auto r = pinwheel({});
  auto placed = r.placed();
  Point<Exact> o(Exact(0), Exact(0));
  CHECK(wedge_order(o, placed) == std::vector<int>{0, 1, 2, 3});
  CHECK(hinge_noncrossing_at_point(o, placed, {{0, 1}}));
  CHECK(hinge_noncrossing_at_point(o, placed, {{0, 1}, {2, 3}}));
  CHECK(hinge_noncrossing_at_point(o, placed, {{0, 3}, {1, 2}}));
  CHECK_FALSE(hinge_noncrossing_at_point(o, placed, {{0, 2}, {1, 3}}));
}

TEST_CASE("crossing hinges fail only the non-crossing check") {
  auto good = verify_configuration(pinwheel({{0, 1}, {1, 2}, {2, 3}}));
  CHECK(good.pass());
  auto bad = verify_configuration(pinwheel({{0, 2}, {1, 3}, {0, 1}}));
  CHECK_FALSE(bad.pass());
  for (const auto& c : bad.checks) CHECK(c.pass == (c.name != "hinge-noncrossing"));
  CHECK_FALSE(bad.find("hinge-noncrossing")->detail.empty());
}

TEST_CASE("report lists the checks in order") {
  auto r = verify_configuration(realize<Exact>("polyomino_2n", 4, parse_omino_grid("##\n##")));
  REQUIRE(r.checks.size() == check_names().size());
  for (size_t i = 0; i < r.checks.size(); ++i) CHECK(r.checks[i].name == check_names()[i]);
  CHECK(r.pass());
  CHECK(r.mode == "exact");
}

TEST_CASE("injected faults") {
  auto tet = parse_omino_grid("###\n.#.");
  auto h = tetromino_hinging();
  auto found = search_target(h, tet);
  REQUIRE(found.realizable);
  auto base = square_realization(h, tet, found.witness);
  REQUIRE(verify_configuration(base).pass());

  SUBCASE("reflected square") {
    auto r = base;
    Mat2<Exact> flip;
    flip << Exact(-1), Exact(0), Exact(0), Exact(1);
    // Mirror square 1 in place about its own vertical axis.
    auto placed = transform(r.dissection.pieces[1].polygon, r.motions[1]);
    Exact cx = (placed[0].x() + placed[2].x()) / Exact(2);
    r.motions[1] = RigidMotion<Exact>(flip, Vec2<Exact>(Exact(2) * cx, Exact(0))).after(r.motions[1]);
    auto rep = verify_configuration(r);
    CHECK_FALSE(rep.find("orientation")->pass);
  }
  SUBCASE("missing motion") {
    auto r = base;
    r.motions.pop_back();
    auto rep = verify_configuration(r);
    CHECK_FALSE(rep.find("structure")->pass);
    CHECK_FALSE(rep.pass());
  }
  SUBCASE("piece outside the target") {
    auto r = base;
    r.target.cells.pop_back();
    auto rep = verify_configuration(r);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.find("area")->pass);
  }
  SUBCASE("overlap") {
    auto r = base;
    r.motions[0] = r.motions[1];
    CHECK_FALSE(verify_configuration(r).find("disjointness")->pass);
  }
}

TEST_CASE("mutation suite: one lattice step or one 15 degree step always fails") {
  std::vector<Realization<Exact>> pool;
  for (const char* g : {"###\n.#.", "##\n.##", "####", "#..\n###"})
    pool.push_back(realize<Exact>("polyomino_2n", 4, parse_omino_grid(g)));
  pool.push_back(realize<Exact>("polyregular_kn", 3, enumerate_fixed(Family::Iamond, 3)[0]));
  pool.push_back(realize<Exact>("polyabolo_4n", 3, enumerate_fixed(Family::Abolo, 2)[1]));
  for (const auto& r : pool) REQUIRE(verify_configuration(r).pass());
  std::mt19937 rng(20240617);
  for (int i = 0; i < 200; ++i) {
    auto r = pool[i % pool.size()];
    oracle::mutate(r, rng);
    CHECK_FALSE(verify_configuration(r).pass());
  }
}

TEST_CASE("disjoint, contained and equal area implies union equals target (raster oracle)") {
  std::mt19937 rng(7);
  auto targets = enumerate_fixed(Family::Omino, 3);
  int agreed = 0, passed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& t = targets[trial % targets.size()];
    Realization<Exact> r;
    r.dissection.topology = Topology::Graph;
    const auto sq = box(0, 0, 1, 1);
    for (int i = 0; i < 3; ++i) r.dissection.pieces.push_back({"s" + std::to_string(i), sq, {}});
    r.target = to_complex<Exact>(t);
    for (int i = 0; i < 3; ++i) {
      // Mostly on target cells, sometimes half a unit off.
      const auto& c = t.cells[rng() % t.cells.size()];
      Exact dx(c.x), dy(c.y);
      if (rng() % 4 == 0) dx += Exact::rational(1, 2);
      r.motions.push_back(RigidMotion<Exact>::translate({dx, dy}));
    }
    // The three geometric predicates the verifier combines, evaluated on their own.
    auto placed = r.placed();
    auto reg = region(r.target);
    bool geometric = true;
    Exact total(0);
    for (size_t i = 0; i < placed.size(); ++i) {
      total += signed_area(placed[i]);
      geometric = geometric && inside_region(placed[i], reg.edges());
      for (size_t j = i + 1; j < placed.size(); ++j) geometric = geometric && interiors_disjoint(placed[i], placed[j]);
    }
    geometric = geometric && total == reg.area();
    // Sample cell centres of a 1/64 grid; they never lie on a boundary, so doubles decide exactly.
    auto inside = [](double x, double y, const Polygon<Exact>& sqr) {
      double x0 = 1e9, x1 = -1e9, y0 = 1e9, y1 = -1e9;
      for (const auto& v : sqr) {
        x0 = std::min(x0, to_double(v.x()));
        x1 = std::max(x1, to_double(v.x()));
        y0 = std::min(y0, to_double(v.y()));
        y1 = std::max(y1, to_double(v.y()));
      }
      return x0 < x && x < x1 && y0 < y && y < y1;
    };
    bool equal = true;
    for (int gx = -64; gx < 4 * 64 && equal; ++gx)
      for (int gy = -64; gy < 4 * 64 && equal; ++gy) {
        const double x = (2 * gx + 1) / 128.0, y = (2 * gy + 1) / 128.0;
        int cover = 0;
        for (const auto& q : placed) cover += inside(x, y, q);
        bool in_target = false;
        for (const auto& c : r.target.cells) in_target = in_target || inside(x, y, c);
        equal = cover == (in_target ? 1 : 0);
      }
    if (geometric) {
      ++passed;
      CHECK(equal);
    }
    agreed += geometric == equal;
  }
  CHECK(passed > 0);
  CHECK(agreed == 60);
}
