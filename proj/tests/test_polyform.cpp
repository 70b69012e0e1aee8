#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "hingekit/polyform.hpp"

using namespace hingekit;

namespace {

Polyform omino(std::vector<std::pair<int, int>> xy) {
  std::vector<Cell> cells;
  for (auto [x, y] : xy) cells.push_back({x, y, 0});
  return make_polyform(Family::Omino, cells);
}

// Independent count: subsets of an n-by-n window touching both the left column and the
// bottom row (one representative per translation class), tested for connectivity.
long brute_force_fixed_ominoes(int n) {
  const int w = n;
  long count = 0;
  auto connected = [&](uint64_t set) {
    uint64_t seen = set & (~set + 1), frontier = seen;
    const uint64_t left_col_mask = [&] {
      uint64_t m = 0;
      for (int y = 0; y < w; ++y) m |= uint64_t(1) << (y * w);
      return m;
    }();
    const uint64_t right_col_mask = left_col_mask << (w - 1);
    while (frontier) {
      uint64_t grow = ((frontier & ~right_col_mask) << 1) | ((frontier & ~left_col_mask) >> 1) |
                      (frontier << w) | (frontier >> w);
      grow &= set & ~seen;
      seen |= grow;
      frontier = grow;
    }
    return seen == set;
  };
  uint64_t bottom = (uint64_t(1) << w) - 1, left = 0;
  for (int y = 0; y < w; ++y) left |= uint64_t(1) << (y * w);
  std::function<void(int, int, uint64_t)> rec = [&](int start, int left_to_pick, uint64_t set) {
    if (left_to_pick == 0) {
      if ((set & bottom) && (set & left) && connected(set)) ++count;
      return;
    }
    for (int c = start; c <= w * w - left_to_pick; ++c)
      rec(c + 1, left_to_pick - 1, set | (uint64_t(1) << c));
  };
  rec(0, n, 0);
  return count;
}

// Holes of a fixed omino by flood filling the complement inside a padded grid.
bool grid_has_hole(const Polyform& p) {
  int w = 0, h = 0;
  for (const auto& c : p.cells) {
    w = std::max(w, c.x + 3);
    h = std::max(h, c.y + 3);
  }
  std::vector<int> g(w * h, 0);
  for (const auto& c : p.cells) g[(c.y + 1) * w + c.x + 1] = 1;
  std::vector<int> stack{0};
  g[0] = 2;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    int x = v % w, y = v / w;
    const int d[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (auto& dd : d) {
      int nx = x + dd[0], ny = y + dd[1];
      if (nx < 0 || ny < 0 || nx >= w || ny >= h || g[ny * w + nx] != 0) continue;
      g[ny * w + nx] = 2;
      stack.push_back(ny * w + nx);
    }
  }
  for (int v : g)
    if (v == 0) return true;
  return false;
}

// Second implementation: grows cell sets using geometric edge sharing and exact overlap
// tests, deduplicating by the polygon translation key.
size_t geometric_fixed_count(Family f, int n) {
  int types = f == Family::Iamond ? 2 : (f == Family::Abolo ? 4 : 1);
  auto complex_of = [&](const std::vector<Cell>& cells) {
    CellComplex<Exact> c{"x", {}};
    for (const auto& cell : cells) c.cells.push_back(cell_polygon(f, cell));
    return c;
  };
  std::map<std::string, std::vector<Cell>> level;
  for (int t = 0; t < types; ++t) level.emplace(translation_key(complex_of({{0, 0, t}})), std::vector<Cell>{{0, 0, t}});
  for (int size = 1; size < n; ++size) {
    std::map<std::string, std::vector<Cell>> next;
    for (const auto& [key, cells] : level) {
      auto cx = complex_of(cells);
      for (const auto& c : cells)
        for (int dx = -1; dx <= 1; ++dx)
          for (int dy = -1; dy <= 1; ++dy)
            for (int t = 0; t < types; ++t) {
              Cell d{c.x + dx, c.y + dy, t};
              auto pd = cell_polygon(f, d);
              bool touches = false, ok = true;
              for (const auto& q : cx.cells) {
                if (!interiors_disjoint(pd, q)) ok = false;
                CellComplex<Exact> pair{"x", {pd, q}};
                if (!adjacency_graph(pair).empty()) touches = true;
              }
              if (!ok || !touches) continue;
              auto grown = cells;
              grown.push_back(d);
              next.emplace(translation_key(complex_of(grown)), grown);
            }
    }
    level = std::move(next);
  }
  return level.size();
}

}  // namespace

TEST_CASE("cell polygons") {
  auto sq = cell_polygon(Family::Omino, {0, 0, 0});
  CHECK(sq == Polygon<Exact>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto tri = cell_polygon(Family::Iamond, {0, 0, 0});
  CHECK(tri == Polygon<Exact>{{0, 0}, {1, 0}, {Exact::rational(1, 2), Exact::rational(1, 2) * Exact::sqrt3()}});
  auto ab = cell_polygon(Family::Abolo, {0, 0, 0});
  CHECK(signed_area(ab) == Exact::rational(1, 2));
  for (Family f : {Family::Omino, Family::Iamond, Family::Hex, Family::Abolo})
    for (int t = 0; t < 4; ++t) {
      if ((f == Family::Omino || f == Family::Hex) && t > 0) continue;
      if (f == Family::Iamond && t > 1) continue;
      auto p = cell_polygon(f, {2, -1, t});
      CHECK(is_simple(p));
      CHECK(signed_area(p) == cell_area(f));
    }
}

TEST_CASE("adjacency graphs") {
  auto i3 = to_complex<Exact>(omino({{0, 0}, {1, 0}, {2, 0}}));
  CHECK(adjacency_graph(i3) == std::vector<Edge>{{0, 1}, {1, 2}});
  auto x5 = to_complex<Exact>(omino({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}));
  auto g = adjacency_graph(x5);
  CHECK(g.size() == 4);
  int center = 2;  // (1,1) in sorted order
  for (auto e : g) CHECK((e[0] == center || e[1] == center));
  CHECK(adjacency_graph(to_complex<Exact>(omino({{0, 0}}))).empty());
}

TEST_CASE("fixed enumeration against independent oracles") {
  const long expected[] = {0, 1, 2, 6, 19, 63, 216};
  for (int n = 1; n <= 6; ++n) {
    long oracle = brute_force_fixed_ominoes(n);
    CHECK(oracle == expected[n]);
    CHECK(static_cast<long>(enumerate_fixed(Family::Omino, n).size()) == oracle);
  }
  CHECK_THROWS(enumerate_fixed(Family::Omino, 9));
  const size_t iamonds[] = {0, 2, 3, 6, 14, 36};
  const size_t hexes[] = {0, 1, 3, 11, 44};
  for (int n = 1; n <= 4; ++n) {
    size_t o = geometric_fixed_count(Family::Iamond, n);
    CHECK(o == iamonds[n]);
    CHECK(enumerate_fixed(Family::Iamond, n).size() == o);
  }
  for (int n = 1; n <= 3; ++n) {
    size_t o = geometric_fixed_count(Family::Hex, n);
    CHECK(o == hexes[n]);
    CHECK(enumerate_fixed(Family::Hex, n).size() == o);
  }
  for (int n = 1; n <= 3; ++n)
    CHECK(enumerate_fixed(Family::Abolo, n).size() == geometric_fixed_count(Family::Abolo, n));
  CHECK(geometric_fixed_count(Family::Omino, 4) == 19);
  CHECK(enumerate_fixed(Family::Iamond, 5).size() == 36);
  CHECK(enumerate_fixed(Family::Hex, 4).size() == 44);
}

TEST_CASE("enumeration is duplicate free and closed under lattice rotation") {
  for (Family f : {Family::Omino, Family::Iamond, Family::Hex, Family::Abolo}) {
    int n = f == Family::Omino ? 5 : 4;
    auto forms = enumerate_fixed(f, n);
    std::set<std::string> keys;
    for (const auto& p : forms) keys.insert(fixed_key(p));
    CHECK(keys.size() == forms.size());
    for (const auto& p : forms) {
      CHECK(keys.count(fixed_key(rotate_lattice(p, 1))) == 1);
      CHECK(keys.count(fixed_key(reflect(p))) == 1);
    }
  }
}

TEST_CASE("canonical keys") {
  auto l3 = omino({{0, 0}, {1, 0}, {0, 1}});
  CHECK(canonicalize(l3) == canonicalize(rotate_lattice(l3, 1)));
  auto l4 = omino({{0, 0}, {1, 0}, {0, 1}, {0, 2}});
  CHECK(canonicalize(l4) != canonicalize(reflect(l4)));
  auto s4 = omino({{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  auto z4 = omino({{1, 0}, {2, 0}, {0, 1}, {1, 1}});
  CHECK(canonicalize(s4) != canonicalize(z4));
  std::set<std::string> free5;
  for (const auto& p : enumerate_fixed(Family::Omino, 5)) free5.insert(canonicalize(p));
  CHECK(free5.size() == 18);  // one-sided pentominoes
}

TEST_CASE("regions") {
  auto dom = region(to_complex<Exact>(omino({{0, 0}, {1, 0}})));
  CHECK(dom.loops.size() == 1);
  CHECK(dom.loops[0].size() == 4);
  CHECK(dom.area() == Exact(2));
  auto ring = region(to_complex<Exact>(
      omino({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}})));
  CHECK(ring.loops.size() == 2);
  CHECK(ring.holes() == 1);
  CHECK(ring.area() == Exact(8));
  auto holed = enumerate_fixed(Family::Omino, 8);
  CHECK(holed.size() == 2725);
  int with_hole = 0;
  for (Family f : {Family::Omino, Family::Iamond, Family::Hex, Family::Abolo})
    for (const auto& p : enumerate_fixed(f, 4)) {
      auto r = region(to_complex<Exact>(p));
      CHECK(r.area() == Exact(static_cast<int>(p.size())) * cell_area(f));
    }
  int oracle_holes = 0;
  for (const auto& p : holed) {
    bool h = region(to_complex<Exact>(p)).holes() > 0;
    CHECK(h == grid_has_hole(p));
    with_hole += h;
    oracle_holes += grid_has_hole(p);
  }
  CHECK(with_hole == oracle_holes);
  CHECK(with_hole > 0);
}

TEST_CASE("gluing sequences") {
  auto dom = to_complex<Exact>(omino({{0, 0}, {1, 0}}));
  auto g = gluing_sequence(dom);
  CHECK(g.steps.size() == 2);
  CHECK(g.steps[1].parent == g.steps[0].cell);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_fixed(Family::Omino, n)) {
      auto c = to_complex<Exact>(p);
      CHECK(is_valid_gluing_sequence(c, gluing_sequence(c)));
    }
  // Every spanning tree of the T-tetromino graph.
  auto t4 = to_complex<Exact>(omino({{0, 0}, {1, 0}, {2, 0}, {1, 1}}));
  auto edges = adjacency_graph(t4);
  CHECK(edges.size() == 3);
  auto sq = to_complex<Exact>(omino({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  auto ring = adjacency_graph(sq);
  REQUIRE(ring.size() == 4);
  for (auto* c : {&t4, &sq}) {
    auto all = adjacency_graph(*c);
    int trees = 0;
    for (size_t drop = 0; drop <= all.size(); ++drop) {
      std::vector<Edge> tree;
      for (size_t i = 0; i < all.size(); ++i)
        if (i != drop) tree.push_back(all[i]);
      if (tree.size() != c->size() - 1) continue;
      ++trees;
      auto gs = gluing_sequence_from_tree(*c, tree);
      CHECK(is_valid_gluing_sequence(*c, gs));
    }
    CHECK(trees >= 1);
  }
}

TEST_CASE("restricted enumeration") {
  auto sq = cell_polygon(Family::Omino, {0, 0, 0});
  auto tri = cell_polygon(Family::Iamond, {0, 0, 0});
  const size_t ominoes[] = {0, 1, 2, 6, 19};
  const size_t iamonds[] = {0, 2, 3, 6, 14};
  for (int n = 1; n <= 4; ++n) {
    CHECK(enumerate_restricted(sq, n).size() == ominoes[n]);
    CHECK(enumerate_restricted(tri, n).size() == iamonds[n]);
  }
  Polygon<Exact> quad{{0, 0}, {4, 0}, {3, 2}, {0, 1}};
  for (int n = 1; n <= 3; ++n) {
    auto forms = enumerate_restricted(quad, n);
    CHECK(!forms.empty());
    for (const auto& f : forms) {
      CHECK(f.placements.size() == static_cast<size_t>(n));
      CHECK(valid_contacts(f.complex()));
    }
  }
  CHECK(enumerate_restricted(quad, 1).size() == 2);
}

TEST_CASE("omino text grids") {
  auto t = parse_omino_grid("###\n.#.\n");
  CHECK(t.size() == 4);
  CHECK(omino_grid(t) == "###\n.#.\n");
}
