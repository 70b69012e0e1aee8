#include "hingekit/polyform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hingekit {

const char* family_name(Family f) {
  switch (f) {
    case Family::Omino: return "omino";
    case Family::Iamond: return "iamond";
    case Family::Hex: return "hex";
    case Family::Abolo: return "abolo";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "omino") return Family::Omino;
  if (s == "iamond") return Family::Iamond;
  if (s == "hex") return Family::Hex;
  if (s == "abolo") return Family::Abolo;
  throw std::invalid_argument("unknown polyform family: " + s);
}

Polyform make_polyform(Family f, std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return {f, std::move(cells)};
}

namespace {

Exact half() { return Exact::rational(1, 2); }
Exact h3() { return half() * Exact::sqrt3(); }

Point<Exact> P(const Exact& x, const Exact& y) { return {x, y}; }

}  // namespace

Polygon<Exact> cell_polygon(Family f, const Cell& c) {
  switch (f) {
    case Family::Omino: {
      Exact x(c.x), y(c.y);
      return {P(x, y), P(x + 1, y), P(x + 1, y + 1), P(x, y + 1)};
    }
    case Family::Iamond: {
      Point<Exact> o(Exact(c.x) + half() * Exact(c.y), h3() * Exact(c.y));
      Point<Exact> e(1, 0), u(half(), h3());
      if (c.t == 0) return {o, Point<Exact>(o + e), Point<Exact>(o + u)};
      return {Point<Exact>(o + e), Point<Exact>(o + e + u), Point<Exact>(o + u)};
    }
    case Family::Hex: {
      Point<Exact> ctr(Exact::sqrt3() * (Exact(c.x) + half() * Exact(c.y)),
                       Exact::rational(3, 2) * Exact(c.y));
      Polygon<Exact> out;
      for (int i = 0; i < 6; ++i) {
        Angle15 a(2 + 4 * i);
        out.push_back(Point<Exact>(ctr + Point<Exact>(a.cos(), a.sin())));
      }
      return out;
    }
    case Family::Abolo: {
      Exact x(c.x), y(c.y);
      Point<Exact> sw(x, y), se(x + 1, y), ne(x + 1, y + 1), nw(x, y + 1);
      switch (c.t) {
        case 0: return {sw, se, nw};
        case 1: return {sw, se, ne};
        case 2: return {se, ne, nw};
        default: return {sw, ne, nw};
      }
    }
  }
  return {};
}

Exact cell_area(Family f) {
  switch (f) {
    case Family::Omino: return 1;
    case Family::Iamond: return Exact::rational(1, 4) * Exact::sqrt3();
    case Family::Hex: return Exact::rational(3, 2) * Exact::sqrt3();
    case Family::Abolo: return half();
  }
  return 0;
}

int rotation_step(Family f) {
  return (f == Family::Iamond || f == Family::Hex) ? 4 : 6;
}

namespace {

bool shares_full_edge(const Polygon<Exact>& a, const Polygon<Exact>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (same_point(a[i], b[(j + 1) % b.size()]) && same_point(a[(i + 1) % a.size()], b[j]))
        return true;
  return false;
}

bool abolo_conflict(const Cell& a, const Cell& b) {
  return a.x == b.x && a.y == b.y && a.t != b.t && (a.t + 2) % 4 != b.t;
}

const std::vector<Cell>& abolo_offsets(int t) {
  static std::vector<Cell> table[4];
  static bool ready = false;
  if (!ready) {
    for (int s = 0; s < 4; ++s) {
      Cell c{0, 0, s};
      auto pc = cell_polygon(Family::Abolo, c);
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
          for (int u = 0; u < 4; ++u) {
            Cell d{dx, dy, u};
            if (d == c || abolo_conflict(c, d)) continue;
            if (shares_full_edge(pc, cell_polygon(Family::Abolo, d))) table[s].push_back(d);
          }
    }
    ready = true;
  }
  return table[t];
}

}  // namespace

std::vector<Cell> lattice_neighbors(Family f, const Cell& c) {
  switch (f) {
    case Family::Omino:
      return {{c.x + 1, c.y, 0}, {c.x - 1, c.y, 0}, {c.x, c.y + 1, 0}, {c.x, c.y - 1, 0}};
    case Family::Iamond:
      if (c.t == 0) return {{c.x, c.y, 1}, {c.x - 1, c.y, 1}, {c.x, c.y - 1, 1}};
      return {{c.x, c.y, 0}, {c.x + 1, c.y, 0}, {c.x, c.y + 1, 0}};
    case Family::Hex:
      return {{c.x + 1, c.y, 0}, {c.x - 1, c.y, 0}, {c.x, c.y + 1, 0},
              {c.x, c.y - 1, 0}, {c.x + 1, c.y - 1, 0}, {c.x - 1, c.y + 1, 0}};
    case Family::Abolo: {
      std::vector<Cell> out;
      for (const auto& d : abolo_offsets(c.t)) out.push_back({c.x + d.x, c.y + d.y, d.t});
      return out;
    }
  }
  return {};
}

template <class T>
CellComplex<T> to_complex(const Polyform& f) {
  CellComplex<T> c;
  c.family = family_name(f.family);
  for (const auto& cell : f.cells) {
    auto poly = cell_polygon(f.family, cell);
    if constexpr (std::is_same_v<T, Exact>) {
      c.cells.push_back(poly);
    } else {
      Polygon<Real> r;
      for (const auto& p : poly) r.push_back(to_real(p));
      c.cells.push_back(r);
    }
  }
  return c;
}

template <class T>
CellComplex<T> transform_complex(const CellComplex<T>& c, const T& scale,
                                 const RigidMotion<T>& m) {
  CellComplex<T> out{c.family, {}};
  for (const auto& cell : c.cells) {
    Polygon<T> p;
    for (const auto& v : cell) p.push_back(m.apply(Point<T>(v * scale)));
    out.cells.push_back(p);
  }
  return out;
}

namespace {

template <class T>
std::optional<int> shared_edge_index(const Polygon<T>& a, const Polygon<T>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (same_point(a[i], b[(j + 1) % b.size()]) && same_point(a[(i + 1) % a.size()], b[j]))
        return static_cast<int>(i);
  return std::nullopt;
}

}  // namespace

template <class T>
std::vector<Edge> adjacency_graph(const CellComplex<T>& c) {
  std::vector<Edge> out;
  std::vector<Box> boxes;
  for (const auto& p : c.cells) boxes.push_back(bounding_box(p));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (boxes[i].overlaps(boxes[j]) && shared_edge_index(c.cells[i], c.cells[j]))
        out.push_back({static_cast<int>(i), static_cast<int>(j)});
  return out;
}

template <class T>
std::vector<std::array<Point<T>, 2>> Region<T>::edges() const {
  std::vector<std::array<Point<T>, 2>> out;
  for (const auto& loop : loops)
    for (size_t i = 0; i < loop.size(); ++i) out.push_back({loop[i], loop[(i + 1) % loop.size()]});
  return out;
}

template <class T>
T Region<T>::area() const {
  T s(0);
  for (const auto& loop : loops) s += signed_area(loop);
  return s;
}

template <class T>
size_t Region<T>::holes() const {
  size_t h = 0;
  for (const auto& loop : loops)
    if (sgn(signed_area(loop)) < 0) ++h;
  return h;
}

template <class T>
Region<T> region(const CellComplex<T>& c) {
  std::vector<std::array<Point<T>, 2>> edges;
  for (const auto& cell : c.cells)
    for (size_t i = 0; i < cell.size(); ++i) edges.push_back({cell[i], cell[(i + 1) % cell.size()]});
  std::vector<bool> dead(edges.size(), false);
  for (size_t i = 0; i < edges.size(); ++i) {
    if (dead[i]) continue;
    for (size_t j = i + 1; j < edges.size(); ++j) {
      if (dead[j]) continue;
      if (same_point(edges[i][0], edges[j][1]) && same_point(edges[i][1], edges[j][0])) {
        dead[i] = dead[j] = true;
        break;
      }
    }
  }
  std::vector<std::array<Point<T>, 2>> live;
  for (size_t i = 0; i < edges.size(); ++i)
    if (!dead[i]) live.push_back(edges[i]);

  Region<T> r;
  std::vector<bool> used(live.size(), false);
  for (size_t s = 0; s < live.size(); ++s) {
    if (used[s]) continue;
    Polygon<T> loop;
    size_t cur = s;
    while (true) {
      used[cur] = true;
      loop.push_back(live[cur][0]);
      const Point<T>& end = live[cur][1];
      Point<T> back = live[cur][0] - end;
      auto rel = [&](const Point<T>& v) { return Point<T>(dot<T>(v, back), cross<T>(back, v)); };
      long best = -1;
      for (size_t k = 0; k < live.size(); ++k) {
        bool open = !used[k] || k == s;
        if (!open || !same_point(live[k][0], end)) continue;
        // Take the candidate reached first when turning counterclockwise from `back`, so
        // that loops touching at a vertex are traced separately.
        if (best < 0 || angle_less<T>(rel(Point<T>(live[k][1] - end)),
                                      rel(Point<T>(live[best][1] - end))))
          best = static_cast<long>(k);
      }
      if (best == static_cast<long>(s)) break;
      if (best < 0) break;
      cur = static_cast<size_t>(best);
    }
    r.loops.push_back(remove_collinear(loop));
  }
  return r;
}

template <class T>
bool valid_contacts(const CellComplex<T>& c) {
  std::vector<Box> boxes;
  for (const auto& p : c.cells) {
    if (!is_simple(p)) return false;
    boxes.push_back(bounding_box(p));
  }
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j) {
      if (!boxes[i].overlaps(boxes[j])) continue;
      const auto& a = c.cells[i];
      const auto& b = c.cells[j];
      if (!interiors_disjoint(a, b)) return false;
      for (const auto& v : a)
        for (size_t k = 0; k < b.size(); ++k)
          if (strictly_on_segment(v, b[k], b[(k + 1) % b.size()])) return false;
      for (const auto& v : b)
        for (size_t k = 0; k < a.size(); ++k)
          if (strictly_on_segment(v, a[k], a[(k + 1) % a.size()])) return false;
      int common = 0;
      for (const auto& v : a)
        if (find_vertex(b, v) >= 0) ++common;
      int full = 0;
      for (size_t k = 0; k < a.size(); ++k)
        for (size_t l = 0; l < b.size(); ++l)
          if (same_point(a[k], b[(l + 1) % b.size()]) && same_point(a[(k + 1) % a.size()], b[l]))
            ++full;
      if (full > 1) return false;
      if (full == 1 && common != 2) return false;
      if (full == 0 && common > 1) return false;
    }
  return true;
}

template <class T>
GluingSequence gluing_sequence_from_tree(const CellComplex<T>& c, const std::vector<Edge>& tree) {
  const int n = static_cast<int>(c.size());
  GluingSequence g;
  if (n == 0) return g;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : tree) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  int first = 0;
  if (n > 1) {
    first = -1;
    for (int i = 0; i < n && first < 0; ++i)
      if (adj[i].size() == 1) first = i;
    if (first < 0) throw std::invalid_argument("gluing sequence: tree has no leaf");
  }
  std::vector<int> parent(n, -2);
  std::vector<int> order;
  std::function<void(int, int)> dfs = [&](int v, int p) {
    parent[v] = p;
    order.push_back(v);
    for (int w : adj[v])
      if (w != p) dfs(w, v);
  };
  dfs(first, -1);
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("gluing sequence: tree does not span the polyform");
  for (int v : order) {
    Gluing s{v, parent[v], {-1, -1}};
    if (parent[v] >= 0) {
      auto k = shared_edge_index(c.cells[v], c.cells[parent[v]]);
      if (!k) throw std::invalid_argument("gluing sequence: tree edge is not a shared edge");
      s.edge = {*k, static_cast<int>((*k + 1) % c.cells[v].size())};
    }
    g.steps.push_back(s);
  }
  return g;
}

template <class T>
GluingSequence gluing_sequence(const CellComplex<T>& c) {
  const int n = static_cast<int>(c.size());
  auto edges = adjacency_graph(c);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  int root = 0;
  for (int i = 1; i < n; ++i)
    if (adj[i].size() < adj[root].size()) root = i;
  std::vector<Edge> tree;
  std::vector<bool> seen(n, false);
  std::vector<int> queue{root};
  seen[root] = true;
  for (size_t q = 0; q < queue.size(); ++q)
    for (int w : adj[queue[q]])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
        tree.push_back({queue[q], w});
      }
  if (static_cast<int>(queue.size()) != n)
    throw std::invalid_argument("gluing sequence: polyform is not connected");
  return gluing_sequence_from_tree(c, tree);
}

template <class T>
bool is_valid_gluing_sequence(const CellComplex<T>& c, const GluingSequence& g) {
  const size_t n = c.size();
  if (g.steps.size() != n) return false;
  std::vector<bool> placed(n, false);
  int first_children = 0;
  for (size_t i = 0; i < n; ++i) {
    const auto& s = g.steps[i];
    if (s.cell < 0 || static_cast<size_t>(s.cell) >= n || placed[s.cell]) return false;
    if (i == 0) {
      if (s.parent != -1) return false;
    } else {
      if (s.parent < 0 || !placed[s.parent]) return false;
      if (!shared_edge_index(c.cells[s.cell], c.cells[s.parent])) return false;
      if (s.parent == g.steps[0].cell) ++first_children;
    }
    placed[s.cell] = true;
  }
  return n <= 1 || first_children == 1;
}

template <class T>
std::string translation_key(const CellComplex<T>& c) {
  const Point<T>* lo = nullptr;
  for (const auto& cell : c.cells)
    for (const auto& v : cell) {
      if (!lo) {
        lo = &v;
        continue;
      }
      int sx = sgn(T(v.x() - lo->x()));
      if (sx < 0 || (sx == 0 && sgn(T(v.y() - lo->y())) < 0)) lo = &v;
    }
  if (!lo) return "";
  Point<T> base = *lo;
  std::vector<std::string> cells;
  for (const auto& cell : c.cells) {
    std::vector<std::string> pts;
    for (const auto& v : cell) pts.push_back(point_key(Point<T>(v - base)));
    std::sort(pts.begin(), pts.end());
    std::string s;
    for (const auto& p : pts) s += p + ";";
    cells.push_back(s);
  }
  std::sort(cells.begin(), cells.end());
  std::string key;
  for (const auto& s : cells) key += "[" + s + "]";
  return key;
}

Polyform translate_to_origin(const Polyform& f) {
  if (f.cells.empty()) return f;
  int mx = f.cells[0].x, my = f.cells[0].y;
  for (const auto& c : f.cells) {
    mx = std::min(mx, c.x);
    my = std::min(my, c.y);
  }
  std::vector<Cell> cells;
  for (const auto& c : f.cells) cells.push_back({c.x - mx, c.y - my, c.t});
  return make_polyform(f.family, cells);
}

std::string fixed_key(const Polyform& f) {
  Polyform g = translate_to_origin(f);
  std::ostringstream os;
  os << family_name(f.family);
  for (const auto& c : g.cells) os << ' ' << c.x << ',' << c.y << ',' << c.t;
  return os.str();
}

namespace {

// The lattice cell whose polygon equals `poly` as a point set.
Cell cell_from_polygon(Family f, const Polygon<Exact>& poly) {
  double cx = 0, cy = 0;
  for (const auto& p : poly) {
    cx += to_double(p.x());
    cy += to_double(p.y());
  }
  cx /= poly.size();
  cy /= poly.size();
  int gx = 0, gy = 0;
  switch (f) {
    case Family::Omino:
    case Family::Abolo:
      gx = static_cast<int>(std::floor(cx));
      gy = static_cast<int>(std::floor(cy));
      break;
    case Family::Iamond:
      gy = static_cast<int>(std::floor(cy / (std::sqrt(3.0) / 2)));
      gx = static_cast<int>(std::floor(cx - gy / 2.0));
      break;
    case Family::Hex:
      gy = static_cast<int>(std::lround(cy / 1.5));
      gx = static_cast<int>(std::lround(cx / std::sqrt(3.0) - gy / 2.0));
      break;
  }
  for (int dx = -2; dx <= 2; ++dx)
    for (int dy = -2; dy <= 2; ++dy)
      for (int t = 0; t < 4; ++t) {
        if (f == Family::Omino || f == Family::Hex) {
          if (t > 0) break;
        } else if (f == Family::Iamond && t > 1) {
          break;
        }
        Cell c{gx + dx, gy + dy, t};
        auto q = cell_polygon(f, c);
        if (q.size() != poly.size()) continue;
        bool all = true;
        for (const auto& v : poly) all = all && find_vertex(q, v) >= 0;
        if (all) return c;
      }
  throw std::logic_error("cell_from_polygon: polygon is not a lattice cell");
}

Polyform map_cells(const Polyform& f, const std::function<Point<Exact>(const Point<Exact>&)>& m) {
  std::vector<Cell> cells;
  for (const auto& c : f.cells) {
    Polygon<Exact> poly;
    for (const auto& v : cell_polygon(f.family, c)) poly.push_back(m(v));
    cells.push_back(cell_from_polygon(f.family, poly));
  }
  return translate_to_origin(make_polyform(f.family, cells));
}

}  // namespace

Polyform rotate_lattice(const Polyform& f, int times) {
  auto rot = rotation_matrix(Angle15(times * rotation_step(f.family)));
  return map_cells(f, [&](const Point<Exact>& p) { return Point<Exact>(rot * p); });
}

Polyform reflect(const Polyform& f) {
  return map_cells(f, [](const Point<Exact>& p) { return Point<Exact>(-p.x(), p.y()); });
}

std::string canonicalize(const Polyform& f) {
  std::string best;
  const int turns = 24 / rotation_step(f.family);
  for (int r = 0; r < turns; ++r) {
    std::string k = fixed_key(rotate_lattice(f, r));
    if (r == 0 || k < best) best = k;
  }
  return best;
}

std::vector<Polyform> enumerate_fixed(Family f, int n, int cap) {
  if (cap <= 0) cap = (f == Family::Omino) ? 8 : 7;
  if (n < 1) throw std::invalid_argument("enumerate_fixed: n must be positive");
  if (n > cap)
    throw std::invalid_argument("enumerate_fixed: n = " + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(cap));
  std::map<std::string, Polyform> level;
  int types = (f == Family::Iamond) ? 2 : (f == Family::Abolo ? 4 : 1);
  for (int t = 0; t < types; ++t) {
    Polyform p = make_polyform(f, {{0, 0, t}});
    level.emplace(fixed_key(p), p);
  }
  for (int size = 1; size < n; ++size) {
    std::map<std::string, Polyform> next;
    for (const auto& [key, form] : level) {
      std::set<Cell> have(form.cells.begin(), form.cells.end());
      for (const auto& c : form.cells)
        for (const auto& d : lattice_neighbors(f, c)) {
          if (have.count(d)) continue;
          if (f == Family::Abolo) {
            bool clash = false;
            for (const auto& e : form.cells) clash = clash || abolo_conflict(d, e);
            if (clash) continue;
          }
          auto cells = form.cells;
          cells.push_back(d);
          Polyform g = translate_to_origin(make_polyform(f, cells));
          next.emplace(fixed_key(g), g);
        }
    }
    level = std::move(next);
  }
  std::vector<Polyform> out;
  for (auto& [k, v] : level) out.push_back(v);
  return out;
}

template <class T>
CellComplex<T> RestrictedForm<T>::complex() const {
  CellComplex<T> c{"restricted", {}};
  for (const auto& m : placements) c.cells.push_back(transform(base, m));
  return c;
}

namespace {

// Shared full edges of a form must be corresponding edges for some choice of placements
// among the symmetric versions of each cell.
template <class T>
bool corresponding_assignment(const Polygon<T>& base, std::vector<RigidMotion<T>>& placements) {
  auto sym = congruences(base, base);
  const size_t n = placements.size();
  std::vector<std::vector<RigidMotion<T>>> options(n);
  for (size_t i = 0; i < n; ++i)
    for (const auto& s : sym) options[i].push_back(placements[i].after(s));
  std::vector<RigidMotion<T>> chosen(n);
  const size_t k = base.size();
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == n) return true;
    for (const auto& m : options[i]) {
      bool ok = true;
      auto pi = transform(base, m);
      for (size_t j = 0; j < i && ok; ++j) {
        auto pj = transform(base, chosen[j]);
        for (size_t a = 0; a < k && ok; ++a)
          for (size_t b = 0; b < k && ok; ++b)
            if (same_point(pi[a], pj[(b + 1) % k]) && same_point(pi[(a + 1) % k], pj[b]) && a != b)
              ok = false;
      }
      if (!ok) continue;
      chosen[i] = m;
      if (go(i + 1)) return true;
    }
    return false;
  };
  if (!go(0)) return false;
  placements = chosen;
  return true;
}

}  // namespace

template <class T>
std::vector<RestrictedForm<T>> enumerate_restricted(const Polygon<T>& base, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_restricted: n must be positive");
  if (!is_simple(base) || sgn(signed_area(base)) <= 0)
    throw std::invalid_argument("enumerate_restricted: base polygon must be simple and CCW");
  const size_t k = base.size();
  std::vector<RigidMotion<T>> flips;  // half turns about the edge midpoints
  for (size_t i = 0; i < k; ++i) {
    Point<T> m = (base[i] + base[(i + 1) % k]) / T(2);
    flips.push_back(RigidMotion<T>::rotate(T(-1), T(0), m));
  }
  std::map<std::string, RestrictedForm<T>> level;
  for (const auto& seed : {RigidMotion<T>::identity(), RigidMotion<T>::rotate(T(-1), T(0))}) {
    RestrictedForm<T> f{base, {seed}};
    level.emplace(translation_key(f.complex()), f);
  }
  for (int size = 1; size < n; ++size) {
    std::map<std::string, RestrictedForm<T>> next;
    for (const auto& [key, form] : level) {
      auto cx = form.complex();
      for (const auto& m : form.placements)
        for (const auto& fl : flips) {
          RigidMotion<T> nm = m.after(fl);
          auto poly = transform(base, nm);
          bool dup = false;
          for (const auto& c : cx.cells) {
            bool all = true;
            for (const auto& v : poly) all = all && find_vertex(c, v) >= 0;
            dup = dup || all;
          }
          if (dup) continue;
          RestrictedForm<T> g = form;
          g.placements.push_back(nm);
          auto gc = g.complex();
          std::string gk = translation_key(gc);
          if (next.count(gk)) continue;
          if (!valid_contacts(gc)) continue;
          if (!corresponding_assignment(base, g.placements)) continue;
          next.emplace(gk, g);
        }
    }
    level = std::move(next);
  }
  std::vector<RestrictedForm<T>> out;
  for (auto& [k2, v] : level) out.push_back(v);
  return out;
}

Polyform parse_omino_grid(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(line);
  }
  while (!rows.empty() && rows.back().find_first_of("#X") == std::string::npos) rows.pop_back();
  std::vector<Cell> cells;
  const int h = static_cast<int>(rows.size());
  for (int r = 0; r < h; ++r)
    for (size_t x = 0; x < rows[r].size(); ++x)
      if (rows[r][x] == '#' || rows[r][x] == 'X')
        cells.push_back({static_cast<int>(x), h - 1 - r, 0});
  if (cells.empty()) throw std::invalid_argument("omino grid has no cells");
  return translate_to_origin(make_polyform(Family::Omino, cells));
}

std::string omino_grid(const Polyform& f) {
  Polyform g = translate_to_origin(f);
  int w = 0, h = 0;
  for (const auto& c : g.cells) {
    w = std::max(w, c.x + 1);
    h = std::max(h, c.y + 1);
  }
  std::vector<std::string> rows(h, std::string(w, '.'));
  for (const auto& c : g.cells) rows[h - 1 - c.y][c.x] = '#';
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

#define HINGEKIT_POLYFORM(T)                                                                    \
  template CellComplex<T> to_complex<T>(const Polyform&);                                       \
  template CellComplex<T> transform_complex<T>(const CellComplex<T>&, const T&,                 \
                                               const RigidMotion<T>&);                          \
  template std::vector<Edge> adjacency_graph<T>(const CellComplex<T>&);                         \
  template struct Region<T>;                                                                    \
  template Region<T> region<T>(const CellComplex<T>&);                                          \
  template bool valid_contacts<T>(const CellComplex<T>&);                                       \
  template GluingSequence gluing_sequence<T>(const CellComplex<T>&);                            \
  template GluingSequence gluing_sequence_from_tree<T>(const CellComplex<T>&,                   \
                                                       const std::vector<Edge>&);               \
  template bool is_valid_gluing_sequence<T>(const CellComplex<T>&, const GluingSequence&);      \
  template std::string translation_key<T>(const CellComplex<T>&);                               \
  template struct RestrictedForm<T>;                                                            \
  template std::vector<RestrictedForm<T>> enumerate_restricted<T>(const Polygon<T>&, int);

HINGEKIT_POLYFORM(Exact)
HINGEKIT_POLYFORM(Real)

}  // namespace hingekit
