#include "hingekit/realize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hingekit {

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{"polyomino_2n",     "polyomino_2nm2",
                                              "polyregular_kn",   "polyregular_knmk",
                                              "polyregular_half", "polyregular_half_m1",
                                              "polyabolo_4n"};
  return names;
}

int piece_count(const std::string& construction, int k, int n) {
  const int half = (k + 1) / 2;
  if (construction == "polyomino_2n") return 2 * n;
  if (construction == "polyomino_2nm2") return 2 * n - 2;
  if (construction == "polyregular_kn") return k * n;
  if (construction == "polyregular_knmk") return k * (n - 1);
  if (construction == "polyregular_half") return half * n;
  if (construction == "polyregular_half_m1") return half * (n - 1);
  if (construction == "polyabolo_4n") return 4 * n;
  if (construction == "restricted") return k * n;
  throw std::invalid_argument("unknown construction: " + construction);
}

template <class T>
HingedDissection<T> FamilyRule<T>::canonical(int n) const {
  if (n < c) throw std::invalid_argument(construction + " needs n >= " + std::to_string(c));
  std::vector<LocalPiece<T>> pcs;
  for (int i = 0; i < n - (c - 1); ++i) pcs.insert(pcs.end(), cell_pieces.begin(), cell_pieces.end());
  if (c == 2) {
    auto& p = pcs[merge_slot];
    Polygon<T> extra = outer_polygon<T>(k, merge_edge[0], merge_edge[1]);
    p = {remove_collinear(glue_along_edge(p.polygon, extra), {p.in, p.out}), p.in, p.out};
  }
  std::string label = construction + "(" + (construction.rfind("polyregular", 0) == 0
                                                 ? std::to_string(k) + ","
                                                 : std::string()) +
                      std::to_string(n) + ")";
  if (open_path) label = construction + "(" + std::to_string(n) + ")";
  return make_chain<T>(label, pcs, open_path ? Topology::Path : Topology::Cycle);
}

template <class T>
FamilyRule<T> family_rule(const std::string& construction, int k) {
  FamilyRule<T> r;
  r.construction = construction;
  if (construction == "polyomino_2n" || construction == "polyomino_2nm2") {
    r.k = 4;
    r.reference = regular_polygon<T>(4);
    r.cell_pieces = square_split<T>();
    if (construction == "polyomino_2nm2") {
      r.c = 2;
      r.merge_slot = 0;
      r.merge_edge = {r.cell_pieces[0].polygon[1], r.cell_pieces[0].polygon[2]};
    }
  } else if (construction == "polyregular_kn" || construction == "polyregular_knmk") {
    if (k < 3) throw std::invalid_argument(construction + " needs k >= 3");
    r.k = k;
    r.reference = regular_polygon<T>(k);
    r.cell_pieces = triangle_split<T>(k);
    if (construction == "polyregular_knmk") {
      r.c = 2;
      r.merge_slot = 0;
      r.merge_edge = {r.cell_pieces[0].polygon[0], r.cell_pieces[0].polygon[1]};
    }
  } else if (construction == "polyregular_half" || construction == "polyregular_half_m1") {
    if (k < 3) throw std::invalid_argument(construction + " needs k >= 3");
    r.k = k;
    r.reference = regular_polygon<T>(k);
    r.cell_pieces = half_split<T>(k);
    if (construction == "polyregular_half_m1") {
      r.c = 2;
      auto [slot, edge] = half_merge_slot<T>(k);
      r.merge_slot = slot;
      r.merge_edge = edge;
    }
  } else if (construction == "polyabolo_4n") {
    r.k = 3;
    Point<T> o(T(0), T(0)), a(T(1), T(0)), b(T(0), T(1));
    r.reference = {o, a, b};
    r.cell_pieces = abolo_split<T>();
  } else {
    throw std::invalid_argument("unknown construction: " + construction);
  }
  return r;
}

template <class T>
FamilyRule<T> restricted_rule(const Polygon<T>& base) {
  FamilyRule<T> r;
  r.construction = "restricted";
  r.k = static_cast<int>(base.size());
  r.reference = base;
  r.cell_pieces = cut_restricted(base);
  return r;
}

template <class T>
FamilyRule<T> scaled_rule(const FamilyRule<T>& rule, const T& scale) {
  if (rule.c != 1) throw std::invalid_argument("scaled_rule supports single-cell base cases only");
  FamilyRule<T> r = rule;
  auto sc = [&](const Point<T>& p) { return Point<T>(p * scale); };
  for (auto& v : r.reference) v = sc(v);
  for (auto& p : r.cell_pieces) {
    for (auto& v : p.polygon) v = sc(v);
    p.in = sc(p.in);
    p.out = sc(p.out);
  }
  return r;
}

namespace {

// Interns piece descriptors so that shapes compare by small integers.
template <class T>
struct KindTable {
  std::vector<Descriptor<T>> seen;
  int id(const Descriptor<T>& d) {
    for (size_t i = 0; i < seen.size(); ++i)
      if (same_descriptor(seen[i], d)) return static_cast<int>(i);
    seen.push_back(d);
    return static_cast<int>(seen.size() - 1);
  }
};

template <class T>
struct Placed {
  Polygon<T> poly;
  Point<T> in, out;
  int kind = -1;
  int phase = 0;
  int cell = -1;
  int uid = 0;
};

template <class T>
std::string fmt(const Point<T>& p) {
  std::ostringstream os;
  os << "(" << to_double(p.x()) << "," << to_double(p.y()) << ")";
  return os.str();
}

template <class T>
bool same_vertex_set(const Polygon<T>& a, const Polygon<T>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a)
    if (find_vertex(b, v) < 0) return false;
  return true;
}

template <class T>
class Engine {
 public:
  Engine(const FamilyRule<T>& rule, const CellComplex<T>& target, const GluingSequence& seq)
      : rule_(rule), target_(target), seq_(seq) {
    const int m = static_cast<int>(rule.period());
    for (int j = 0; j < m; ++j) {
      const auto& p = rule.cell_pieces[j];
      kinds_.push_back(table_.id(describe<T>(p.polygon, p.in, p.out)));
      rkinds_.push_back(table_.id(describe<T>(p.polygon, p.out, p.in)));
    }
  }

  Realization<T> run() {
    const int n = static_cast<int>(target_.size());
    if (n < rule_.c)
      throw RealizeError(rule_.construction + " needs at least " + std::to_string(rule_.c) + " cells", {});
    if (static_cast<int>(seq_.steps.size()) != n) throw RealizeError("gluing sequence does not cover the target", {});
    rule_.c == 1 ? base_single() : base_double();
    for (int s = rule_.c; s < n; ++s) attach(seq_.steps[s]);
    if (rule_.open_path) {
      auto first = std::find_if(cycle_.begin(), cycle_.end(), [](const Placed<T>& p) { return p.phase == 0; });
      std::rotate(cycle_.begin(), first, cycle_.end());
    }

    Realization<T> r;
    r.dissection = rule_.canonical(n);
    r.target = target_;
    std::vector<LocalPiece<T>> world;
    for (const auto& p : cycle_) world.push_back({p.poly, p.in, p.out});
    auto motions = match_chain(r.dissection, world);
    if (!motions) fail("realized cycle does not match " + r.dissection.name);
    r.motions = *motions;
    r.trace = trace_;
    // Host references become indices of the canonical pieces.
    std::map<int, int> canon;
    auto placed = r.placed();
    for (const auto& p : cycle_)
      for (size_t i = 0; i < placed.size(); ++i)
        if (same_vertex_set(placed[i], p.poly)) canon[p.uid] = static_cast<int>(i);
    for (auto& t : r.trace)
      if (t.host_piece >= 0) t.host_piece = canon.count(t.host_piece) ? canon[t.host_piece] : -1;
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    std::vector<std::string> partial;
    for (const auto& t : trace_)
      partial.push_back("cell " + std::to_string(t.cell) + " at " + fmt(t.hinge_point) +
                        (t.reversed ? " reversed" : "") + (t.note.empty() ? "" : " " + t.note));
    throw RealizeError(what, partial);
  }

  std::vector<RigidMotion<T>> versions(int cell) const {
    auto v = congruences(rule_.reference, target_.cells[cell]);
    if (v.empty()) throw RealizeError("target cell " + std::to_string(cell) + " is not a copy of the cell", {});
    return v;
  }

  Placed<T> place(const LocalPiece<T>& p, const RigidMotion<T>& m, bool reversed, int kind, int phase,
                  int cell) {
    Placed<T> q;
    q.poly = transform(p.polygon, m);
    q.in = m.apply(reversed ? p.out : p.in);
    q.out = m.apply(reversed ? p.in : p.out);
    q.kind = kind;
    q.phase = phase;
    q.cell = cell;
    q.uid = next_uid_++;
    return q;
  }

  void base_single() {
    int cell = seq_.steps[0].cell;
    auto m = versions(cell)[0];
    const int mm = static_cast<int>(rule_.period());
    for (int j = 0; j < mm; ++j) cycle_.push_back(place(rule_.cell_pieces[j], m, false, kinds_[j], j, cell));
    trace_.push_back({cell, -1, -1, cycle_[0].in, 0, false, "base"});
  }

  void base_double() {
    int slippery = seq_.steps[0].cell, cell = seq_.steps[1].cell;
    auto vs = versions(cell);
    Polygon<T> extra = outer_polygon<T>(rule_.k, rule_.merge_edge[0], rule_.merge_edge[1]);
    for (size_t v = 0; v < vs.size(); ++v) {
      if (!same_vertex_set(transform(extra, vs[v]), target_.cells[slippery])) continue;
      const int mm = static_cast<int>(rule_.period());
      for (int j = 0; j < mm; ++j) {
        LocalPiece<T> p = rule_.cell_pieces[j];
        int kind = kinds_[j];
        int owner = cell;
        if (j == rule_.merge_slot) {
          p.polygon = remove_collinear(glue_along_edge(p.polygon, extra), {p.in, p.out});
          kind = table_.id(describe<T>(p.polygon, p.in, p.out));
          owner = slippery;
        }
        cycle_.push_back(place(p, vs[v], false, kind, j, owner));
      }
      slippery_ = slippery;
      trace_.push_back({slippery, -1, -1, cycle_[0].in, static_cast<int>(v), false, "base, slippery"});
      trace_.push_back({cell, slippery, -1, cycle_[0].in, static_cast<int>(v), false, "base"});
      return;
    }
    fail("no version of the base case fits cells " + std::to_string(slippery) + " and " + std::to_string(cell));
  }

  // Hinge points of the cycle located at x, as pairs of cycle positions.
  std::vector<std::array<int, 2>> hinges_at(const Point<T>& x) const {
    std::vector<std::array<int, 2>> out;
    const int n = static_cast<int>(cycle_.size());
    for (int i = 0; i < n; ++i)
      if (same_point(cycle_[i].out, x)) out.push_back({i, (i + 1) % n});
    return out;
  }

  bool noncrossing_at(const std::vector<Point<T>>& points) const {
    std::vector<Polygon<T>> polys;
    for (const auto& p : cycle_) polys.push_back(p.poly);
    for (const auto& x : points)
      if (!hinge_noncrossing_at_point(x, polys, hinges_at(x))) return false;
    return true;
  }

  std::string attach_case(int cell, int parent) const {
    if (rule_.construction != "polyabolo_4n") return "";
    auto vs = congruences(target_.cells[parent], target_.cells[cell]);
    if (vs.empty()) return "";
    const auto& a = target_.cells[cell];
    T len(0);
    // Shared edge length tells leg from hypotenuse; the relative rotation splits legs.
    const auto& pc = target_.cells[parent];
    for (size_t i = 0; i < a.size(); ++i) {
      const auto& u = a[i];
      const auto& w = a[(i + 1) % a.size()];
      if (find_vertex(pc, u) >= 0 && find_vertex(pc, w) >= 0) len = dot<T>(Point<T>(w - u), Point<T>(w - u));
    }
    if (sgn(T(len - T(2))) == 0) return "case hypotenuse";
    return sgn(vs[0].linear(0, 0)) == 0 ? "case leg-quarter-turn" : "case leg-half-turn";
  }

  void attach(const Gluing& g) {
    const int cell = g.cell, parent = g.parent;
    if (parent == slippery_) fail("gluing attaches to the slippery cell");
    const auto& poly = target_.cells[cell];
    Point<T> e0 = poly[g.edge[0]], e1 = poly[g.edge[1]];
    const int n = static_cast<int>(cycle_.size());
    std::vector<std::pair<int, int>> cands;  // (priority, position)
    for (int i = 0; i < n; ++i) {
      if (!on_segment(cycle_[i].out, e0, e1)) continue;
      bool parent_host = cycle_[i].cell == parent || cycle_[(i + 1) % n].cell == parent;
      cands.push_back({parent_host ? 0 : 1, i});
    }
    std::stable_sort(cands.begin(), cands.end());
    auto vs = versions(cell);
    const int m = static_cast<int>(rule_.period());
    auto slot_at = [&](bool rev, int start, int t) { return rev ? ((start - t) % m + m) % m : (start + t) % m; };
    for (const auto& [prio, i] : cands) {
      const Point<T> p = cycle_[i].out;
      const int phase = cycle_[i].phase;
      for (size_t v = 0; v < vs.size(); ++v)
        for (int dir = 0; dir < 2; ++dir)
          for (int start = 0; start < m; ++start) {
            const bool rev = dir == 1;
            const auto& sp = rule_.cell_pieces[start];
            if (!same_point(vs[v].apply(rev ? sp.out : sp.in), p)) continue;
            bool phase_ok = true;
            for (int t = 0; t < m && phase_ok; ++t) {
              int slot = slot_at(rev, start, t);
              phase_ok = (rev ? rkinds_[slot] : kinds_[slot]) == kinds_[(phase + 1 + t) % m];
            }
            if (!phase_ok) continue;
            std::vector<Placed<T>> block;
            std::vector<Point<T>> touched{p};
            for (int t = 0; t < m; ++t) {
              block.push_back(place(rule_.cell_pieces[slot_at(rev, start, t)], vs[v], rev,
                                    kinds_[(phase + 1 + t) % m], (phase + 1 + t) % m, cell));
              touched.push_back(block.back().out);
            }
            auto saved = cycle_;
            cycle_.insert(cycle_.begin() + i + 1, block.begin(), block.end());
            if (noncrossing_at(touched)) {
              std::string note = prio == 0 ? "" : "host outside parent cell";
              std::string c = attach_case(cell, parent);
              if (!c.empty()) note = note.empty() ? c : note + "; " + c;
              trace_.push_back({cell, parent, saved[i].uid, p, static_cast<int>(v), rev, note});
              return;
            }
            cycle_ = std::move(saved);
          }
    }
    fail("no valid attach orientation for cell " + std::to_string(cell));
  }

  const FamilyRule<T>& rule_;
  const CellComplex<T>& target_;
  const GluingSequence& seq_;
  KindTable<T> table_;
  std::vector<int> kinds_, rkinds_;
  std::vector<Placed<T>> cycle_;
  std::vector<TraceStep<T>> trace_;
  int slippery_ = -1;
  int next_uid_ = 0;
};

}  // namespace

template <class T>
std::optional<std::vector<RigidMotion<T>>> match_chain(const HingedDissection<T>& canonical,
                                                       const std::vector<LocalPiece<T>>& placed) {
  const int n = static_cast<int>(placed.size());
  if (static_cast<int>(canonical.size()) != n || n == 0) return std::nullopt;
  auto canon = chain_pieces(canonical);
  KindTable<T> table;
  std::vector<int> ck(n), fk(n), rk(n);
  for (int i = 0; i < n; ++i) ck[i] = table.id(describe(canon[i]));
  for (int i = 0; i < n; ++i) {
    fk[i] = table.id(describe(placed[i]));
    rk[i] = table.id(describe<T>(placed[i].polygon, placed[i].out, placed[i].in));
  }
  const bool cyclic = canonical.topology == Topology::Cycle;
  for (int dir = 0; dir < 2; ++dir)
    for (int s = 0; s < (cyclic ? n : 1); ++s) {
      // Reversed paths put canonical piece i at placed n - 1 - i.
      auto idx = [&](int i) {
        if (!cyclic) return dir == 0 ? i : n - 1 - i;
        return dir == 0 ? (s + i) % n : ((s - i) % n + n) % n;
      };
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = ck[i] == (dir == 0 ? fk[idx(i)] : rk[idx(i)]);
      if (!ok) continue;
      std::vector<RigidMotion<T>> motions;
      for (int i = 0; i < n && ok; ++i) {
        const auto& w = placed[idx(i)];
        const Point<T>& win = dir == 0 ? w.in : w.out;
        const Point<T>& wout = dir == 0 ? w.out : w.in;
        std::optional<RigidMotion<T>> m;
        if (same_point(canon[i].in, canon[i].out)) {
          for (const auto& c : congruences(remove_collinear(canon[i].polygon, {canon[i].in}),
                                           remove_collinear(w.polygon, {win})))
            if (same_point(c.apply(canon[i].in), win)) {
              m = c;
              break;
            }
        } else {
          m = motion_between(canon[i].in, canon[i].out, win, wout);
        }
        if (!m || !same_vertex_set(remove_collinear(transform(canonical.pieces[i].polygon, *m)),
                                   remove_collinear(w.polygon)))
          ok = false;
        else
          motions.push_back(*m);
      }
      if (!ok) continue;
      // chain_pieces walks the canonical order; map back to piece indices.
      std::vector<int> order;
      chain_pieces(canonical, &order);
      std::vector<RigidMotion<T>> by_piece(n);
      for (int i = 0; i < n; ++i) by_piece[order[i]] = motions[i];
      return by_piece;
    }
  return std::nullopt;
}

template <class T>
Realization<T> realize(const FamilyRule<T>& rule, const CellComplex<T>& target, const GluingSequence& seq) {
  return Engine<T>(rule, target, seq).run();
}

template <class T>
Realization<T> realize(const FamilyRule<T>& rule, const CellComplex<T>& target) {
  return realize(rule, target, gluing_sequence(target));
}

template <class T>
Realization<T> realize(const std::string& construction, int k, const Polyform& target) {
  auto rule = family_rule<T>(construction, k);
  const bool abolo = construction == "polyabolo_4n";
  const bool omino = construction.rfind("polyomino", 0) == 0;
  Family expect = abolo ? Family::Abolo : omino ? Family::Omino : Family::Omino;
  if (!abolo && !omino) {
    if (k == 3) expect = Family::Iamond;
    else if (k == 6) expect = Family::Hex;
    else if (k == 4) expect = Family::Omino;
    else throw std::invalid_argument("grid targets exist only for k = 3, 4, 6");
  }
  if (target.family != expect)
    throw std::invalid_argument(construction + " does not apply to " + family_name(target.family) + " targets");
  return realize(rule, to_complex<T>(target));
}

HingedDissection<Exact> dual_omino_path(int n) {
  if (n < 1) throw std::invalid_argument("dual_omino_path needs n >= 1");
  auto h = h_polyomino_2n<Exact>(2 * n);
  h.name = "dual_omino_path(" + std::to_string(n) + ")";
  h.topology = Topology::Path;
  h.hinges.pop_back();
  return h;
}

Realization<Exact> realize_dual_omino(int n, const Polyform& target) {
  if (target.family != Family::Omino) throw std::invalid_argument("realize_dual_omino needs an omino target");
  const int cells = static_cast<int>(target.cells.size());
  auto path = dual_omino_path(n);
  if (cells == 2 * n) {
    auto r = realize<Exact>("polyomino_2n", 4, target);
    r.dissection = path;
    for (auto& t : r.trace) t.note = t.note.empty() ? "unit squares" : t.note + "; unit squares";
    return r;
  }
  if (cells != n)
    throw std::invalid_argument("realize_dual_omino(" + std::to_string(n) + ") needs " + std::to_string(n) +
                                " or " + std::to_string(2 * n) + " cells");
  // Squares of side sqrt 2, each cut into four triangles: realize the doubled cycle and
  // halve every piece through its apex.
  const Exact r2 = Exact::sqrt2();
  auto rule = scaled_rule(family_rule<Exact>("polyomino_2n"), r2);
  auto big_target = transform_complex(to_complex<Exact>(target), r2, RigidMotion<Exact>::identity());
  big_target.family = "omino*sqrt2";
  auto big = realize(rule, big_target);
  std::vector<int> order;
  auto chain = chain_pieces(big.dissection, &order);
  std::vector<LocalPiece<Exact>> world;
  for (size_t i = 0; i < chain.size(); ++i) {
    const auto& m = big.motions[order[i]];
    Point<Exact> a = m.apply(chain[i].in), b = m.apply(chain[i].out), c;
    for (const auto& v : chain[i].polygon)
      if (!same_point(v, chain[i].in) && !same_point(v, chain[i].out)) c = m.apply(v);
    Point<Exact> mid = (a + b) / Exact(2);
    auto ccw = [](Polygon<Exact> p) {
      if (sgn(signed_area(p)) < 0) std::reverse(p.begin(), p.end());
      return p;
    };
    world.push_back({ccw({a, c, mid}), a, c});
    world.push_back({ccw({c, b, mid}), c, b});
  }
  auto motions = match_chain(path, world);
  if (!motions) throw RealizeError("halved cycle does not match " + path.name, {});
  Realization<Exact> r;
  r.dissection = path;
  r.motions = *motions;
  r.target = big_target;
  r.trace = big.trace;
  for (auto& t : r.trace) {
    t.host_piece = -1;
    t.note = t.note.empty() ? "sqrt2 squares" : t.note + "; sqrt2 squares";
  }
  return r;
}

Polyform omino_as_abolo(const Polyform& omino, bool four_per_square) {
  if (omino.family != Family::Omino) throw std::invalid_argument("omino_as_abolo needs an omino");
  std::vector<Cell> cells;
  for (const auto& c : omino.cells) {
    if (four_per_square) {
      int a = c.x - c.y, b = c.x + c.y;
      cells.push_back({a, b, 0});
      cells.push_back({a - 1, b, 1});
      cells.push_back({a - 1, b - 1, 2});
      cells.push_back({a, b - 1, 3});
    } else {
      cells.push_back({c.x, c.y, 0});
      cells.push_back({c.x, c.y, 2});
    }
  }
  return make_polyform(Family::Abolo, cells);
}

std::pair<Realization<Exact>, Realization<Exact>> realize_polyabolo_as_omino_bridge(const Polyform& n_omino,
                                                                                    const Polyform& two_n_omino) {
  if (2 * n_omino.cells.size() != two_n_omino.cells.size())
    throw std::invalid_argument("bridge needs an n-omino and a 2n-omino");
  auto a = realize<Exact>("polyabolo_4n", 3, omino_as_abolo(n_omino, true));
  auto b = realize<Exact>("polyabolo_4n", 3, omino_as_abolo(two_n_omino, false));
  return {a, b};
}

std::pair<Realization<Exact>, Realization<Exact>> realize_polyabolo_as_omino_bridge(int n) {
  if (n < 1) throw std::invalid_argument("bridge needs n >= 1");
  std::vector<Cell> a, b;
  for (int i = 0; i < n; ++i) a.push_back({i, 0, 0});
  for (int i = 0; i < 2 * n; ++i) b.push_back({i, 0, 0});
  return realize_polyabolo_as_omino_bridge(make_polyform(Family::Omino, a), make_polyform(Family::Omino, b));
}

#define HINGEKIT_REALIZE(T)                                                                          \
  template struct FamilyRule<T>;                                                                     \
  template FamilyRule<T> family_rule<T>(const std::string&, int);                                    \
  template FamilyRule<T> restricted_rule<T>(const Polygon<T>&);                                      \
  template FamilyRule<T> scaled_rule<T>(const FamilyRule<T>&, const T&);                             \
  template Realization<T> realize<T>(const FamilyRule<T>&, const CellComplex<T>&);                   \
  template Realization<T> realize<T>(const FamilyRule<T>&, const CellComplex<T>&,                    \
                                     const GluingSequence&);                                         \
  template Realization<T> realize<T>(const std::string&, int, const Polyform&);                      \
  template std::optional<std::vector<RigidMotion<T>>> match_chain<T>(const HingedDissection<T>&,     \
                                                                     const std::vector<LocalPiece<T>>&);

HINGEKIT_REALIZE(Exact)
HINGEKIT_REALIZE(Real)

}  // namespace hingekit
