#include "hingekit/transforms.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace hingekit {

namespace {

template <class T>
Polygon<T> ccw(Polygon<T> p) {
  if (sgn(signed_area(p)) < 0) std::reverse(p.begin(), p.end());
  return p;
}

template <class T>
T dist2(const Point<T>& a, const Point<T>& b) {
  Point<T> d = b - a;
  return dot<T>(d, d);
}

// Vertices from index i to index j (inclusive), walking forward.
template <class T>
Polygon<T> arc(const Polygon<T>& poly, int i, int j) {
  const int n = static_cast<int>(poly.size());
  Polygon<T> out{poly[i]};
  for (int k = i; k != j;) {
    k = (k + 1) % n;
    out.push_back(poly[k]);
  }
  return out;
}

// Index of p in poly, inserting it on the edge that contains it if needed; -1 if off the boundary.
template <class T>
int insert_vertex(Polygon<T>& poly, const Point<T>& p) {
  int i = find_vertex(poly, p);
  if (i >= 0) return i;
  const int n = static_cast<int>(poly.size());
  for (int k = 0; k < n; ++k)
    if (strictly_on_segment(p, poly[k], poly[(k + 1) % n])) {
      poly.insert(poly.begin() + k + 1, p);
      return k + 1;
    }
  return -1;
}

// The open segment a-b lies in the interior of poly.
template <class T>
bool interior_segment(const Polygon<T>& poly, const Point<T>& a, const Point<T>& b) {
  if (same_point(a, b)) return false;
  const int n = static_cast<int>(poly.size());
  for (int k = 0; k < n; ++k) {
    const auto& u = poly[k];
    const auto& w = poly[(k + 1) % n];
    if (proper_crossing(a, b, u, w)) return false;
    if (strictly_on_segment(u, a, b)) return false;
  }
  Point<T> mid = (a + b) / T(2);
  return locate(mid, poly) == Where::Inside;
}

template <class T>
RigidMotion<T> half_turn(const Point<T>& c) {
  return RigidMotion<T>::rotate(T(-1), T(0), c);
}

template <class T>
Point<T> foot(const Point<T>& p, const Point<T>& a, const Point<T>& b) {
  Point<T> d = b - a;
  T t = dot<T>(Point<T>(p - a), d) / dot<T>(d, d);
  return a + d * t;
}

template <class T>
struct SubPiece {
  Polygon<T> poly;
  Point<T> in, out;
  int parent;
};

}  // namespace

template <class T>
Polygon<T> convex_hull(std::vector<Point<T>> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point<T>& a, const Point<T>& b) {
    int sx = sgn(T(a.x() - b.x()));
    return sx != 0 ? sx < 0 : sgn(T(a.y() - b.y())) < 0;
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Point<T>& a, const Point<T>& b) { return same_point(a, b); }),
            pts.end());
  if (pts.size() < 3) return pts;
  Polygon<T> hull(2 * pts.size());
  size_t k = 0;
  for (size_t pass = 0; pass < 2; ++pass) {
    const size_t base = k;
    for (size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pass == 0 ? pts[i] : pts[pts.size() - 1 - i];
      while (k >= base + 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
      hull[k++] = p;
    }
    --k;
  }
  hull.resize(k);
  return hull;
}

template <class T>
Realization<T> realization_of(const HingedDissection<T>& h, const Rotation<T>& rot) {
  if (rot.motions.size() != h.size()) throw std::invalid_argument("rotation has the wrong number of motions");
  Realization<T> r;
  r.dissection = h;
  r.motions = rot.motions;
  r.target.family = rot.name.empty() ? "polygon" : rot.name;
  r.target.cells = {rot.polygon};
  return r;
}

DudeneyData dudeney_dissection() {
  using P = Point<Real>;
  const Real s3 = sqrt(Real(3));
  // Side 2 has area sqrt 3; scale by 3^(-1/4) for unit area.
  const Real f = 1 / sqrt(s3);
  P A(Real(0), Real(0)), B(Real(2), Real(0)), C(Real(1), s3);
  P D = (A + C) / Real(2), E = (B + C) / Real(2);
  P J(Real(1.5) - sqrt(Real(s3 - Real(0.75))), Real(0));
  P K = J + P(Real(1), Real(0));
  P L = foot(D, E, J), M = foot(K, E, J);
  std::map<std::string, P> pts{{"A", A}, {"B", B}, {"C", C}, {"D", D}, {"E", E},
                               {"J", J}, {"K", K}, {"L", L}, {"M", M}};
  for (auto& [name, p] : pts) p = P(p * f);
  auto at = [&](const char* n) { return pts.at(n); };

  DudeneyData d;
  d.points = pts;
  std::vector<LocalPiece<Real>> pcs{
      {ccw<Real>({at("A"), at("J"), at("L"), at("D")}), at("J"), at("D")},
      {ccw<Real>({at("D"), at("L"), at("E"), at("C")}), at("D"), at("E")},
      {ccw<Real>({at("K"), at("B"), at("E"), at("M")}), at("E"), at("K")},
      {ccw<Real>({at("J"), at("K"), at("M")}), at("K"), at("J")},
  };
  d.chain = make_chain<Real>("dudeney", pcs, Topology::Path, "q");
  d.triangle = {"triangle", {at("A"), at("B"), at("C")}, std::vector<RigidMotion<Real>>(4)};
  auto he = half_turn(at("E"));
  d.square.name = "square";
  d.square.motions = {he.after(half_turn(at("D"))), he, RigidMotion<Real>::identity(), half_turn(at("K"))};
  std::vector<P> all;
  for (size_t i = 0; i < pcs.size(); ++i)
    for (const auto& v : transform(pcs[i].polygon, d.square.motions[i])) all.push_back(v);
  d.square.polygon = remove_collinear(convex_hull(all));
  return d;
}

template <class T>
Rotation<T> CycleConversion<T>::lift(const Rotation<T>& r) const {
  Rotation<T> out{r.name, r.polygon, {}};
  for (int p : parent) out.motions.push_back(r.motions.at(p));
  return out;
}

template <class T>
CycleConversion<T> chain_to_cycle(const HingedDissection<T>& h) {
  h.validate();
  const int n = static_cast<int>(h.size());
  if (n < 2) throw std::invalid_argument("chain_to_cycle needs at least two pieces");

  // Spanning tree of the hinge graph, breadth first from piece 0.
  struct TreeEdge {
    int a, b;
    Point<T> pa, pb;
  };
  std::vector<TreeEdge> tree;
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    for (const auto& hg : h.hinges) {
      int other = -1;
      Point<T> pc, po;
      if (hg.piece_a == cur) {
        other = hg.piece_b;
        pc = h.pieces[cur].anchors[hg.anchor_a];
        po = h.pieces[other].anchors[hg.anchor_b];
      } else if (hg.piece_b == cur) {
        other = hg.piece_a;
        pc = h.pieces[cur].anchors[hg.anchor_b];
        po = h.pieces[other].anchors[hg.anchor_a];
      }
      if (other < 0 || seen[other]) continue;
      seen[other] = true;
      tree.push_back({cur, other, pc, po});
      q.push(other);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("chain_to_cycle: hinge graph is disconnected");

  // (piece, local point) -> the matching point on the other side of the tree hinge.
  std::vector<std::vector<std::pair<Point<T>, std::pair<int, Point<T>>>>> across(n);
  for (const auto& e : tree) {
    across[e.a].push_back({e.pa, {e.b, e.pb}});
    across[e.b].push_back({e.pb, {e.a, e.pa}});
  }

  std::vector<SubPiece<T>> subs;
  std::map<std::pair<int, std::string>, int> starts_at;
  auto add = [&](int piece, Polygon<T> poly, const Point<T>& in, const Point<T>& out) {
    starts_at[{piece, point_key(in)}] = static_cast<int>(subs.size());
    subs.push_back({std::move(poly), in, out, piece});
  };

  for (int p = 0; p < n; ++p) {
    Polygon<T> poly = h.pieces[p].polygon;
    std::vector<int> idx;
    for (const auto& [pt, other] : across[p]) idx.push_back(find_vertex(poly, pt));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw std::invalid_argument("chain_to_cycle: piece " + h.pieces[p].id + " has two tree hinges at one point");
    const int hcount = static_cast<int>(idx.size());
    if (hcount == 1) {
      const Point<T> x = poly[idx[0]];
      if (n == 2 && p == 1) {
        // Two pieces: leaving one uncut already gives three.
        add(p, poly, x, x);
        continue;
      }
      // Cut from the hinge to the farthest boundary point that a straight cut can reach.
      const int m = static_cast<int>(poly.size());
      std::vector<Point<T>> cands;
      for (int k = 0; k < m; ++k) cands.push_back(poly[k]);
      for (int k = 0; k < m; ++k) cands.push_back((poly[k] + poly[(k + 1) % m]) / T(2));
      std::stable_sort(cands.begin(), cands.begin() + m,
                       [&](const Point<T>& a, const Point<T>& b) { return dist2(x, a) > dist2(x, b); });
      std::stable_sort(cands.begin() + m, cands.end(),
                       [&](const Point<T>& a, const Point<T>& b) { return dist2(x, a) > dist2(x, b); });
      bool done = false;
      for (const auto& y : cands) {
        if (!interior_segment(poly, x, y)) continue;
        Polygon<T> cut = poly;
        int iy = insert_vertex(cut, y);
        int ix = find_vertex(cut, x);
        add(p, arc(cut, ix, iy), x, y);
        add(p, arc(cut, iy, ix), y, x);
        done = true;
        break;
      }
      if (!done) throw std::invalid_argument("chain_to_cycle: no cut for leaf piece " + h.pieces[p].id);
      continue;
    }
    std::vector<Point<T>> xs;
    for (int i : idx) xs.push_back(poly[i]);
    if (hcount == 2 && interior_segment(poly, xs[0], xs[1])) {
      add(p, arc(poly, idx[0], idx[1]), xs[0], xs[1]);
      add(p, arc(poly, idx[1], idx[0]), xs[1], xs[0]);
      continue;
    }
    // Star from an interior point that sees every hinge.
    std::vector<Point<T>> centres;
    Point<T> avg = Point<T>::Zero();
    for (const auto& v : poly) avg += v;
    centres.push_back(avg / T(static_cast<int>(poly.size())));
    for (const auto& t : ear_clip(poly)) centres.push_back((poly[t[0]] + poly[t[1]] + poly[t[2]]) / T(3));
    bool done = false;
    for (const auto& c : centres) {
      if (locate(c, poly) != Where::Inside) continue;
      bool sees = true;
      for (const auto& x : xs) sees = sees && interior_segment(poly, c, x);
      if (!sees) continue;
      for (int j = 0; j < hcount; ++j) {
        Polygon<T> sp = arc(poly, idx[j], idx[(j + 1) % hcount]);
        sp.push_back(c);
        add(p, sp, xs[j], xs[(j + 1) % hcount]);
      }
      done = true;
      break;
    }
    if (!done) throw std::invalid_argument("chain_to_cycle: no star centre for piece " + h.pieces[p].id);
  }

  // Walk around the tree: at a tree hinge cross to the neighbour, otherwise stay in the piece.
  std::vector<int> tour{0};
  std::vector<bool> used(subs.size(), false);
  used[0] = true;
  for (;;) {
    const auto& s = subs[tour.back()];
    int piece = s.parent;
    Point<T> at = s.out;
    for (const auto& [pt, other] : across[piece])
      if (same_point(pt, s.out)) {
        piece = other.first;
        at = other.second;
      }
    auto it = starts_at.find({piece, point_key(at)});
    if (it == starts_at.end()) throw std::logic_error("chain_to_cycle: broken tour");
    if (it->second == 0) break;
    if (used[it->second]) throw std::logic_error("chain_to_cycle: tour revisits a piece");
    used[it->second] = true;
    tour.push_back(it->second);
  }
  if (tour.size() != subs.size()) throw std::logic_error("chain_to_cycle: tour misses pieces");

  CycleConversion<T> out;
  std::vector<LocalPiece<T>> pcs;
  for (int i : tour) {
    pcs.push_back({subs[i].poly, subs[i].in, subs[i].out});
    out.parent.push_back(subs[i].parent);
  }
  out.cycle = make_chain<T>(h.name + "_cycle", pcs, Topology::Cycle, "c");
  return out;
}

template <class T>
MidpointResult<T> add_midpoint_hinges(const HingedDissection<T>& h, const std::vector<Rotation<T>>& rotations) {
  if (h.topology != Topology::Cycle) throw std::invalid_argument("add_midpoint_hinges needs a cycle");
  std::vector<int> order;
  auto pcs = chain_pieces(h, &order);
  std::vector<std::vector<RigidMotion<T>>> motions;
  for (const auto& r : rotations) {
    if (r.motions.size() != h.size()) throw std::invalid_argument("rotation has the wrong number of motions");
    std::vector<RigidMotion<T>> ms;
    for (int i : order) ms.push_back(r.motions[i]);
    motions.push_back(ms);
  }
  MidpointResult<T> res;

  for (size_t ri = 0; ri < rotations.size(); ++ri) {
    const auto& outer = rotations[ri].polygon;
    for (size_t e = 0; e < outer.size(); ++e) {
      const Point<T> m = (outer[e] + outer[(e + 1) % outer.size()]) / T(2);
      const auto& ms = motions[ri];
      bool hinged = false;
      for (size_t i = 0; i < pcs.size() && !hinged; ++i) hinged = same_point(ms[i].apply(pcs[i].out), m);
      if (hinged) continue;
      // The piece whose boundary contains m, preferring one where m is inside an edge.
      int host = -1;
      for (int pass = 0; pass < 2 && host < 0; ++pass)
        for (size_t i = 0; i < pcs.size() && host < 0; ++i) {
          auto w = transform(pcs[i].polygon, ms[i]);
          const int k = static_cast<int>(w.size());
          for (int j = 0; j < k && host < 0; ++j)
            if (pass == 0 ? strictly_on_segment(m, w[j], w[(j + 1) % k]) : same_point(m, w[j]))
              host = static_cast<int>(i);
        }
      if (host < 0) throw std::invalid_argument("add_midpoint_hinges: midpoint is not on any piece");
      const Point<T> ml = ms[host].inverse().apply(m);
      Polygon<T> poly = pcs[host].polygon;
      insert_vertex(poly, ml);
      const Point<T> a = pcs[host].in, b = pcs[host].out;
      const int ia = find_vertex(poly, a), ib = find_vertex(poly, b), im = find_vertex(poly, ml);
      // q1 is the boundary arc from a to b (or b to a) through m; r candidates lie on q2.
      bool m_on_ab = false;
      for (int k = ia; k != ib; k = (k + 1) % static_cast<int>(poly.size()))
        if (k == im) m_on_ab = true;
      Polygon<T> q2 = m_on_ab ? arc(poly, ib, ia) : arc(poly, ia, ib);
      std::vector<Point<T>> rs{a, b};
      int longest = -1;
      for (int k = 0; k + 1 < static_cast<int>(q2.size()); ++k)
        if (longest < 0 || dist2(q2[k], q2[k + 1]) > dist2(q2[longest], q2[longest + 1])) longest = k;
      if (longest >= 0) rs.push_back((q2[longest] + q2[longest + 1]) / T(2));

      bool done = false;
      for (size_t ci = 0; ci < rs.size() && !done; ++ci) {
        Polygon<T> cut = poly;
        const int ir = insert_vertex(cut, rs[ci]);
        const int jm = find_vertex(cut, ml);
        if (ir < 0 || !interior_segment(cut, rs[ci], ml)) continue;
        Polygon<T> p1 = arc(cut, ir, jm), p2 = arc(cut, jm, ir);
        auto has = [](const Polygon<T>& p, const Point<T>& x) { return find_vertex(p, x) >= 0; };
        // The piece keeping the entry hinge is the one without the exit, when both touch a.
        bool first_is_a = has(p1, a) && (!has(p2, a) || !has(p1, b));
        const Polygon<T>& pa = first_is_a ? p1 : p2;
        const Polygon<T>& pb = first_is_a ? p2 : p1;
        if (!has(pa, a) || !has(pb, b)) continue;
        std::vector<LocalPiece<T>> repl{{pa, a, ml}, {pb, ml, b}};
        pcs.erase(pcs.begin() + host);
        pcs.insert(pcs.begin() + host, repl.begin(), repl.end());
        for (auto& mv : motions) {
          RigidMotion<T> keep = mv[host];
          mv.insert(mv.begin() + host, keep);
        }
        std::ostringstream log;
        log << rotations[ri].name << " edge " << e << ": cut piece " << host << " from "
            << (ci == 0 ? "its entry hinge" : ci == 1 ? "its exit hinge" : "the midpoint of its longest free edge");
        res.log.push_back(log.str());
        done = true;
      }
      if (!done) throw std::invalid_argument("add_midpoint_hinges: no interior cut reaches a midpoint");
    }
  }
  res.cycle = make_chain<T>(h.name + "_mid", pcs, Topology::Cycle, "m");
  for (size_t ri = 0; ri < rotations.size(); ++ri)
    res.rotations.push_back({rotations[ri].name, rotations[ri].polygon, motions[ri]});
  return res;
}

ExtendibleChain<Real> dudeney_extendible_chain() {
  using P = Point<Real>;
  auto d = dudeney_dissection();
  auto at = [&](const char* n) { return d.points.at(n); };
  P N = (at("A") + at("B")) / Real(2);
  P U = (at("J") + at("M")) / Real(2);
  P X = at("C") + (at("D") - at("C")) / Real(4);
  std::vector<LocalPiece<Real>> pcs{
      {ccw<Real>({at("A"), at("J"), at("L"), at("D")}), at("J"), at("D")},  // Q1
      {ccw<Real>({at("D"), at("L"), X}), at("D"), at("L")},                // Q2a
      {ccw<Real>({at("L"), at("E"), at("C"), X}), at("L"), at("E")},       // Q2b
      {ccw<Real>({at("K"), at("B"), at("E"), at("M")}), at("E"), at("K")}, // Q3
      {ccw<Real>({N, at("K"), at("M")}), at("K"), at("M")},                 // T3
      {ccw<Real>({N, at("M"), U}), at("M"), N},                             // T2
      {ccw<Real>({at("J"), N, U}), N, at("J")},                             // T1
  };
  const std::vector<int> parent{0, 1, 1, 2, 3, 3, 3};
  ExtendibleChain<Real> c;
  c.chain = make_chain<Real>("dudeney_extendible", pcs, Topology::Path, "x");
  c.p = {"triangle", d.triangle.polygon, std::vector<RigidMotion<Real>>(pcs.size())};
  c.q = {"square", d.square.polygon, {}};
  for (int p : parent) c.q.motions.push_back(d.square.motions[p]);
  return c;
}

template <class T>
std::vector<std::string> extendible_violations(const ExtendibleChain<T>& c) {
  std::vector<std::string> out;
  if (c.chain.topology != Topology::Path) out.push_back("chain is not a path");
  std::vector<int> order;
  auto pcs = chain_pieces(c.chain, &order);
  for (const auto* r : {&c.p, &c.q}) {
    auto rep = verify_configuration(realization_of(c.chain, *r));
    if (!rep.pass()) out.push_back(r->name + ": configuration fails verification");
    std::vector<Point<T>> hinges;
    for (size_t i = 0; i + 1 < pcs.size(); ++i) hinges.push_back(r->motions[order[i]].apply(pcs[i].out));
    const auto& poly = r->polygon;
    for (size_t e = 0; e < poly.size(); ++e) {
      const auto& a = poly[e];
      const auto& b = poly[(e + 1) % poly.size()];
      Point<T> mid = (a + b) / T(2);
      bool ok = false;
      for (const auto& x : hinges) ok = ok || same_point(x, a) || same_point(x, b) || same_point(x, mid);
      if (!ok) out.push_back(r->name + ": edge " + std::to_string(e) + " has no hinge at its midpoint or ends");
    }
    Point<T> first = r->motions[order.front()].apply(pcs.front().in);
    Point<T> last = r->motions[order.back()].apply(pcs.back().out);
    if (!same_point(first, last)) out.push_back(r->name + ": end vertices do not coincide");
  }
  return out;
}

template <class T>
HingedDissection<T> concat_extendible(const ExtendibleChain<T>& c, int n) {
  if (n < 1) throw std::invalid_argument("concat_extendible needs n >= 1");
  auto pcs = chain_pieces(c.chain);
  std::vector<LocalPiece<T>> all;
  for (int i = 0; i < n; ++i) all.insert(all.end(), pcs.begin(), pcs.end());
  return make_chain<T>(c.chain.name + "^" + std::to_string(n), all, Topology::Path, "x");
}

template <class T>
FamilyRule<T> extendible_rule(const ExtendibleChain<T>& c, bool second) {
  const auto& r = second ? c.q : c.p;
  std::vector<int> order;
  auto pcs = chain_pieces(c.chain, &order);
  FamilyRule<T> rule;
  rule.construction = c.chain.name + "_" + r.name;
  rule.k = static_cast<int>(r.polygon.size());
  rule.reference = r.polygon;
  rule.open_path = true;
  for (size_t i = 0; i < pcs.size(); ++i) {
    const auto& m = r.motions[order[i]];
    rule.cell_pieces.push_back({transform(pcs[i].polygon, m), m.apply(pcs[i].in), m.apply(pcs[i].out)});
  }
  return rule;
}

template <class T>
Realization<T> realize_extendible(const ExtendibleChain<T>& c, const CellComplex<T>& target) {
  if (target.cells.empty()) throw std::invalid_argument("empty target");
  bool second;
  if (!congruences(c.q.polygon, target.cells[0]).empty()) second = true;
  else if (!congruences(c.p.polygon, target.cells[0]).empty()) second = false;
  else throw std::invalid_argument("target cells match neither polygon of the chain");
  auto r = realize(extendible_rule(c, second), target);
  // Express the motions against the chain's own frames.
  auto canon = concat_extendible(c, static_cast<int>(target.size()));
  std::vector<int> order;
  auto rp = chain_pieces(r.dissection, &order);
  std::vector<LocalPiece<T>> world;
  for (size_t i = 0; i < rp.size(); ++i) {
    const auto& m = r.motions[order[i]];
    world.push_back({transform(rp[i].polygon, m), m.apply(rp[i].in), m.apply(rp[i].out)});
  }
  auto motions = match_chain(canon, world);
  if (!motions) throw RealizeError("realized path does not match " + canon.name, {});
  r.dissection = canon;
  r.motions = *motions;
  for (auto& t : r.trace) t.host_piece = -1;
  return r;
}

CellComplex<Real> scaled_target(const ExtendibleChain<Real>& c, const Polyform& target) {
  const size_t k = target.family == Family::Iamond ? 3 : target.family == Family::Omino ? 4 : 0;
  const Rotation<Real>* r = c.p.polygon.size() == k ? &c.p : c.q.polygon.size() == k ? &c.q : nullptr;
  if (!r) throw std::invalid_argument(std::string("chain has no polygon for ") + family_name(target.family) + " targets");
  Real side = sqrt(dist2(r->polygon[0], r->polygon[1]));
  auto cx = transform_complex(to_complex<Real>(target), side, RigidMotion<Real>::identity());
  return cx;
}

Realization<Real> realize_extendible(const ExtendibleChain<Real>& c, const Polyform& target) {
  return realize_extendible(c, scaled_target(c, target));
}

#define HINGEKIT_TRANSFORMS(T)                                                                         \
  template Polygon<T> convex_hull<T>(std::vector<Point<T>>);                                           \
  template Realization<T> realization_of<T>(const HingedDissection<T>&, const Rotation<T>&);           \
  template struct CycleConversion<T>;                                                                  \
  template CycleConversion<T> chain_to_cycle<T>(const HingedDissection<T>&);                           \
  template MidpointResult<T> add_midpoint_hinges<T>(const HingedDissection<T>&,                        \
                                                    const std::vector<Rotation<T>>&);                  \
  template std::vector<std::string> extendible_violations<T>(const ExtendibleChain<T>&);               \
  template HingedDissection<T> concat_extendible<T>(const ExtendibleChain<T>&, int);                   \
  template FamilyRule<T> extendible_rule<T>(const ExtendibleChain<T>&, bool);                          \
  template Realization<T> realize_extendible<T>(const ExtendibleChain<T>&, const CellComplex<T>&);

HINGEKIT_TRANSFORMS(Exact)
HINGEKIT_TRANSFORMS(Real)

}  // namespace hingekit
