#include "hingekit/dissection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace hingekit {

const char* topology_name(Topology t) {
  switch (t) {
    case Topology::Path: return "path";
    case Topology::Cycle: return "cycle";
    case Topology::Tree: return "tree";
    case Topology::Graph: return "graph";
  }
  return "?";
}

Topology topology_from_name(const std::string& s) {
  if (s == "path") return Topology::Path;
  if (s == "cycle") return Topology::Cycle;
  if (s == "tree") return Topology::Tree;
  if (s == "graph") return Topology::Graph;
  throw std::invalid_argument("unknown topology: " + s);
}

bool exact_capable(int k) { return k >= 3 && 24 % k == 0; }

template <class T>
T HingedDissection<T>::area() const {
  T s(0);
  for (const auto& p : pieces) s += signed_area(p.polygon);
  return s;
}

template <class T>
void HingedDissection<T>::validate() const {
  const int n = static_cast<int>(pieces.size());
  if (n == 0) throw std::invalid_argument("dissection has no pieces");
  for (const auto& p : pieces) {
    if (!is_simple(p.polygon) || sgn(signed_area(p.polygon)) <= 0)
      throw std::invalid_argument("piece " + p.id + " is not a simple CCW polygon");
    for (const auto& a : p.anchors)
      if (find_vertex(p.polygon, a) < 0)
        throw std::invalid_argument("piece " + p.id + " has an anchor off its vertex list");
  }
  std::vector<std::vector<int>> adj(n);
  for (const auto& h : hinges) {
    if (h.piece_a < 0 || h.piece_a >= n || h.piece_b < 0 || h.piece_b >= n || h.piece_a == h.piece_b)
      throw std::invalid_argument("hinge joins invalid pieces");
    if (h.anchor_a < 0 || h.anchor_a >= static_cast<int>(pieces[h.piece_a].anchors.size()) ||
        h.anchor_b < 0 || h.anchor_b >= static_cast<int>(pieces[h.piece_b].anchors.size()))
      throw std::invalid_argument("hinge refers to a missing anchor");
    adj[h.piece_a].push_back(h.piece_b);
    adj[h.piece_b].push_back(h.piece_a);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) throw std::invalid_argument("hinge graph is disconnected");
  const size_t h = hinges.size();
  switch (topology) {
    case Topology::Cycle:
      if (n >= 2 && h != static_cast<size_t>(n))
        throw std::invalid_argument("cycle needs as many hinges as pieces");
      for (const auto& a : adj)
        if (n >= 3 && a.size() != 2) throw std::invalid_argument("cycle piece without degree 2");
      break;
    case Topology::Path:
      if (h != static_cast<size_t>(n - 1)) throw std::invalid_argument("path needs n - 1 hinges");
      for (const auto& a : adj)
        if (a.size() > 2) throw std::invalid_argument("path piece with degree above 2");
      break;
    case Topology::Tree:
      if (h != static_cast<size_t>(n - 1)) throw std::invalid_argument("tree needs n - 1 hinges");
      break;
    case Topology::Graph:
      break;
  }
}

template <class T>
HingedDissection<T> make_chain(const std::string& name, const std::vector<LocalPiece<T>>& pieces,
                               Topology topology, const std::string& id_prefix) {
  HingedDissection<T> h;
  h.name = name;
  h.topology = topology;
  const int n = static_cast<int>(pieces.size());
  for (int i = 0; i < n; ++i)
    h.pieces.push_back({id_prefix + std::to_string(i), pieces[i].polygon, {pieces[i].in, pieces[i].out}});
  int hinge_count = topology == Topology::Cycle ? n : n - 1;
  if (topology == Topology::Cycle && n == 1) hinge_count = 0;
  for (int i = 0; i < hinge_count; ++i) h.hinges.push_back({i, 1, (i + 1) % n, 0});
  return h;
}

template <class T>
std::string Descriptor<T>::str() const {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    s += ScalarTraits<T>::key(values[i]);
    s += (i % 3 == 2) ? ";" : ",";
    if (i % 3 == 2) s += std::to_string(flags[i / 3]) + "|";
  }
  return s;
}

template <class T>
Descriptor<T> describe(const Polygon<T>& poly, const std::optional<Point<T>>& entry,
                       const std::optional<Point<T>>& exit) {
  std::vector<Point<T>> keep;
  if (entry) keep.push_back(*entry);
  if (exit) keep.push_back(*exit);
  Polygon<T> p = remove_collinear(poly, keep);
  const int n = static_cast<int>(p.size());
  int start = 0;
  if (!keep.empty()) {
    start = find_vertex(p, keep.front());
    if (start < 0) throw std::invalid_argument("describe: anchor is not a vertex");
  }
  Descriptor<T> d;
  for (int s = 0; s < n; ++s) {
    int i = (start + s) % n;
    const auto& prev = p[(i + n - 1) % n];
    const auto& cur = p[i];
    const auto& next = p[(i + 1) % n];
    Point<T> ein = cur - prev, eout = next - cur;
    d.values.push_back(dot<T>(eout, eout));
    d.values.push_back(dot<T>(ein, eout));
    d.values.push_back(cross<T>(ein, eout));
    int f = 0;
    if (entry && same_point(cur, *entry)) f |= 1;
    if (exit && same_point(cur, *exit)) f |= 2;
    d.flags.push_back(f);
  }
  return d;
}

template <class T>
bool same_descriptor(const Descriptor<T>& a, const Descriptor<T>& b) {
  if (a.values.size() != b.values.size() || a.flags != b.flags) return false;
  for (size_t i = 0; i < a.values.size(); ++i)
    if (sgn(T(a.values[i] - b.values[i])) != 0) return false;
  return true;
}

template <class T>
std::vector<LocalPiece<T>> chain_pieces(const HingedDissection<T>& h, std::vector<int>* order) {
  const int n = static_cast<int>(h.pieces.size());
  if (h.topology == Topology::Tree || h.topology == Topology::Graph)
    throw std::invalid_argument("chain_pieces: not a chain");
  std::vector<std::vector<int>> incident(n);
  for (size_t k = 0; k < h.hinges.size(); ++k) {
    incident[h.hinges[k].piece_a].push_back(static_cast<int>(k));
    incident[h.hinges[k].piece_b].push_back(static_cast<int>(k));
  }
  int start = 0;
  if (h.topology == Topology::Path)
    for (int i = 0; i < n; ++i)
      if (incident[i].size() <= 1) {
        start = i;
        break;
      }
  // Walk hinge by hinge so that two pieces joined twice still get distinct anchors.
  std::vector<int> seq{start};
  std::vector<std::optional<Point<T>>> in(n), out(n);
  std::vector<bool> used(h.hinges.size(), false);
  int cur = start;
  for (int step = 0; step < static_cast<int>(h.hinges.size()); ++step) {
    int pick = -1;
    for (int k : incident[cur])
      if (!used[k]) {
        pick = k;
        break;
      }
    if (pick < 0) break;
    used[pick] = true;
    const auto& hg = h.hinges[pick];
    const bool a_side = hg.piece_a == cur;
    int next = a_side ? hg.piece_b : hg.piece_a;
    out[cur] = h.pieces[cur].anchors[a_side ? hg.anchor_a : hg.anchor_b];
    in[next] = h.pieces[next].anchors[a_side ? hg.anchor_b : hg.anchor_a];
    cur = next;
    if (cur == start) break;
    seq.push_back(cur);
  }
  if (static_cast<int>(seq.size()) != n) throw std::invalid_argument("chain_pieces: hinge graph is not a chain");
  std::vector<LocalPiece<T>> result;
  for (int i : seq) {
    const auto& pc = h.pieces[i];
    // Path ends: use the piece's spare anchor when it has one, otherwise the used one.
    auto spare = [&](const std::optional<Point<T>>& used_anchor) {
      for (const auto& a : pc.anchors)
        if (!used_anchor || !same_point(a, *used_anchor)) return a;
      return pc.anchors.empty() ? pc.polygon[0] : pc.anchors[0];
    };
    LocalPiece<T> lp{pc.polygon, in[i] ? *in[i] : spare(out[i]), out[i] ? *out[i] : spare(in[i])};
    result.push_back(lp);
  }
  if (order) *order = seq;
  return result;
}

namespace {

template <class T>
std::string chain_signature(const std::vector<LocalPiece<T>>& pcs, bool cyclic, bool open_ends) {
  const int n = static_cast<int>(pcs.size());
  std::vector<std::string> fwd(n), rev(n);
  for (int i = 0; i < n; ++i) {
    std::optional<Point<T>> in = pcs[i].in, out = pcs[i].out;
    if (open_ends && i == 0) in.reset();
    if (open_ends && i == n - 1) out.reset();
    fwd[i] = describe<T>(pcs[i].polygon, in, out).str();
    rev[i] = describe<T>(pcs[i].polygon, out, in).str();
  }
  std::string best;
  bool first = true;
  auto consider = [&](const std::vector<std::string>& seq) {
    std::string s;
    for (const auto& x : seq) s += "{" + x + "}";
    if (first || s < best) best = s;
    first = false;
  };
  std::vector<std::string> rseq(n);
  for (int i = 0; i < n; ++i) rseq[i] = rev[n - 1 - i];
  if (!cyclic) {
    consider(fwd);
    consider(rseq);
    return best;
  }
  for (int s = 0; s < n; ++s) {
    std::vector<std::string> a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = fwd[(s + i) % n];
      b[i] = rseq[(s + i) % n];
    }
    consider(a);
    consider(b);
  }
  return best;
}

template <class T>
std::string tree_signature(const HingedDissection<T>& h) {
  const int n = static_cast<int>(h.pieces.size());
  struct Link {
    int other, mine, theirs;
  };
  std::vector<std::vector<Link>> adj(n);
  for (const auto& hg : h.hinges) {
    adj[hg.piece_a].push_back({hg.piece_b, hg.anchor_a, hg.anchor_b});
    adj[hg.piece_b].push_back({hg.piece_a, hg.anchor_b, hg.anchor_a});
  }
  // Encoding of the subtree at v entered from `parent` through anchor `entry`.
  std::function<std::string(int, int, std::optional<int>)> enc = [&](int v, int parent,
                                                                    std::optional<int> entry) {
    const auto& pc = h.pieces[v];
    std::vector<Point<T>> keep(pc.anchors.begin(), pc.anchors.end());
    Polygon<T> poly = remove_collinear(pc.polygon, keep);
    const int m = static_cast<int>(poly.size());
    int start = entry ? find_vertex(poly, pc.anchors[*entry]) : 0;
    std::string s = "(";
    for (int k = 0; k < m; ++k) {
      int i = (start + k) % m;
      const auto& prev = poly[(i + m - 1) % m];
      const auto& cur = poly[i];
      const auto& next = poly[(i + 1) % m];
      Point<T> ein = cur - prev, eout = next - cur;
      s += ScalarTraits<T>::key(dot<T>(eout, eout)) + "," + ScalarTraits<T>::key(dot<T>(ein, eout)) +
           "," + ScalarTraits<T>::key(cross<T>(ein, eout));
      std::vector<std::string> kids;
      for (const auto& l : adj[v]) {
        if (!same_point(pc.anchors[l.mine], cur)) continue;
        if (l.other == parent) {
          kids.push_back("^");
          continue;
        }
        kids.push_back(enc(l.other, v, l.theirs));
      }
      std::sort(kids.begin(), kids.end());
      for (const auto& c : kids) s += "[" + c + "]";
      s += ";";
    }
    return s + ")";
  };
  std::string best;
  bool first = true;
  for (int r = 0; r < n; ++r) {
    std::vector<std::optional<int>> starts{std::nullopt};
    // Root frames start at each anchor (and at the first vertex when there are none).
    if (!h.pieces[r].anchors.empty()) {
      starts.clear();
      for (int a = 0; a < static_cast<int>(h.pieces[r].anchors.size()); ++a) starts.push_back(a);
    }
    for (auto st : starts) {
      std::string s = enc(r, -1, st);
      if (first || s < best) best = s;
      first = false;
    }
  }
  return best;
}

}  // namespace

template <class T>
Signature signature(const HingedDissection<T>& h) {
  Signature sig{ScalarTraits<T>::mode, std::string(topology_name(h.topology)) + ":" +
                                           std::to_string(h.pieces.size()) + ":"};
  if (h.topology == Topology::Graph) throw std::invalid_argument("signatures cover chains and trees only");
  if (h.topology == Topology::Tree) {
    sig.text += tree_signature(h);
    return sig;
  }
  auto pcs = chain_pieces(h);
  sig.text += chain_signature(pcs, h.topology == Topology::Cycle, h.topology == Topology::Path);
  return sig;
}

template <class T>
Polygon<T> regular_polygon(int k) {
  if (k < 3) throw std::invalid_argument("regular polygon needs k >= 3");
  Polygon<T> p{Point<T>(T(0), T(0))};
  for (int j = 1; j < k; ++j) {
    Point<T> d;
    if constexpr (ScalarTraits<T>::exact) {
      if (!exact_capable(k))
        throw std::invalid_argument("k = " + std::to_string(k) + " needs approximate mode");
      Angle15 a((j - 1) * (24 / k));
      d = Point<T>(a.cos(), a.sin());
    } else {
      Real th = Real(2) * boost::math::constants::pi<Real>() * Real(j - 1) / Real(k);
      d = Point<T>(boost::multiprecision::cos(th), boost::multiprecision::sin(th));
    }
    p.push_back(Point<T>(p.back() + d));
  }
  return p;
}

template <class T>
Point<T> polygon_center(const Polygon<T>& p) {
  Point<T> c(T(0), T(0));
  for (const auto& v : p) c += v;
  return c / T(static_cast<int>(p.size()));
}

template <class T>
Polygon<T> outer_polygon(int k, const Point<T>& a, const Point<T>& b) {
  auto m = motion_between<T>(Point<T>(T(0), T(0)), Point<T>(T(1), T(0)), b, a);
  if (!m) throw std::invalid_argument("outer_polygon: edge does not have unit length");
  return transform(regular_polygon<T>(k), *m);
}

template <class T>
std::vector<LocalPiece<T>> triangle_split(int k) {
  auto p = regular_polygon<T>(k);
  auto c = polygon_center(p);
  std::vector<LocalPiece<T>> out;
  for (int j = 0; j < k; ++j) {
    const auto& a = p[j];
    const auto& b = p[(j + 1) % k];
    out.push_back({{a, b, c}, a, b});
  }
  return out;
}

template <class T>
std::vector<LocalPiece<T>> half_split(int k) {
  auto p = regular_polygon<T>(k);
  auto c = polygon_center(p);
  std::vector<LocalPiece<T>> out;
  int j = 0;
  for (; j + 2 <= k; j += 2) {
    const auto& a = p[j];
    const auto& b = p[j + 1];
    const auto& e = p[(j + 2) % k];
    out.push_back({remove_collinear<T>({a, b, e, c}, {a, e}), a, e});
  }
  if (j < k) out.push_back({{p[j], p[0], c}, p[j], p[0]});
  return out;
}

template <class T>
std::vector<LocalPiece<T>> square_split() {
  Point<T> a(T(0), T(0)), b(T(1), T(0)), c(T(1), T(1)), d(T(0), T(1));
  return {{{a, b, c}, a, c}, {{c, d, a}, c, a}};
}

template <class T>
std::vector<LocalPiece<T>> abolo_split() {
  T h = T(1) / T(2);
  Point<T> o(T(0), T(0)), ma(h, T(0)), a(T(1), T(0)), mh(h, h), mb(T(0), h), b(T(0), T(1));
  return {{{o, ma, mh}, mh, ma}, {{ma, a, mh}, ma, mh}, {{mb, mh, b}, mh, mb}, {{o, mh, mb}, mb, mh}};
}

namespace {

template <class T>
std::vector<LocalPiece<T>> repeat(const std::vector<LocalPiece<T>>& cell, int n) {
  std::vector<LocalPiece<T>> out;
  for (int i = 0; i < n; ++i) out.insert(out.end(), cell.begin(), cell.end());
  return out;
}

template <class T>
LocalPiece<T> merged(const LocalPiece<T>& p, const Polygon<T>& extra) {
  return {remove_collinear(glue_along_edge(p.polygon, extra), {p.in, p.out}), p.in, p.out};
}

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

template <class T>
HingedDissection<T> h_polyomino_2n(int n) {
  need(n >= 1, "h_polyomino_2n needs n >= 1");
  return make_chain<T>("polyomino_2n(" + std::to_string(n) + ")", repeat(square_split<T>(), n),
                       Topology::Cycle);
}

template <class T>
HingedDissection<T> h_polyomino_2nm2(int n) {
  need(n >= 2, "h_polyomino_2nm2 needs n >= 2");
  auto pcs = repeat(square_split<T>(), n - 1);
  const auto& t = pcs[0];
  Polygon<T> sq{t.polygon[1], Point<T>(T(2), T(0)), Point<T>(T(2), T(1)), t.polygon[2]};
  pcs[0] = merged(t, sq);
  return make_chain<T>("polyomino_2nm2(" + std::to_string(n) + ")", pcs, Topology::Cycle);
}

template <class T>
HingedDissection<T> h_polyregular_kn(int k, int n) {
  need(k >= 3 && n >= 1, "h_polyregular_kn needs k >= 3 and n >= 1");
  return make_chain<T>("polyregular_kn(" + std::to_string(k) + "," + std::to_string(n) + ")",
                       repeat(triangle_split<T>(k), n), Topology::Cycle);
}

template <class T>
HingedDissection<T> h_polyregular_knmk(int k, int n) {
  need(k >= 3 && n >= 2, "h_polyregular_knmk needs k >= 3 and n >= 2");
  auto pcs = repeat(triangle_split<T>(k), n - 1);
  pcs[0] = merged(pcs[0], outer_polygon<T>(k, pcs[0].polygon[0], pcs[0].polygon[1]));
  return make_chain<T>("polyregular_knmk(" + std::to_string(k) + "," + std::to_string(n) + ")",
                       pcs, Topology::Cycle);
}

template <class T>
HingedDissection<T> h_polyregular_half(int k, int n) {
  need(k >= 3 && n >= 1, "h_polyregular_half needs k >= 3 and n >= 1");
  return make_chain<T>("polyregular_half(" + std::to_string(k) + "," + std::to_string(n) + ")",
                       repeat(half_split<T>(k), n), Topology::Cycle);
}

// Slot and edge of the per-cell piece that absorbs the slippery cell.
template <class T>
std::pair<int, std::array<Point<T>, 2>> half_merge_slot(int k) {
  auto p = regular_polygon<T>(k);
  int m = (k + 1) / 2;
  if (k % 2 == 1) return {m - 1, {p[k - 1], p[0]}};
  return {0, {p[1], p[2]}};
}

template <class T>
HingedDissection<T> h_polyregular_half_m1(int k, int n) {
  need(k >= 3 && n >= 2, "h_polyregular_half_m1 needs k >= 3 and n >= 2");
  auto pcs = repeat(half_split<T>(k), n - 1);
  auto [slot, e] = half_merge_slot<T>(k);
  pcs[slot] = merged(pcs[slot], outer_polygon<T>(k, e[0], e[1]));
  return make_chain<T>("polyregular_half_m1(" + std::to_string(k) + "," + std::to_string(n) + ")",
                       pcs, Topology::Cycle);
}

template <class T>
HingedDissection<T> h_polyabolo_4n(int n) {
  need(n >= 1, "h_polyabolo_4n needs n >= 1");
  return make_chain<T>("polyabolo_4n(" + std::to_string(n) + ")", repeat(abolo_split<T>(), n),
                       Topology::Cycle);
}

namespace {

// Planar straight-line graph used to read off the faces of the cut-up.
template <class T>
struct Pslg {
  std::vector<Point<T>> nodes;
  std::vector<std::vector<int>> adj;

  int node(const Point<T>& p) {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (same_point(nodes[i], p)) return static_cast<int>(i);
    nodes.push_back(p);
    adj.emplace_back();
    return static_cast<int>(nodes.size() - 1);
  }
  void segment(const Point<T>& a, const Point<T>& b) {
    int i = node(a), j = node(b);
    if (i == j) return;
    if (std::find(adj[i].begin(), adj[i].end(), j) != adj[i].end()) return;
    adj[i].push_back(j);
    adj[j].push_back(i);
  }

  // Bounded faces, each as a CCW vertex cycle.
  std::vector<std::vector<int>> faces() const {
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> out;
    for (size_t u = 0; u < nodes.size(); ++u)
      for (int v : adj[u]) {
        if (used.count({static_cast<int>(u), v})) continue;
        std::vector<int> face;
        int a = static_cast<int>(u), b = v;
        while (!used.count({a, b})) {
          used.insert({a, b});
          face.push_back(a);
          Point<T> back = nodes[a] - nodes[b];
          auto rel = [&](const Point<T>& w) { return Point<T>(dot<T>(w, back), cross<T>(back, w)); };
          int best = -1;
          for (int c : adj[b]) {
            if (c == a && adj[b].size() > 1) continue;
            if (best < 0 || angle_less<T>(rel(Point<T>(nodes[best] - nodes[b])),
                                          rel(Point<T>(nodes[c] - nodes[b]))))
              best = c;
          }
          a = b;
          b = best;
        }
        Polygon<T> poly;
        for (int i : face) poly.push_back(nodes[i]);
        if (sgn(signed_area(poly)) > 0) out.push_back(face);
      }
    return out;
  }
};

// Joins each hole to the outer boundary with a bridge so ear clipping sees one polygon.
template <class T>
Polygon<T> bridge_holes(const Polygon<T>& outer, const std::vector<Polygon<T>>& holes) {
  Polygon<T> poly = outer;
  std::vector<Polygon<T>> pending = holes;
  std::vector<std::array<Point<T>, 2>> all_edges;
  auto add_edges = [&](const Polygon<T>& p) {
    for (size_t i = 0; i < p.size(); ++i) all_edges.push_back({p[i], p[(i + 1) % p.size()]});
  };
  add_edges(outer);
  for (const auto& h : holes) add_edges(h);
  for (const auto& hole : pending) {
    bool done = false;
    for (size_t hi = 0; hi < hole.size() && !done; ++hi) {
      const auto& m = hole[hi];
      for (size_t pi = 0; pi < poly.size() && !done; ++pi) {
        const auto& v = poly[pi];
        if (same_point(v, m)) continue;
        bool clear = true;
        for (const auto& e : all_edges) {
          if (proper_crossing(m, v, e[0], e[1])) clear = false;
          for (const auto& x : e)
            if (strictly_on_segment(x, m, v)) clear = false;
        }
        for (const auto& x : poly)
          if (strictly_on_segment(x, m, v)) clear = false;
        if (!clear) continue;
        Point<T> mid = (m + v) / T(2);
        if (locate_in_edges(mid, all_edges) != Where::Inside) continue;
        Polygon<T> next(poly.begin(), poly.begin() + static_cast<long>(pi) + 1);
        for (size_t k = 0; k <= hole.size(); ++k) next.push_back(hole[(hi + k) % hole.size()]);
        next.insert(next.end(), poly.begin() + static_cast<long>(pi), poly.end());
        all_edges.push_back({m, v});
        poly = next;
        done = true;
      }
    }
    if (!done) throw std::invalid_argument("cut_restricted: could not bridge a hole");
  }
  return poly;
}

}  // namespace

template <class T>
std::vector<LocalPiece<T>> cut_restricted_with_holes(const Polygon<T>& base,
                                                     const std::vector<Polygon<T>>& holes) {
  if (!is_simple(base) || sgn(signed_area(base)) <= 0)
    throw std::invalid_argument("cut_restricted: base polygon must be simple, CCW, non-degenerate");
  // Boundary edges of P in traversal order with the interior on the left.
  std::vector<std::array<Point<T>, 2>> pedges;
  auto add = [&](const Polygon<T>& p) {
    for (size_t i = 0; i < p.size(); ++i) pedges.push_back({p[i], p[(i + 1) % p.size()]});
  };
  add(base);
  for (const auto& h : holes) {
    if (sgn(signed_area(h)) >= 0) throw std::invalid_argument("cut_restricted: holes must be CW");
    add(h);
  }
  auto is_pedge = [&](const Point<T>& a, const Point<T>& b) {
    for (const auto& e : pedges)
      if ((same_point(e[0], a) && same_point(e[1], b)) || (same_point(e[0], b) && same_point(e[1], a)))
        return true;
    return false;
  };
  Polygon<T> poly = holes.empty() ? base : bridge_holes(base, holes);
  auto tris = ear_clip(poly);
  const size_t nt = tris.size();
  std::vector<Point<T>> centroid(nt);
  for (size_t t = 0; t < nt; ++t)
    centroid[t] = (poly[tris[t][0]] + poly[tris[t][1]] + poly[tris[t][2]]) / T(3);

  // Dual graph over triangulation diagonals, then a BFS spanning tree.
  struct Diag {
    size_t t1, t2;
    Point<T> a, b;
  };
  std::vector<Diag> diags;
  for (size_t t = 0; t < nt; ++t)
    for (int e = 0; e < 3; ++e) {
      const auto& a = poly[tris[t][e]];
      const auto& b = poly[tris[t][(e + 1) % 3]];
      if (is_pedge(a, b)) continue;
      for (size_t u = t + 1; u < nt; ++u)
        for (int f = 0; f < 3; ++f) {
          const auto& c = poly[tris[u][f]];
          const auto& d = poly[tris[u][(f + 1) % 3]];
          if (same_point(a, d) && same_point(b, c)) diags.push_back({t, u, a, b});
        }
    }
  std::vector<bool> in_tree(diags.size(), false), reached(nt, false);
  std::vector<size_t> queue{0};
  if (nt > 0) reached[0] = true;
  for (size_t q = 0; q < queue.size(); ++q)
    for (size_t d = 0; d < diags.size(); ++d) {
      size_t t = queue[q];
      size_t other = diags[d].t1 == t ? diags[d].t2 : (diags[d].t2 == t ? diags[d].t1 : nt);
      if (other == nt || reached[other]) continue;
      reached[other] = true;
      in_tree[d] = true;
      queue.push_back(other);
    }

  Pslg<T> g;
  for (const auto& e : pedges) {
    Point<T> m = (e[0] + e[1]) / T(2);
    g.segment(e[0], m);
    g.segment(m, e[1]);
  }
  for (size_t t = 0; t < nt; ++t)
    for (int e = 0; e < 3; ++e) {
      const auto& a = poly[tris[t][e]];
      const auto& b = poly[tris[t][(e + 1) % 3]];
      if (is_pedge(a, b)) g.segment(centroid[t], Point<T>((a + b) / T(2)));
    }
  for (size_t d = 0; d < diags.size(); ++d) {
    if (in_tree[d]) {
      Point<T> m = (diags[d].a + diags[d].b) / T(2);
      g.segment(centroid[diags[d].t1], m);
      g.segment(m, centroid[diags[d].t2]);
    } else {
      g.segment(diags[d].a, diags[d].b);  // artificial edge
    }
  }

  // Read faces, find their entry/exit midpoints and chain them.
  struct Face {
    Polygon<T> poly;
    std::optional<Point<T>> in, out;
  };
  std::vector<Face> faces;
  for (const auto& f : g.faces()) {
    Face face;
    const size_t m = f.size();
    for (size_t i = 0; i < m; ++i) face.poly.push_back(g.nodes[f[i]]);
    for (size_t i = 0; i < m; ++i) {
      const auto& cur = face.poly[i];
      const auto& prev = face.poly[(i + m - 1) % m];
      const auto& next = face.poly[(i + 1) % m];
      for (const auto& e : pedges) {
        Point<T> mid = (e[0] + e[1]) / T(2);
        if (!same_point(cur, mid)) continue;
        if (same_point(next, e[1])) face.in = mid;
        if (same_point(prev, e[0])) face.out = mid;
      }
    }
    if (!face.in && !face.out) continue;  // the inside of a hole
    if (!face.in || !face.out) throw std::logic_error("cut_restricted: face without two midpoints");
    face.poly = remove_collinear(face.poly, {*face.in, *face.out});
    faces.push_back(face);
  }
  const size_t k = pedges.size();
  if (faces.size() != k) throw std::logic_error("cut_restricted: expected one piece per vertex");
  // Start with the piece around the first vertex of P and follow out -> in links.
  std::vector<LocalPiece<T>> out;
  size_t cur = k;
  Point<T> first_in = (pedges.back()[0] + pedges.back()[1]) / T(2);
  if (!holes.empty()) first_in = (pedges[base.size() - 1][0] + pedges[base.size() - 1][1]) / T(2);
  for (size_t i = 0; i < k; ++i)
    if (same_point(*faces[i].in, first_in)) cur = i;
  std::vector<bool> taken(k, false);
  for (size_t step = 0; step < k; ++step) {
    if (cur == k || taken[cur]) throw std::logic_error("cut_restricted: pieces do not form a cycle");
    taken[cur] = true;
    out.push_back({faces[cur].poly, *faces[cur].in, *faces[cur].out});
    size_t next = k;
    for (size_t i = 0; i < k; ++i)
      if (!taken[i] && same_point(*faces[i].in, *faces[cur].out)) next = i;
    cur = next;
  }
  for (const auto& p : out)
    if (!is_simple(p.polygon)) throw std::logic_error("cut_restricted: produced a non-simple piece");
  return out;
}

template <class T>
std::vector<LocalPiece<T>> cut_restricted(const Polygon<T>& base) {
  return cut_restricted_with_holes<T>(base, {});
}

template <class T>
HingedDissection<T> h_restricted(const Polygon<T>& base, int n) {
  need(n >= 1, "h_restricted needs n >= 1");
  return make_chain<T>("restricted(" + std::to_string(base.size()) + "," + std::to_string(n) + ")",
                       repeat(cut_restricted(base), n), Topology::Cycle);
}

#define HINGEKIT_DISSECT(T)                                                                     \
  template struct HingedDissection<T>;                                                          \
  template HingedDissection<T> make_chain<T>(const std::string&,                                \
                                             const std::vector<LocalPiece<T>>&, Topology,       \
                                             const std::string&);                               \
  template struct Descriptor<T>;                                                                \
  template Descriptor<T> describe<T>(const Polygon<T>&, const std::optional<Point<T>>&,         \
                                     const std::optional<Point<T>>&);                           \
  template bool same_descriptor<T>(const Descriptor<T>&, const Descriptor<T>&);                 \
  template Signature signature<T>(const HingedDissection<T>&);                                  \
  template std::vector<LocalPiece<T>> chain_pieces<T>(const HingedDissection<T>&,               \
                                                      std::vector<int>*);                       \
  template HingedDissection<T> h_polyomino_2n<T>(int);                                          \
  template HingedDissection<T> h_polyomino_2nm2<T>(int);                                        \
  template HingedDissection<T> h_polyregular_kn<T>(int, int);                                   \
  template HingedDissection<T> h_polyregular_knmk<T>(int, int);                                 \
  template HingedDissection<T> h_polyregular_half<T>(int, int);                                 \
  template HingedDissection<T> h_polyregular_half_m1<T>(int, int);                              \
  template HingedDissection<T> h_polyabolo_4n<T>(int);                                          \
  template HingedDissection<T> h_restricted<T>(const Polygon<T>&, int);                         \
  template std::vector<LocalPiece<T>> cut_restricted<T>(const Polygon<T>&);                     \
  template std::vector<LocalPiece<T>> cut_restricted_with_holes<T>(                             \
      const Polygon<T>&, const std::vector<Polygon<T>>&);                                       \
  template Polygon<T> regular_polygon<T>(int);                                                  \
  template Point<T> polygon_center<T>(const Polygon<T>&);                                       \
  template Polygon<T> outer_polygon<T>(int, const Point<T>&, const Point<T>&);                  \
  template std::vector<LocalPiece<T>> triangle_split<T>(int);                                   \
  template std::vector<LocalPiece<T>> half_split<T>(int);                                       \
  template std::vector<LocalPiece<T>> square_split<T>();                                        \
  template std::vector<LocalPiece<T>> abolo_split<T>();                                         \
  template std::pair<int, std::array<Point<T>, 2>> half_merge_slot<T>(int);

HINGEKIT_DISSECT(Exact)
HINGEKIT_DISSECT(Real)

}  // namespace hingekit
