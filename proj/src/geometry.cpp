#include "hingekit/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace hingekit {

template <class T>
T signed_area(const Polygon<T>& poly) {
  T s(0);
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) s += cross<T>(poly[i], poly[(i + 1) % n]);
  return s / T(2);
}

template <class T>
bool on_segment(const Point<T>& p, const Point<T>& a, const Point<T>& b) {
  if (orient(a, b, p) != 0) return false;
  return sgn(dot<T>(p - a, p - b)) <= 0;
}

template <class T>
bool strictly_on_segment(const Point<T>& p, const Point<T>& a, const Point<T>& b) {
  if (orient(a, b, p) != 0) return false;
  return sgn(dot<T>(p - a, p - b)) < 0;
}

template <class T>
bool proper_crossing(const Point<T>& a, const Point<T>& b, const Point<T>& c, const Point<T>& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  if (o1 == 0 || o2 == 0 || o1 == o2) return false;
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o3 != 0 && o4 != 0 && o3 != o4;
}

template <class T>
bool segments_touch(const Point<T>& a, const Point<T>& b, const Point<T>& c, const Point<T>& d) {
  if (proper_crossing(a, b, c, d)) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
         on_segment(b, c, d);
}

namespace {

template <class T>
bool edge_crosses_ray(const Point<T>& p, const Point<T>& a, const Point<T>& b) {
  bool a_above = sgn(T(a.y() - p.y())) > 0;
  bool b_above = sgn(T(b.y() - p.y())) > 0;
  if (a_above == b_above) return false;
  int o = orient(a, b, p);
  return b_above ? o > 0 : o < 0;
}

template <class T>
std::vector<Point<T>> split_points(const Point<T>& a, const Point<T>& b,
                                   const Polygon<T>& other) {
  std::vector<Point<T>> pts{a, b};
  for (const auto& v : other)
    if (strictly_on_segment(v, a, b)) pts.push_back(v);
  Point<T> dir = b - a;
  std::sort(pts.begin(), pts.end(), [&](const Point<T>& x, const Point<T>& y) {
    return sgn(T(dot<T>(x - a, dir) - dot<T>(y - a, dir))) < 0;
  });
  return pts;
}

// Some sub-segment of the boundary of p lies strictly inside q.
template <class T>
bool boundary_enters(const Polygon<T>& p, const Polygon<T>& q) {
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    auto pts = split_points(p[i], p[(i + 1) % n], q);
    for (size_t j = 0; j + 1 < pts.size(); ++j) {
      if (same_point(pts[j], pts[j + 1])) continue;
      Point<T> mid = (pts[j] + pts[j + 1]) / T(2);
      if (locate(mid, q) == Where::Inside) return true;
    }
  }
  return false;
}

}  // namespace

template <class T>
Where locate(const Point<T>& p, const Polygon<T>& poly) {
  bool inside = false;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    if (on_segment(p, a, b)) return Where::Boundary;
    if (edge_crosses_ray(p, a, b)) inside = !inside;
  }
  return inside ? Where::Inside : Where::Outside;
}

template <class T>
Where locate_in_edges(const Point<T>& p, const std::vector<std::array<Point<T>, 2>>& edges) {
  bool inside = false;
  for (const auto& e : edges) {
    if (on_segment(p, e[0], e[1])) return Where::Boundary;
    if (edge_crosses_ray(p, e[0], e[1])) inside = !inside;
  }
  return inside ? Where::Inside : Where::Outside;
}

template <class T>
bool is_simple(const Polygon<T>& poly) {
  const size_t n = poly.size();
  if (n < 3) return false;
  if (sgn(signed_area(poly)) == 0) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (same_point(poly[i], poly[j])) return false;
  for (size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    for (size_t j = i + 1; j < n; ++j) {
      const auto& c = poly[j];
      const auto& d = poly[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared endpoint only: the far endpoint of one edge may not lie on the other.
        const Point<T>& shared = (j == i + 1) ? b : a;
        const Point<T>& far_ab = (j == i + 1) ? a : b;
        const Point<T>& far_cd = (j == i + 1) ? d : c;
        if (on_segment(far_cd, a, b) || on_segment(far_ab, c, d)) return false;
        (void)shared;
      } else if (segments_touch(a, b, c, d)) {
        return false;
      }
    }
  }
  return true;
}

template <class T>
std::vector<std::array<int, 3>> ear_clip(const Polygon<T>& poly) {
  std::vector<int> idx(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) idx[i] = static_cast<int>(i);
  std::vector<std::array<int, 3>> tris;
  while (idx.size() > 3) {
    const size_t m = idx.size();
    bool clipped = false;
    for (size_t i = 0; i < m && !clipped; ++i) {
      int ip = idx[(i + m - 1) % m], ic = idx[i], in = idx[(i + 1) % m];
      const auto &a = poly[ip], &b = poly[ic], &c = poly[in];
      if (orient(a, b, c) <= 0) continue;
      bool blocked = false;
      for (int k : idx) {
        if (k == ip || k == ic || k == in) continue;
        const auto& v = poly[k];
        if (same_point(v, a) || same_point(v, b) || same_point(v, c)) continue;
        if (orient(a, b, v) >= 0 && orient(b, c, v) >= 0 && orient(c, a, v) >= 0) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      tris.push_back({ip, ic, in});
      idx.erase(idx.begin() + static_cast<long>(i));
      clipped = true;
    }
    if (clipped) continue;
    // No convex ear: remove a straight vertex, which contributes no triangle.
    for (size_t i = 0; i < m && !clipped; ++i) {
      int ip = idx[(i + m - 1) % m], ic = idx[i], in = idx[(i + 1) % m];
      if (orient(poly[ip], poly[ic], poly[in]) == 0) {
        idx.erase(idx.begin() + static_cast<long>(i));
        clipped = true;
      }
    }
    if (!clipped) throw std::invalid_argument("ear_clip: polygon is not simple or not CCW");
  }
  if (idx.size() == 3 && orient(poly[idx[0]], poly[idx[1]], poly[idx[2]]) > 0)
    tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

template <class T>
Point<T> interior_point(const Polygon<T>& poly) {
  auto tris = ear_clip(poly);
  if (tris.empty()) throw std::invalid_argument("interior_point: degenerate polygon");
  const auto& t = tris.front();
  return (poly[t[0]] + poly[t[1]] + poly[t[2]]) / T(3);
}

template <class T>
bool is_convex(const Polygon<T>& poly) {
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i)
    if (orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) < 0) return false;
  return true;
}

namespace {

// Some edge line of p has all of q on its outer side (or on the line).
template <class T>
bool edge_separates(const Polygon<T>& p, const Polygon<T>& q) {
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& a = p[i];
    const auto& b = p[(i + 1) % n];
    bool all_out = true;
    for (const auto& v : q)
      if (orient(a, b, v) > 0) {
        all_out = false;
        break;
      }
    if (all_out) return true;
  }
  return false;
}

}  // namespace

template <class T>
bool interiors_disjoint(const Polygon<T>& p, const Polygon<T>& q) {
  if (!bounding_box(p).overlaps(bounding_box(q))) return true;
  // Separating axis test: an edge line bounds a polygon only when it is convex.
  const bool cp = is_convex(p), cq = is_convex(q);
  if ((cp && edge_separates(p, q)) || (cq && edge_separates(q, p))) return true;
  if (cp && cq) return false;
  const size_t n = p.size(), m = q.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      if (proper_crossing(p[i], p[(i + 1) % n], q[j], q[(j + 1) % m])) return false;
  if (boundary_enters(p, q) || boundary_enters(q, p)) return false;
  if (locate(interior_point(p), q) == Where::Inside) return false;
  if (locate(interior_point(q), p) == Where::Inside) return false;
  return true;
}

template <class T>
bool inside_region(const Polygon<T>& piece, const std::vector<std::array<Point<T>, 2>>& edges) {
  Box box = bounding_box(piece);
  const size_t n = piece.size();
  for (const auto& e : edges) {
    Box eb = bounding_box(Polygon<T>{e[0], e[1]});
    if (!box.overlaps(eb)) continue;
    for (size_t j = 0; j < n; ++j)
      if (proper_crossing(e[0], e[1], piece[j], piece[(j + 1) % n])) return false;
    auto pts = split_points(e[0], e[1], piece);
    for (size_t j = 0; j + 1 < pts.size(); ++j) {
      if (same_point(pts[j], pts[j + 1])) continue;
      if (locate(Point<T>((pts[j] + pts[j + 1]) / T(2)), piece) == Where::Inside) return false;
    }
  }
  return locate_in_edges(interior_point(piece), edges) == Where::Inside;
}

template <class T>
Polygon<T> remove_collinear(const Polygon<T>& poly, const std::vector<Point<T>>& keep) {
  Polygon<T> out = poly;
  bool changed = true;
  while (changed && out.size() > 3) {
    changed = false;
    const size_t m = out.size();
    for (size_t i = 0; i < m; ++i) {
      const auto& v = out[i];
      if (!strictly_on_segment(v, out[(i + m - 1) % m], out[(i + 1) % m])) continue;
      bool kept = std::any_of(keep.begin(), keep.end(),
                              [&](const Point<T>& k) { return same_point(k, v); });
      if (kept) continue;
      out.erase(out.begin() + static_cast<long>(i));
      changed = true;
      break;
    }
  }
  return out;
}

template <class T>
Polygon<T> transform(const Polygon<T>& poly, const RigidMotion<T>& m) {
  Polygon<T> out;
  out.reserve(poly.size());
  for (const auto& p : poly) out.push_back(m.apply(p));
  return out;
}

template <class T>
int find_vertex(const Polygon<T>& poly, const Point<T>& p) {
  for (size_t i = 0; i < poly.size(); ++i)
    if (same_point(poly[i], p)) return static_cast<int>(i);
  return -1;
}

template <class T>
Polygon<T> glue_along_edge(const Polygon<T>& p, const Polygon<T>& q) {
  const size_t n = p.size(), m = q.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& a = p[i];
    const auto& b = p[(i + 1) % n];
    for (size_t j = 0; j < m; ++j) {
      if (!same_point(q[j], b) || !same_point(q[(j + 1) % m], a)) continue;
      Polygon<T> out;
      for (size_t k = 0; k <= i; ++k) out.push_back(p[k]);
      for (size_t k = 2; k < m; ++k) out.push_back(q[(j + k) % m]);
      for (size_t k = i + 1; k < n; ++k) out.push_back(p[k]);
      return out;
    }
  }
  throw std::invalid_argument("glue_along_edge: polygons share no full edge");
}

template <class T>
std::optional<RigidMotion<T>> motion_between(const Point<T>& a0, const Point<T>& a1,
                                             const Point<T>& b0, const Point<T>& b1) {
  Point<T> u = a1 - a0, v = b1 - b0;
  T uu = dot<T>(u, u);
  if (sgn(T(uu - dot<T>(v, v))) != 0 || sgn(uu) == 0) return std::nullopt;
  T c = dot<T>(u, v) / uu, s = cross<T>(u, v) / uu;
  Mat2<T> r;
  r << c, T(-s), s, c;
  return RigidMotion<T>(r, Point<T>(b0 - r * a0));
}

template <class T>
std::vector<RigidMotion<T>> congruences(const Polygon<T>& from, const Polygon<T>& to) {
  std::vector<RigidMotion<T>> out;
  const size_t n = from.size();
  if (n != to.size() || n < 2) return out;
  for (size_t j = 0; j < n; ++j) {
    auto m = motion_between(from[0], from[1], to[j], to[(j + 1) % n]);
    if (!m) continue;
    bool ok = true;
    for (size_t i = 2; i < n && ok; ++i) ok = same_point(m->apply(from[i]), to[(i + j) % n]);
    if (ok) out.push_back(*m);
  }
  return out;
}

template <class T>
bool angle_less(const Point<T>& a, const Point<T>& b) {
  auto half = [](const Point<T>& v) {
    int sy = sgn(v.y()), sx = sgn(v.x());
    return (sy > 0 || (sy == 0 && sx > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross<T>(a, b)) > 0;
}

template <class T>
Box bounding_box(const Polygon<T>& poly) {
  Box b{{1e300, 1e300}, {-1e300, -1e300}};
  for (const auto& p : poly)
    for (int k = 0; k < 2; ++k) {
      double v = to_double(p(k));
      b.lo[k] = std::min(b.lo[k], v);
      b.hi[k] = std::max(b.hi[k], v);
    }
  return b;
}

#define HINGEKIT_INSTANTIATE(T)                                                                  \
  template T signed_area<T>(const Polygon<T>&);                                                  \
  template bool on_segment<T>(const Point<T>&, const Point<T>&, const Point<T>&);                \
  template bool strictly_on_segment<T>(const Point<T>&, const Point<T>&, const Point<T>&);       \
  template bool proper_crossing<T>(const Point<T>&, const Point<T>&, const Point<T>&,            \
                                   const Point<T>&);                                             \
  template bool segments_touch<T>(const Point<T>&, const Point<T>&, const Point<T>&,             \
                                  const Point<T>&);                                              \
  template Where locate<T>(const Point<T>&, const Polygon<T>&);                                  \
  template Where locate_in_edges<T>(const Point<T>&,                                             \
                                    const std::vector<std::array<Point<T>, 2>>&);                \
  template bool is_simple<T>(const Polygon<T>&);                                                 \
  template std::vector<std::array<int, 3>> ear_clip<T>(const Polygon<T>&);                       \
  template Point<T> interior_point<T>(const Polygon<T>&);                                        \
  template bool interiors_disjoint<T>(const Polygon<T>&, const Polygon<T>&);                     \
  template bool inside_region<T>(const Polygon<T>&,                                              \
                                 const std::vector<std::array<Point<T>, 2>>&);                   \
  template Polygon<T> remove_collinear<T>(const Polygon<T>&, const std::vector<Point<T>>&);      \
  template Polygon<T> transform<T>(const Polygon<T>&, const RigidMotion<T>&);                    \
  template int find_vertex<T>(const Polygon<T>&, const Point<T>&);                               \
  template Polygon<T> glue_along_edge<T>(const Polygon<T>&, const Polygon<T>&);                  \
  template std::vector<RigidMotion<T>> congruences<T>(const Polygon<T>&, const Polygon<T>&);     \
  template std::optional<RigidMotion<T>> motion_between<T>(const Point<T>&, const Point<T>&,     \
                                                           const Point<T>&, const Point<T>&);    \
  template bool angle_less<T>(const Point<T>&, const Point<T>&);                                 \
  template bool is_convex<T>(const Polygon<T>&);                                 \
  template Box bounding_box<T>(const Polygon<T>&);

HINGEKIT_INSTANTIATE(Exact)
HINGEKIT_INSTANTIATE(Real)

}  // namespace hingekit
