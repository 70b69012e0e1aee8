#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hingekit/motion.hpp"

namespace hingekit {

template <class T>
using Point = Vec2<T>;
template <class T>
using Polygon = std::vector<Point<T>>;

template <class T>
T cross(const Point<T>& a, const Point<T>& b) {
  return a.x() * b.y() - a.y() * b.x();
}
template <class T>
T dot(const Point<T>& a, const Point<T>& b) {
  return a.x() * b.x() + a.y() * b.y();
}
template <class T>
int orient(const Point<T>& a, const Point<T>& b, const Point<T>& c) {
  return sgn(cross<T>(b - a, c - a));
}

enum class Where { Outside, Boundary, Inside };

template <class T>
T signed_area(const Polygon<T>& poly);
template <class T>
bool on_segment(const Point<T>& p, const Point<T>& a, const Point<T>& b);
// On the segment but different from both endpoints.
template <class T>
bool strictly_on_segment(const Point<T>& p, const Point<T>& a, const Point<T>& b);
// The two segments cross at a single point interior to both.
template <class T>
bool proper_crossing(const Point<T>& a, const Point<T>& b, const Point<T>& c, const Point<T>& d);
// The closed segments share at least one point.
template <class T>
bool segments_touch(const Point<T>& a, const Point<T>& b, const Point<T>& c, const Point<T>& d);

template <class T>
Where locate(const Point<T>& p, const Polygon<T>& poly);

// Even-odd classification against a set of directed boundary edges (outer loops and holes).
template <class T>
Where locate_in_edges(const Point<T>& p, const std::vector<std::array<Point<T>, 2>>& edges);

template <class T>
bool is_simple(const Polygon<T>& poly);

// Ear clipping, lowest-index ear first. Returns index triples into poly (CCW input).
template <class T>
std::vector<std::array<int, 3>> ear_clip(const Polygon<T>& poly);

// A point strictly inside the polygon (centroid of its first ear).
template <class T>
Point<T> interior_point(const Polygon<T>& poly);

template <class T>
bool interiors_disjoint(const Polygon<T>& p, const Polygon<T>& q);
// No reflex corner (straight corners allowed).
template <class T>
bool is_convex(const Polygon<T>& poly);

// Interior of piece does not meet the boundary edges and an interior point lies in the region.
template <class T>
bool inside_region(const Polygon<T>& piece, const std::vector<std::array<Point<T>, 2>>& edges);

// Drops vertices lying on the segment between their neighbours, except those in `keep`.
template <class T>
Polygon<T> remove_collinear(const Polygon<T>& poly, const std::vector<Point<T>>& keep = {});

template <class T>
Polygon<T> transform(const Polygon<T>& poly, const RigidMotion<T>& m);

template <class T>
int find_vertex(const Polygon<T>& poly, const Point<T>& p);

// Union of two CCW polygons that share the edge (a, b) with opposite orientations.
template <class T>
Polygon<T> glue_along_edge(const Polygon<T>& p, const Polygon<T>& q);

// All rotations (proper motions) taking polygon `from` onto polygon `to` as point sets.
template <class T>
std::vector<RigidMotion<T>> congruences(const Polygon<T>& from, const Polygon<T>& to);

// The unique rotation taking segment (a0, a1) to (b0, b1), if the lengths agree.
template <class T>
std::optional<RigidMotion<T>> motion_between(const Point<T>& a0, const Point<T>& a1,
                                             const Point<T>& b0, const Point<T>& b1);

// Orders vectors by angle in [0, 2pi) starting from the positive x axis.
template <class T>
bool angle_less(const Point<T>& a, const Point<T>& b);

struct Box {
  double lo[2], hi[2];
  bool overlaps(const Box& o, double slack = 1e-7) const {
    return !(hi[0] + slack < o.lo[0] || o.hi[0] + slack < lo[0] || hi[1] + slack < o.lo[1] ||
             o.hi[1] + slack < lo[1]);
  }
};
template <class T>
Box bounding_box(const Polygon<T>& poly);

}  // namespace hingekit
