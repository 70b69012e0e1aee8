#pragma once

#include <string>
#include <vector>

#include "hingekit/geometry.hpp"

namespace hingekit {

// Graph: any connected hinge graph, e.g. two hinges between the same pair of pieces.
enum class Topology { Path, Cycle, Tree, Graph };
const char* topology_name(Topology t);
Topology topology_from_name(const std::string& s);

template <class T>
struct Piece {
  std::string id;
  Polygon<T> polygon;              // CCW, local frame
  std::vector<Point<T>> anchors;   // each equal to a polygon vertex
};

struct Hinge {
  int piece_a = 0, anchor_a = 0, piece_b = 0, anchor_b = 0;
  friend bool operator==(const Hinge&, const Hinge&) = default;
};

template <class T>
struct HingedDissection {
  std::string name;
  std::vector<Piece<T>> pieces;
  std::vector<Hinge> hinges;
  Topology topology = Topology::Cycle;

  static constexpr bool exact = ScalarTraits<T>::exact;
  size_t size() const { return pieces.size(); }
  T area() const;
  // Throws std::invalid_argument describing the first broken invariant.
  void validate() const;
};

// A piece with one entry and one exit anchor, as used along cycles and paths.
template <class T>
struct LocalPiece {
  Polygon<T> polygon;
  Point<T> in, out;
};

// Cycle (or path) whose piece i is hinged from its `out` anchor to the `in` anchor of i + 1.
template <class T>
HingedDissection<T> make_chain(const std::string& name, const std::vector<LocalPiece<T>>& pieces,
                               Topology topology, const std::string& id_prefix = "p");

// Intrinsic description of a piece relative to its entry and exit anchors.
template <class T>
struct Descriptor {
  std::vector<T> values;
  std::vector<int> flags;
  std::string str() const;
};

template <class T>
Descriptor<T> describe(const Polygon<T>& poly, const std::optional<Point<T>>& entry,
                       const std::optional<Point<T>>& exit);
template <class T>
Descriptor<T> describe(const LocalPiece<T>& p) {
  return describe<T>(p.polygon, p.in, p.out);
}
template <class T>
bool same_descriptor(const Descriptor<T>& a, const Descriptor<T>& b);

struct Signature {
  std::string mode;
  std::string text;
  friend bool operator==(const Signature&, const Signature&) = default;
};

template <class T>
Signature signature(const HingedDissection<T>& h);

// Ordered pieces with entry/exit anchors along a cycle or path dissection.
template <class T>
std::vector<LocalPiece<T>> chain_pieces(const HingedDissection<T>& h, std::vector<int>* order = nullptr);

// Family constructors. Exact variants need every rotation to be a multiple of 15 degrees.
template <class T>
HingedDissection<T> h_polyomino_2n(int n);
template <class T>
HingedDissection<T> h_polyomino_2nm2(int n);
template <class T>
HingedDissection<T> h_polyregular_kn(int k, int n);
template <class T>
HingedDissection<T> h_polyregular_knmk(int k, int n);
template <class T>
HingedDissection<T> h_polyregular_half(int k, int n);
template <class T>
HingedDissection<T> h_polyregular_half_m1(int k, int n);
template <class T>
HingedDissection<T> h_polyabolo_4n(int n);
template <class T>
HingedDissection<T> h_restricted(const Polygon<T>& base, int n);

// One copy of the restricted cut-up: k pieces around the k vertices, in cycle order.
template <class T>
std::vector<LocalPiece<T>> cut_restricted(const Polygon<T>& base);

template <class T>
std::vector<LocalPiece<T>> cut_restricted_with_holes(const Polygon<T>& base,
                                                     const std::vector<Polygon<T>>& holes);

bool exact_capable(int k);
// Slot of the half_split piece that absorbs the slippery cell, with the glued edge.
template <class T>
std::pair<int, std::array<Point<T>, 2>> half_merge_slot(int k);

// Geometry shared by the constructors and the realization engine.
template <class T>
Polygon<T> regular_polygon(int k);
template <class T>
Point<T> polygon_center(const Polygon<T>& p);
// The regular k-gon lying to the right of the directed edge a -> b.
template <class T>
Polygon<T> outer_polygon(int k, const Point<T>& a, const Point<T>& b);

// Per-cell pieces of each family laid out in the reference cell.
template <class T>
std::vector<LocalPiece<T>> triangle_split(int k);  // k triangles around the centre
template <class T>
std::vector<LocalPiece<T>> half_split(int k);      // ceil(k/2) pieces
template <class T>
std::vector<LocalPiece<T>> square_split();         // 2 right isosceles triangles
template <class T>
std::vector<LocalPiece<T>> abolo_split();          // 4 half-scale triangles

}  // namespace hingekit
