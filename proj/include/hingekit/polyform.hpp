#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "hingekit/geometry.hpp"

namespace hingekit {

enum class Family { Omino, Iamond, Hex, Abolo };

const char* family_name(Family f);
Family family_from_name(const std::string& s);

// Lattice cell. Omino: square (x, y). Iamond: t = 0 up, 1 down, in the skew lattice
// spanned by (1, 0) and (1/2, sqrt3/2). Hex: axial (x, y) = (q, r), pointy top, side 1.
// Abolo: half of unit square (x, y) with the right angle at corner t = 0 SW, 1 SE, 2 NE, 3 NW.
struct Cell {
  int x = 0, y = 0, t = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Polyform {
  Family family = Family::Omino;
  std::vector<Cell> cells;  // sorted, unique

  size_t size() const { return cells.size(); }
  friend bool operator==(const Polyform&, const Polyform&) = default;
};

Polyform make_polyform(Family f, std::vector<Cell> cells);

Polygon<Exact> cell_polygon(Family f, const Cell& c);
Exact cell_area(Family f);
std::vector<Cell> lattice_neighbors(Family f, const Cell& c);
// Lattice rotation step in units of 15 degrees (omino 90, iamond and hex 60, abolo 90).
int rotation_step(Family f);

// Any finite set of congruent polygons glued edge to edge.
template <class T>
struct CellComplex {
  std::string family;
  std::vector<Polygon<T>> cells;

  size_t size() const { return cells.size(); }
};

using Edge = std::array<int, 2>;

template <class T>
CellComplex<T> to_complex(const Polyform& f);
template <class T>
CellComplex<T> transform_complex(const CellComplex<T>& c, const T& scale,
                                 const RigidMotion<T>& m);

// Cells i < j sharing a full edge.
template <class T>
std::vector<Edge> adjacency_graph(const CellComplex<T>& c);

// Ordered boundary loops of the union; outer loops CCW, holes CW.
template <class T>
struct Region {
  std::vector<Polygon<T>> loops;
  std::vector<std::array<Point<T>, 2>> edges() const;
  T area() const;
  size_t holes() const;
};

template <class T>
Region<T> region(const CellComplex<T>& c);

// Pairwise contact is empty, one common vertex, or one common full edge, and no overlap.
template <class T>
bool valid_contacts(const CellComplex<T>& c);

struct Gluing {
  int cell;    // index into the complex
  int parent;  // -1 for the first cell
  std::array<int, 2> edge{-1, -1};  // edge index (i, i+1) of `cell` shared with the parent
};

struct GluingSequence {
  std::vector<Gluing> steps;
};

template <class T>
GluingSequence gluing_sequence(const CellComplex<T>& c);
// Same construction for a caller-supplied spanning tree of the adjacency graph.
template <class T>
GluingSequence gluing_sequence_from_tree(const CellComplex<T>& c, const std::vector<Edge>& tree);

// Every prefix connected and exactly one cell has the first cell as parent.
template <class T>
bool is_valid_gluing_sequence(const CellComplex<T>& c, const GluingSequence& g);

// Fixed forms (up to translation), sorted and canonical. Throws when n exceeds the cap.
std::vector<Polyform> enumerate_fixed(Family f, int n, int cap = 0);
Polyform translate_to_origin(const Polyform& f);
std::string fixed_key(const Polyform& f);
// Key invariant under translation and lattice rotation, not under reflection.
std::string canonicalize(const Polyform& f);
Polyform rotate_lattice(const Polyform& f, int times);
Polyform reflect(const Polyform& f);

template <class T>
std::string translation_key(const CellComplex<T>& c);

// Restricted polyforms: copies of a base polygon glued along corresponding edges.
template <class T>
struct RestrictedForm {
  Polygon<T> base;
  std::vector<RigidMotion<T>> placements;
  CellComplex<T> complex() const;
};

template <class T>
std::vector<RestrictedForm<T>> enumerate_restricted(const Polygon<T>& base, int n);

// Omino ASCII art: '#' or 'X' marks a cell, the first line is the top row.
Polyform parse_omino_grid(const std::string& text);
std::string omino_grid(const Polyform& f);

}  // namespace hingekit
