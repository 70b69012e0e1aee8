#pragma once

#include <map>
#include <string>
#include <vector>

#include "hingekit/realize.hpp"

namespace hingekit {

// A dissection rotated into one polygon: per-piece motions from local frames.
template <class T>
struct Rotation {
  std::string name;
  Polygon<T> polygon;
  std::vector<RigidMotion<T>> motions;
};

template <class T>
Realization<T> realization_of(const HingedDissection<T>& h, const Rotation<T>& rot);

// The classic four-piece triangle-to-square chain, scaled to unit area.
struct DudeneyData {
  HingedDissection<Real> chain;  // Q1 -D- Q2 -E- Q3 -K- T
  Rotation<Real> triangle, square;
  std::map<std::string, Point<Real>> points;  // named construction points, triangle frame
};
DudeneyData dudeney_dissection();

// Result of turning an arbitrary hinged dissection into a cycle.
template <class T>
struct CycleConversion {
  HingedDissection<T> cycle;
  std::vector<int> parent;  // original piece of each cycle piece
  // Motions of the cycle pieces in a rotation of the original dissection.
  Rotation<T> lift(const Rotation<T>& r) const;
};

// Spanning tree of the hinge graph, leaves cut once, other pieces cut along an interior
// star or segment; every tree hinge becomes two parallel hinges.
template <class T>
CycleConversion<T> chain_to_cycle(const HingedDissection<T>& h);

template <class T>
struct MidpointResult {
  HingedDissection<T> cycle;
  std::vector<Rotation<T>> rotations;
  std::vector<std::string> log;  // one line per midpoint handled
};

// Cuts pieces until every edge midpoint of every rotation polygon carries a hinge.
template <class T>
MidpointResult<T> add_midpoint_hinges(const HingedDissection<T>& h, const std::vector<Rotation<T>>& rotations);

// Linearly hinged dissection between two regular polygons whose ends coincide in both.
template <class T>
struct ExtendibleChain {
  HingedDissection<T> chain;  // path; first piece's `in` and last piece's `out` are the end vertices
  Rotation<T> p, q;
};

ExtendibleChain<Real> dudeney_extendible_chain();

// Empty when all three extendibility conditions hold.
template <class T>
std::vector<std::string> extendible_violations(const ExtendibleChain<T>& c);

template <class T>
HingedDissection<T> concat_extendible(const ExtendibleChain<T>& c, int n);

// Growth rule for C^n into polyforms of the `second` polygon (q) or the first (p).
// The reference cell is the rotation polygon itself.
template <class T>
FamilyRule<T> extendible_rule(const ExtendibleChain<T>& c, bool second);

// Realizes concat_extendible(c, n) into a target made of copies of the rotation polygon.
template <class T>
Realization<T> realize_extendible(const ExtendibleChain<T>& c, const CellComplex<T>& target);

// Grid targets scaled to the chain's cells: iamonds onto the triangle, ominoes onto the square.
Realization<Real> realize_extendible(const ExtendibleChain<Real>& c, const Polyform& target);
CellComplex<Real> scaled_target(const ExtendibleChain<Real>& c, const Polyform& target);

template <class T>
Polygon<T> convex_hull(std::vector<Point<T>> pts);

}  // namespace hingekit
