#pragma once

#include <string>
#include <vector>

#include "hingekit/dissection.hpp"
#include "hingekit/polyform.hpp"

namespace hingekit {

// One step of the inductive construction.
template <class T>
struct TraceStep {
  int cell = -1;          // target cell that was added
  int parent = -1;        // cell it was glued to (-1 for the base case)
  int host_piece = -1;    // placed piece whose hinge was split (-1 for the base case)
  Point<T> hinge_point;   // where the new cell's pieces were spliced in
  int version = 0;        // index into the cell's symmetric versions
  bool reversed = false;  // hinge order of the new cell's pieces
  std::string note;       // free-form detail (attach case, fallback host, ...)
};

// Per-piece motions placing a hinged dissection onto a target.
template <class T>
struct Realization {
  HingedDissection<T> dissection;
  std::vector<RigidMotion<T>> motions;
  CellComplex<T> target;
  std::vector<TraceStep<T>> trace;

  // Piece polygons in target coordinates.
  std::vector<Polygon<T>> placed() const {
    std::vector<Polygon<T>> out;
    for (size_t i = 0; i < dissection.pieces.size() && i < motions.size(); ++i)
      out.push_back(transform(dissection.pieces[i].polygon, motions[i]));
    return out;
  }
  Point<T> anchor_position(int piece, int anchor) const {
    return motions[piece].apply(dissection.pieces[piece].anchors[anchor]);
  }
};

}  // namespace hingekit
