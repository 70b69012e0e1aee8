#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hingekit/realization.hpp"
#include "hingekit/verify.hpp"

namespace hingekit {

// How one family of cyclic dissections is cut per cell and grown cell by cell.
template <class T>
struct FamilyRule {
  std::string construction;  // "polyomino_2n", "polyregular_half_m1", "restricted", ...
  int k = 4;
  Polygon<T> reference;                 // the cell that `cell_pieces` subdivide
  std::vector<LocalPiece<T>> cell_pieces;  // closed cycle: out of piece j is in of piece j + 1
  int c = 1;                            // cells in the base case
  int merge_slot = -1;                  // c == 2: piece absorbing the slippery cell
  std::array<Point<T>, 2> merge_edge;   // edge of `reference` the slippery cell sits on
  // Path rules repeat the cell pieces end to start; the realized cycle is opened at a
  // hinge from the last slot to slot 0.
  bool open_path = false;

  size_t period() const { return cell_pieces.size(); }
  // The dissection H(n) every realization is matched against.
  HingedDissection<T> canonical(int n) const;
};

// Constructions: polyomino_2n, polyomino_2nm2, polyregular_kn, polyregular_knmk,
// polyregular_half, polyregular_half_m1, polyabolo_4n. `k` is ignored where fixed.
template <class T>
FamilyRule<T> family_rule(const std::string& construction, int k = 0);
template <class T>
FamilyRule<T> restricted_rule(const Polygon<T>& base);
// Same rule with every length multiplied by `scale`.
template <class T>
FamilyRule<T> scaled_rule(const FamilyRule<T>& rule, const T& scale);

const std::vector<std::string>& construction_names();
// Number of pieces of a construction at size n.
int piece_count(const std::string& construction, int k, int n);

class RealizeError : public std::runtime_error {
 public:
  RealizeError(const std::string& what, std::vector<std::string> partial)
      : std::runtime_error(what), partial_trace(std::move(partial)) {}
  std::vector<std::string> partial_trace;
};

template <class T>
Realization<T> realize(const FamilyRule<T>& rule, const CellComplex<T>& target);
template <class T>
Realization<T> realize(const FamilyRule<T>& rule, const CellComplex<T>& target,
                       const GluingSequence& seq);

// Realization of a grid polyform with a named construction.
template <class T>
Realization<T> realize(const std::string& construction, int k, const Polyform& target);

// Matches placed pieces (world polygons with their entry and exit anchors, in chain order)
// against `canonical`, trying every cyclic shift and both directions. Returns the motions.
template <class T>
std::optional<std::vector<RigidMotion<T>>> match_chain(const HingedDissection<T>& canonical,
                                                       const std::vector<LocalPiece<T>>& placed);

// The 4n-piece path that realizes both 2n-ominoes of unit squares and n-ominoes of
// side-sqrt(2) squares.
HingedDissection<Exact> dual_omino_path(int n);
// `target` is a fixed omino with either 2n cells (unit squares) or n cells (scaled by sqrt 2).
Realization<Exact> realize_dual_omino(int n, const Polyform& target);

// 16n-piece polyabolo dissection realized into an n-omino (each square as four
// half-squares) and into a 2n-omino (each square as two half-squares).
std::pair<Realization<Exact>, Realization<Exact>> realize_polyabolo_as_omino_bridge(const Polyform& n_omino,
                                                                                    const Polyform& two_n_omino);
std::pair<Realization<Exact>, Realization<Exact>> realize_polyabolo_as_omino_bridge(int n);
// Abolo cells covering each omino square: four around its centre (rotated by 45 degrees and
// scaled by sqrt 2) or two split along a diagonal.
Polyform omino_as_abolo(const Polyform& omino, bool four_per_square);

}  // namespace hingekit
