#pragma once

#include <string>
#include <vector>

#include "hingekit/verify.hpp"

namespace hingekit {

// Corners of a unit square in counter-clockwise order.
enum class Corner { SW, SE, NE, NW };
const char* corner_name(Corner c);

struct SquareHinge {
  int a;
  Corner ca;
  int b;
  Corner cb;
};

// Identical unit squares joined at corners.
struct SquareHinging {
  int n = 0;
  std::vector<SquareHinge> hinges;
  std::string label() const;  // e.g. "0NE-1NW 1SE-2SW"
};

// Squares 0..n-1 in a row; each adjacent pair hinged at the top shared corner, the
// bottom one, or both. 3^(n-1) hingings.
std::vector<SquareHinging> enumerate_chain_hingings(int n);

// Square i sits on lattice cell `cell`, turned `quarter_turns` times counter-clockwise.
struct SquarePlacement {
  Cell cell;
  int quarter_turns = 0;
};

struct SearchOutcome {
  bool realizable = false;
  std::vector<SquarePlacement> witness;  // first verified configuration
  long nodes = 0;                        // search tree nodes visited
  long rejected = 0;                     // complete placements the verifier turned down
};

// Exhaustive search for a configuration of `h` covering `target` exactly. With
// `fixed_square` >= 0 that square keeps its orientation.
SearchOutcome search_target(const SquareHinging& h, const Polyform& target, int fixed_square = -1);

// Targets some rotation of which the hinging realizes.
std::vector<Polyform> realizable_set(const SquareHinging& h, const std::vector<Polyform>& targets,
                                     int fixed_square = -1);

HingedDissection<Exact> square_dissection(const SquareHinging& h);
Realization<Exact> square_realization(const SquareHinging& h, const Polyform& target,
                                      const std::vector<SquarePlacement>& placement);

// Key invariant under rotation and reflection.
std::string free_key(const Polyform& f);
// One fixed representative per free pentomino, with its letter.
const std::vector<std::pair<std::string, Polyform>>& free_pentominoes();
std::string pentomino_name(const Polyform& f);

struct HingingVerdict {
  int index = 0;
  SquareHinging hinging;
  std::vector<std::string> realizable;  // letters of realizable free pentominoes
  std::string unrealizable;             // a letter no placement achieves
  long nodes = 0;
};

struct LowerBoundCertificate {
  int n = 5;
  std::string assumption;  // restriction inherited from the argument (chain hingings only)
  std::vector<HingingVerdict> verdicts;
  bool impossible = false;  // no hinging realizes every free pentomino
  double seconds = 0;
};

LowerBoundCertificate check_pentomino_lower_bound(int threads = 0);

// Square 0 and 1 rigid, square 2 hinged at the top corner: both trominoes.
SquareHinging tromino_hinging();
// Four squares in a row realizing all 19 fixed tetrominoes up to rigid motion.
SquareHinging tetromino_hinging();

}  // namespace hingekit
