#pragma once

#include <string>
#include <vector>

#include "hingekit/realization.hpp"

namespace hingekit {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first counterexample when the check fails
};

struct VerificationReport {
  std::string mode;
  std::vector<CheckResult> checks;
  Margin margin;  // approximate mode only

  bool pass() const;
  const CheckResult* find(const std::string& name) const;
};

// Names in evaluation order.
const std::vector<std::string>& check_names();

template <class T>
VerificationReport verify_configuration(const Realization<T>& r);

// Chords between positions 0..count-1 placed on a circle, as pairs of positions.
// True when no two chords interleave. Chords may share endpoints.
bool chords_noncrossing(int count, const std::vector<std::array<int, 2>>& chords);

// Angular order of the pieces that touch `x`, by the direction in which each piece's
// wedge starts. Entries are indices into `placed`; pieces not touching x are skipped.
template <class T>
std::vector<int> wedge_order(const Point<T>& x, const std::vector<Polygon<T>>& placed);

// Hinges are pairs of indices into `placed`, all located at x.
template <class T>
bool hinge_noncrossing_at_point(const Point<T>& x, const std::vector<Polygon<T>>& placed,
                                const std::vector<std::array<int, 2>>& hinges);

}  // namespace hingekit
