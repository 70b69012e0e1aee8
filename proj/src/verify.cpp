#include "hingekit/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hingekit {

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"structure",   "orientation", "hinge-coincidence",
                                              "disjointness", "containment", "area",
                                              "hinge-noncrossing"};
  return names;
}

bool chords_noncrossing(int count, const std::vector<std::array<int, 2>>& chords) {
  std::vector<std::vector<int>> starts(count), ends(count);
  for (const auto& c : chords) {
    int a = std::min(c[0], c[1]), b = std::max(c[0], c[1]);
    if (a == b) continue;
    starts[a].push_back(b);
    ends[b].push_back(a);
  }
  std::vector<std::array<int, 2>> stack;
  for (int pos = 0; pos < count; ++pos) {
    // Close the chords ending here, innermost (latest start) first.
    auto& e = ends[pos];
    std::sort(e.rbegin(), e.rend());
    for (int a : e) {
      if (stack.empty() || stack.back()[0] != a || stack.back()[1] != pos) return false;
      stack.pop_back();
    }
    // Open the chords starting here, outermost (latest end) first.
    auto& s = starts[pos];
    std::sort(s.rbegin(), s.rend());
    for (int b : s) stack.push_back({pos, b});
  }
  return stack.empty();
}

template <class T>
std::vector<int> wedge_order(const Point<T>& x, const std::vector<Polygon<T>>& placed) {
  std::vector<std::pair<Point<T>, int>> wedges;
  for (size_t i = 0; i < placed.size(); ++i) {
    const auto& poly = placed[i];
    const size_t m = poly.size();
    for (size_t j = 0; j < m; ++j) {
      const auto& a = poly[j];
      const auto& b = poly[(j + 1) % m];
      if (same_point(a, x)) {
        wedges.push_back({Point<T>(b - x), static_cast<int>(i)});
        break;
      }
      if (strictly_on_segment(x, a, b)) {
        wedges.push_back({Point<T>(b - x), static_cast<int>(i)});
        break;
      }
    }
  }
  std::stable_sort(wedges.begin(), wedges.end(),
                   [](const auto& u, const auto& v) { return angle_less<T>(u.first, v.first); });
  std::vector<int> order;
  for (const auto& w : wedges) order.push_back(w.second);
  return order;
}

template <class T>
bool hinge_noncrossing_at_point(const Point<T>& x, const std::vector<Polygon<T>>& placed,
                                const std::vector<std::array<int, 2>>& hinges) {
  if (hinges.size() < 2) return true;
  auto order = wedge_order(x, placed);
  std::map<int, int> pos;
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<std::array<int, 2>> chords;
  for (const auto& h : hinges) {
    auto a = pos.find(h[0]), b = pos.find(h[1]);
    if (a == pos.end() || b == pos.end()) return false;
    chords.push_back({a->second, b->second});
  }
  return chords_noncrossing(static_cast<int>(order.size()), chords);
}

namespace {

template <class T>
std::string fmt(const Point<T>& p) {
  std::ostringstream os;
  os << "(" << to_double(p.x()) << ", " << to_double(p.y()) << ")";
  return os.str();
}

template <class T>
void run_checks(const Realization<T>& r, VerificationReport& rep) {
  auto fail = [&](const std::string& name, const std::string& detail) {
    rep.checks.push_back({name, false, detail});
  };
  auto ok = [&](const std::string& name) { rep.checks.push_back({name, true, ""}); };
  const auto& h = r.dissection;
  const size_t n = h.pieces.size();

  // 1. structure
  std::string structural;
  try {
    h.validate();
    if (r.motions.size() != n)
      structural = std::to_string(r.motions.size()) + " motions for " + std::to_string(n) + " pieces";
  } catch (const std::exception& e) {
    structural = e.what();
  }
  if (!structural.empty()) {
    fail("structure", structural);
    for (size_t i = 1; i < check_names().size(); ++i)
      rep.checks.push_back({check_names()[i], false, "skipped: structure check failed"});
    return;
  }
  ok("structure");

  // 2. orientation
  {
    std::string bad;
    for (size_t i = 0; i < n && bad.empty(); ++i)
      if (!r.motions[i].is_rotation()) bad = "piece " + h.pieces[i].id + " is not moved by a rotation";
    bad.empty() ? ok("orientation") : fail("orientation", bad);
  }

  auto placed = r.placed();

  // 3. hinge coincidence
  {
    std::string bad;
    for (const auto& hg : h.hinges) {
      auto a = r.anchor_position(hg.piece_a, hg.anchor_a);
      auto b = r.anchor_position(hg.piece_b, hg.anchor_b);
      if (!same_point(a, b)) {
        bad = "hinge " + h.pieces[hg.piece_a].id + "-" + h.pieces[hg.piece_b].id + " splits: " +
              fmt(a) + " vs " + fmt(b);
        break;
      }
    }
    bad.empty() ? ok("hinge-coincidence") : fail("hinge-coincidence", bad);
  }

  // 4. disjointness
  {
    std::string bad;
    std::vector<Box> boxes;
    for (const auto& p : placed) boxes.push_back(bounding_box(p));
    for (size_t i = 0; i < n && bad.empty(); ++i)
      for (size_t j = i + 1; j < n && bad.empty(); ++j)
        if (boxes[i].overlaps(boxes[j]) && !interiors_disjoint(placed[i], placed[j]))
          bad = "pieces " + h.pieces[i].id + " and " + h.pieces[j].id + " overlap near " +
                fmt(interior_point(placed[i]));
    bad.empty() ? ok("disjointness") : fail("disjointness", bad);
  }

  // 5. containment and 6. area
  Region<T> reg = region(r.target);
  auto edges = reg.edges();
  {
    std::string bad;
    // Quick accept: all vertices inside one convex target cell.
    std::vector<Box> cell_boxes;
    std::vector<bool> cell_convex;
    for (const auto& c : r.target.cells) {
      cell_boxes.push_back(bounding_box(c));
      cell_convex.push_back(is_convex(c));
    }
    auto in_one_cell = [&](const Polygon<T>& piece) {
      Box b = bounding_box(piece);
      for (size_t c = 0; c < r.target.cells.size(); ++c) {
        if (!cell_convex[c] || !cell_boxes[c].overlaps(b)) continue;
        const auto& cell = r.target.cells[c];
        bool all = true;
        for (const auto& v : piece) {
          for (size_t j = 0; j < cell.size() && all; ++j)
            all = orient(cell[j], cell[(j + 1) % cell.size()], v) >= 0;
          if (!all) break;
        }
        if (all) return true;
      }
      return false;
    };
    for (size_t i = 0; i < n && bad.empty(); ++i)
      if (!in_one_cell(placed[i]) && !inside_region(placed[i], edges))
        bad = "piece " + h.pieces[i].id + " leaves the target";
    bad.empty() ? ok("containment") : fail("containment", bad);
  }
  {
    T total(0);
    for (const auto& p : placed) total += signed_area(p);
    T target = reg.area();
    if (sgn(T(total - target)) == 0) {
      ok("area");
    } else {
      std::ostringstream os;
      os << "pieces cover " << to_double(total) << ", target has " << to_double(target);
      fail("area", os.str());
    }
  }

  // 7. hinge non-crossing, one chord diagram per hinge point
  {
    std::vector<std::pair<Point<T>, std::vector<std::array<int, 2>>>> groups;
    for (const auto& hg : h.hinges) {
      auto p = r.anchor_position(hg.piece_a, hg.anchor_a);
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return same_point(g.first, p); });
      if (it == groups.end()) {
        groups.push_back({p, {}});
        it = std::prev(groups.end());
      }
      it->second.push_back({hg.piece_a, hg.piece_b});
    }
    std::string bad;
    for (const auto& [p, hs] : groups)
      if (!hinge_noncrossing_at_point(p, placed, hs)) {
        bad = std::to_string(hs.size()) + " hinges cross at " + fmt(p);
        break;
      }
    bad.empty() ? ok("hinge-noncrossing") : fail("hinge-noncrossing", bad);
  }
}

}  // namespace

template <class T>
VerificationReport verify_configuration(const Realization<T>& r) {
  VerificationReport rep;
  rep.mode = ScalarTraits<T>::mode;
  MarginScope scope(rep.margin);
  run_checks(r, rep);
  return rep;
}

#define HINGEKIT_VERIFY(T)                                                                    \
  template VerificationReport verify_configuration<T>(const Realization<T>&);                 \
  template std::vector<int> wedge_order<T>(const Point<T>&, const std::vector<Polygon<T>>&);  \
  template bool hinge_noncrossing_at_point<T>(const Point<T>&, const std::vector<Polygon<T>>&, \
                                              const std::vector<std::array<int, 2>>&);

HINGEKIT_VERIFY(Exact)
HINGEKIT_VERIFY(Real)

}  // namespace hingekit
