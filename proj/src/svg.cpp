#include "hingekit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hingekit {

void RenderSpec::check() const {
  if (!(stroke_width > 0 && scale > 0 && hinge_radius > 0)) throw std::invalid_argument("render sizes must be positive");
  if (!(shrink >= 0 && shrink < 0.5)) throw std::invalid_argument("shrink must lie in [0, 0.5)");
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

const char* kFills[] = {"#f4a582", "#92c5de", "#d1e5f0", "#fddbc7", "#b8e186", "#e6f5d0", "#c2a5cf", "#fee090"};

}  // namespace

template <class T>
std::string emit_svg(const Realization<T>& r, const RenderSpec& spec) {
  spec.check();
  using D = std::array<double, 2>;
  auto placed = r.placed();
  std::vector<std::vector<D>> pieces;
  for (const auto& poly : placed) {
    std::vector<D> pts;
    for (const auto& v : poly) pts.push_back({to_double(v.x()), to_double(v.y())});
    pieces.push_back(pts);
  }
  std::vector<std::vector<D>> cells;
  for (const auto& poly : r.target.cells) {
    std::vector<D> pts;
    for (const auto& v : poly) pts.push_back({to_double(v.x()), to_double(v.y())});
    cells.push_back(pts);
  }
  double lo[2] = {std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  double hi[2] = {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const auto* group : {&pieces, &cells})
    for (const auto& poly : *group)
      for (const auto& p : poly)
        for (int k = 0; k < 2; ++k) {
          lo[k] = std::min(lo[k], p[k]);
          hi[k] = std::max(hi[k], p[k]);
        }
  if (pieces.empty() && cells.empty()) lo[0] = lo[1] = hi[0] = hi[1] = 0;
  const double pad = 4 * spec.hinge_radius + spec.stroke_width;
  auto X = [&](double x) { return (x - lo[0]) * spec.scale + pad; };
  auto Y = [&](double y) { return (hi[1] - y) * spec.scale + pad; };
  const double width = (hi[0] - lo[0]) * spec.scale + 2 * pad;
  const double height = (hi[1] - lo[1]) * spec.scale + 2 * pad;

  // Exaggerated style pulls each piece toward its vertex average.
  auto centre = [](const std::vector<D>& poly) {
    D c{0, 0};
    for (const auto& p : poly) {
      c[0] += p[0] / poly.size();
      c[1] += p[1] / poly.size();
    }
    return c;
  };
  auto pull = [&](const D& p, const D& c) {
    if (!spec.exaggerated) return p;
    return D{p[0] + (c[0] - p[0]) * spec.shrink, p[1] + (c[1] - p[1]) * spec.shrink};
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  os << "<!-- " << r.dissection.name << ", " << r.dissection.size() << " pieces, " << ScalarTraits<T>::mode
     << " mode -->\n";
  if constexpr (!ScalarTraits<T>::exact)
    os << "<!-- approximate coordinates, epsilon " << real_to_string(approx_epsilon(), 6) << " -->\n";
  os << "<g id=\"target\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" << num(spec.stroke_width / 2)
     << "\" stroke-dasharray=\"4 3\">\n";
  for (const auto& poly : cells) {
    os << "<polygon points=\"";
    for (size_t i = 0; i < poly.size(); ++i) os << (i ? " " : "") << num(X(poly[i][0])) << "," << num(Y(poly[i][1]));
    os << "\"/>\n";
  }
  os << "</g>\n<g id=\"pieces\" stroke=\"#000000\" stroke-width=\"" << num(spec.stroke_width)
     << "\" stroke-linejoin=\"round\">\n";
  for (size_t i = 0; i < pieces.size(); ++i) {
    const auto c = centre(pieces[i]);
    os << "<path id=\"" << r.dissection.pieces[i].id << "\" fill=\""
       << (spec.shading ? kFills[i % (sizeof kFills / sizeof *kFills)] : "none") << "\" d=\"";
    for (size_t k = 0; k < pieces[i].size(); ++k) {
      D p = pull(pieces[i][k], c);
      os << (k ? " L " : "M ") << num(X(p[0])) << " " << num(Y(p[1]));
    }
    os << " Z\"/>\n";
  }
  os << "</g>\n<g id=\"hinges\">\n";
  for (const auto& h : r.dissection.hinges) {
    if (h.piece_a >= static_cast<int>(r.motions.size()) || h.piece_b >= static_cast<int>(r.motions.size())) continue;
    auto a = r.anchor_position(h.piece_a, h.anchor_a);
    auto b = r.anchor_position(h.piece_b, h.anchor_b);
    D pa{to_double(a.x()), to_double(a.y())}, pb{to_double(b.x()), to_double(b.y())};
    if (spec.exaggerated) {
      pa = pull(pa, centre(pieces[h.piece_a]));
      pb = pull(pb, centre(pieces[h.piece_b]));
      os << "<line x1=\"" << num(X(pa[0])) << "\" y1=\"" << num(Y(pa[1])) << "\" x2=\"" << num(X(pb[0]))
         << "\" y2=\"" << num(Y(pb[1])) << "\" stroke=\"#b2182b\" stroke-width=\"" << num(2 * spec.hinge_radius / 3)
         << "\" stroke-linecap=\"round\"/>\n";
    } else {
      os << "<circle cx=\"" << num(X(pa[0])) << "\" cy=\"" << num(Y(pa[1])) << "\" r=\"" << num(spec.hinge_radius)
         << "\" fill=\"#b2182b\"/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

template std::string emit_svg<Exact>(const Realization<Exact>&, const RenderSpec&);
template std::string emit_svg<Real>(const Realization<Real>&, const RenderSpec&);

}  // namespace hingekit
