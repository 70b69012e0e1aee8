#pragma once

#include <string>

#include "hingekit/realization.hpp"

namespace hingekit {

struct RenderSpec {
  double stroke_width = 1.0;  // px
  double scale = 80.0;        // px per unit length
  double hinge_radius = 3.0;  // px
  bool shading = true;
  // Pieces shrunk toward their centres with hinges drawn as short segments.
  bool exaggerated = false;
  double shrink = 0.08;  // fraction used by the exaggerated style

  void check() const;
};

template <class T>
std::string emit_svg(const Realization<T>& r, const RenderSpec& spec = {});

}  // namespace hingekit
