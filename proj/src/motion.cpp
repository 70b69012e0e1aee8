#include "hingekit/motion.hpp"

namespace hingekit {

namespace {
// cos(15 k degrees) for k = 0..6.
Exact quarter_cos(int k) {
  const Exact q = Exact::rational(1, 4);
  switch (k) {
    case 0: return 1;
    case 1: return q * (Exact::sqrt6() + Exact::sqrt2());
    case 2: return Exact::rational(1, 2) * Exact::sqrt3();
    case 3: return Exact::rational(1, 2) * Exact::sqrt2();
    case 4: return Exact::rational(1, 2);
    case 5: return q * (Exact::sqrt6() - Exact::sqrt2());
    default: return 0;
  }
}
}  // namespace

Exact Angle15::cos() const {
  int s = steps;
  if (s <= 6) return quarter_cos(s);
  if (s <= 12) return -quarter_cos(12 - s);
  if (s <= 18) return -quarter_cos(s - 12);
  return quarter_cos(24 - s);
}

Exact Angle15::sin() const { return Angle15(6 - steps).cos(); }

Mat2<Exact> rotation_matrix(Angle15 a) {
  Mat2<Exact> m;
  Exact c = a.cos(), s = a.sin();
  m << c, -s, s, c;
  return m;
}

Mat2<Real> rotation_matrix(const Real& radians) {
  Mat2<Real> m;
  Real c = boost::multiprecision::cos(radians), s = boost::multiprecision::sin(radians);
  m << c, Real(-s), s, c;
  return m;
}

RigidMotion<Exact> motion_from_angle(Angle15 a, const Vec2<Exact>& translation) {
  return {rotation_matrix(a), translation};
}

std::optional<Angle15> angle_of(const Mat2<Exact>& m) {
  for (int s = 0; s < 24; ++s) {
    Angle15 a(s);
    if (m(0, 0) == a.cos() && m(1, 0) == a.sin() && m(0, 1) == -a.sin() && m(1, 1) == a.cos())
      return a;
  }
  return std::nullopt;
}

RigidMotion<Real> to_real(const RigidMotion<Exact>& m) {
  Mat2<Real> l;
  l << to_real(m.linear(0, 0)), to_real(m.linear(0, 1)), to_real(m.linear(1, 0)),
      to_real(m.linear(1, 1));
  return {l, to_real(m.translation)};
}

}  // namespace hingekit
