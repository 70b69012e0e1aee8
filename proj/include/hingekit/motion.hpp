#pragma once

#include <optional>

#include "hingekit/scalar.hpp"

namespace hingekit {

// A rotation by a multiple of 15 degrees.
struct Angle15 {
  int steps = 0;  // kept in [0, 24)

  Angle15() = default;
  explicit Angle15(int s) : steps(((s % 24) + 24) % 24) {}

  Exact cos() const;
  Exact sin() const;
  double degrees() const { return steps * 15.0; }

  friend Angle15 operator+(Angle15 a, Angle15 b) { return Angle15(a.steps + b.steps); }
  friend Angle15 operator-(Angle15 a) { return Angle15(-a.steps); }
  friend bool operator==(Angle15 a, Angle15 b) { return a.steps == b.steps; }
};

Mat2<Exact> rotation_matrix(Angle15 a);
// Rotation by an arbitrary angle in radians (approximate mode).
Mat2<Real> rotation_matrix(const Real& radians);

// p -> linear * p + translation. Motions built through the named constructors are
// rotations; the raw constructor exists so that external data can be checked.
template <class T>
struct RigidMotion {
  Mat2<T> linear = Mat2<T>::Identity();
  Vec2<T> translation = Vec2<T>::Zero();

  RigidMotion() = default;
  RigidMotion(Mat2<T> l, Vec2<T> t) : linear(std::move(l)), translation(std::move(t)) {}

  static RigidMotion identity() { return {}; }
  static RigidMotion translate(const Vec2<T>& t) { return {Mat2<T>::Identity(), t}; }
  // Rotation with the given cosine and sine about `center`.
  static RigidMotion rotate(const T& c, const T& s, const Vec2<T>& center = Vec2<T>::Zero()) {
    Mat2<T> r;
    r << c, T(-s), s, c;
    return {r, Vec2<T>(center - r * center)};
  }

  Vec2<T> apply(const Vec2<T>& p) const { return linear * p + translation; }
  Vec2<T> apply_linear(const Vec2<T>& v) const { return linear * v; }

  // (*this after inner)(p) = this->apply(inner.apply(p))
  RigidMotion after(const RigidMotion& inner) const {
    return {Mat2<T>(linear * inner.linear), Vec2<T>(linear * inner.translation + translation)};
  }
  RigidMotion inverse() const {
    Mat2<T> lt = linear.transpose();
    return {lt, Vec2<T>(-(lt * translation))};
  }

  // Determinant exactly one and columns orthonormal.
  bool is_rotation() const {
    T det = linear(0, 0) * linear(1, 1) - linear(0, 1) * linear(1, 0);
    Mat2<T> g = linear.transpose() * linear;
    return sgn(T(det - T(1))) == 0 && sgn(T(g(0, 0) - T(1))) == 0 && sgn(g(0, 1)) == 0 &&
           sgn(g(1, 0)) == 0 && sgn(T(g(1, 1) - T(1))) == 0;
  }

  friend bool operator==(const RigidMotion& a, const RigidMotion& b) {
    for (int i = 0; i < 2; ++i) {
      if (sgn(T(a.translation(i) - b.translation(i))) != 0) return false;
      for (int j = 0; j < 2; ++j)
        if (sgn(T(a.linear(i, j) - b.linear(i, j))) != 0) return false;
    }
    return true;
  }
};

RigidMotion<Exact> motion_from_angle(Angle15 a, const Vec2<Exact>& translation);
// The 15-degree step of an exact rotation matrix, if it is one.
std::optional<Angle15> angle_of(const Mat2<Exact>& m);
RigidMotion<Real> to_real(const RigidMotion<Exact>& m);

}  // namespace hingekit
