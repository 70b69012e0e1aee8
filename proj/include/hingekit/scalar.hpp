#pragma once

#include <Eigen/Core>
#include <string>

#include "hingekit/approx.hpp"
#include "hingekit/exact_scalar.hpp"

namespace hingekit {

using Exact = ExactScalar;

template <class T>
using Vec2 = Eigen::Matrix<T, 2, 1>;
template <class T>
using Mat2 = Eigen::Matrix<T, 2, 2>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Exact> {
  static constexpr bool exact = true;
  static constexpr const char* mode = "exact";
  static Real to_real(const Exact& x);
  static double to_double(const Exact& x) { return x.to_double(); }
  static std::string key(const Exact& x) { return x.key(); }
};

template <>
struct ScalarTraits<Real> {
  static constexpr bool exact = false;
  static constexpr const char* mode = "approx";
  static Real to_real(const Real& x) { return x; }
  static double to_double(const Real& x) { return x.convert_to<double>(); }
  // Rounded to a 1e-9 grid; only used to group values that are already known to agree.
  static std::string key(const Real& x);
};

template <class T>
inline double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <class T>
inline Real to_real(const T& x) {
  return ScalarTraits<T>::to_real(x);
}

Vec2<Real> to_real(const Vec2<Exact>& p);

template <class T>
inline std::string point_key(const Vec2<T>& p) {
  return ScalarTraits<T>::key(p.x()) + "," + ScalarTraits<T>::key(p.y());
}

template <class T>
inline bool is_zero(const T& x) {
  return sgn(x) == 0;
}

template <class T>
inline bool same_point(const Vec2<T>& a, const Vec2<T>& b) {
  return sgn(T(a.x() - b.x())) == 0 && sgn(T(a.y() - b.y())) == 0;
}

}  // namespace hingekit
