#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <optional>
#include <string>

namespace hingekit {

// Tolerance-based scalar used for polygons outside Q(sqrt2, sqrt3).
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                           boost::multiprecision::et_off>;

// Global tolerance; a value whose magnitude is at most epsilon() counts as zero.
const Real& approx_epsilon();
void set_approx_epsilon(const Real& eps);

// Records how close approximate sign decisions came to the tolerance.
struct Margin {
  std::optional<Real> smallest_nonzero;  // smallest |x| classified as non-zero
  std::optional<Real> largest_zero;      // largest |x| classified as zero
  long decisions = 0;

  void merge(const Margin& other);
  // Distance from the tolerance of the closest decision, in both directions.
  Real separation() const;
};

// While alive, every approximate sign decision on this thread is recorded in `sink`.
class MarginScope {
 public:
  explicit MarginScope(Margin& sink);
  ~MarginScope();
  MarginScope(const MarginScope&) = delete;
  MarginScope& operator=(const MarginScope&) = delete;

 private:
  Margin* previous_;
};

int sgn(const Real& x);

std::string real_to_string(const Real& x, int digits = 40);
Real real_from_string(const std::string& s);

}  // namespace hingekit
