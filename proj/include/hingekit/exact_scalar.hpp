#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <array>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hingekit {

// An element a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) of Q(sqrt2, sqrt3).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int v) : c_{mpq_class(v), 0, 0, 0} {}
  ExactScalar(long v) : c_{mpq_class(v), 0, 0, 0} {}
  ExactScalar(const mpq_class& v) : c_{v, 0, 0, 0} {}
  ExactScalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

  static ExactScalar rational(long num, long den);
  static ExactScalar sqrt2() { return {0, 1, 0, 0}; }
  static ExactScalar sqrt3() { return {0, 0, 1, 0}; }
  static ExactScalar sqrt6() { return {0, 0, 0, 1}; }

  const mpq_class& a() const { return c_[0]; }
  const mpq_class& b() const { return c_[1]; }
  const mpq_class& c() const { return c_[2]; }
  const mpq_class& d() const { return c_[3]; }
  const mpq_class& component(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  int sign() const;

  ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
    return x * y.inverse();
  }
  friend ExactScalar operator-(const ExactScalar& x);

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) { return x.c_ == y.c_; }
  friend std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y);

  double to_double() const;
  // Stable textual form "a|b|c|d" with reduced rationals; used for hashing and keys.
  std::string key() const;
  // Human readable form, e.g. "1/2 + 1/2*sqrt6".
  std::string to_string() const;

 private:
  std::array<mpq_class, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

inline int sgn(const ExactScalar& x) { return x.sign(); }
inline ExactScalar abs(const ExactScalar& x) { return x.sign() < 0 ? -x : x; }

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("ExactScalar division by zero") {}
};

}  // namespace hingekit

namespace Eigen {
template <>
struct NumTraits<hingekit::ExactScalar> : GenericNumTraits<hingekit::ExactScalar> {
  typedef hingekit::ExactScalar Real;
  typedef hingekit::ExactScalar NonInteger;
  typedef hingekit::ExactScalar Nested;
  typedef hingekit::ExactScalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
