#include "hingekit/scalar.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hingekit {

namespace {
Real mpq_to_real(const mpq_class& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}
}  // namespace

Real ScalarTraits<Exact>::to_real(const Exact& x) {
  static const Real r2 = boost::multiprecision::sqrt(Real(2));
  static const Real r3 = boost::multiprecision::sqrt(Real(3));
  static const Real r6 = boost::multiprecision::sqrt(Real(6));
  return mpq_to_real(x.a()) + mpq_to_real(x.b()) * r2 + mpq_to_real(x.c()) * r3 +
         mpq_to_real(x.d()) * r6;
}

std::string ScalarTraits<Real>::key(const Real& x) {
  Real q = boost::multiprecision::round(x * Real(1000000000));
  if (q == 0) q = 0;
  std::ostringstream os;
  os << std::fixed << std::setprecision(0) << q;
  std::string s = os.str();
  return s == "-0" ? "0" : s;
}

Vec2<Real> to_real(const Vec2<Exact>& p) { return {to_real(p.x()), to_real(p.y())}; }

}  // namespace hingekit
