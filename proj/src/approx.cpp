#include "hingekit/approx.hpp"

#include <algorithm>
#include <sstream>

namespace hingekit {

namespace {
Real& eps_storage() {
  static Real eps("1e-9");
  return eps;
}
thread_local Margin* g_sink = nullptr;
}  // namespace

const Real& approx_epsilon() { return eps_storage(); }
void set_approx_epsilon(const Real& eps) { eps_storage() = eps; }

void Margin::merge(const Margin& o) {
  if (o.smallest_nonzero && (!smallest_nonzero || *o.smallest_nonzero < *smallest_nonzero))
    smallest_nonzero = o.smallest_nonzero;
  if (o.largest_zero && (!largest_zero || *o.largest_zero > *largest_zero))
    largest_zero = o.largest_zero;
  decisions += o.decisions;
}

Real Margin::separation() const {
  const Real& eps = approx_epsilon();
  Real best = Real(1);
  if (smallest_nonzero) best = std::min(best, Real(*smallest_nonzero - eps));
  if (largest_zero) best = std::min(best, Real(eps - *largest_zero));
  return best;
}

MarginScope::MarginScope(Margin& sink) : previous_(g_sink) { g_sink = &sink; }
MarginScope::~MarginScope() { g_sink = previous_; }

int sgn(const Real& x) {
  Real ax = boost::multiprecision::abs(x);
  bool zero = ax <= approx_epsilon();
  if (g_sink) {
    ++g_sink->decisions;
    if (zero) {
      if (!g_sink->largest_zero || ax > *g_sink->largest_zero) g_sink->largest_zero = ax;
    } else if (!g_sink->smallest_nonzero || ax < *g_sink->smallest_nonzero) {
      g_sink->smallest_nonzero = ax;
    }
  }
  if (zero) return 0;
  return x < 0 ? -1 : 1;
}

std::string real_to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Real real_from_string(const std::string& s) { return Real(s); }

}  // namespace hingekit
