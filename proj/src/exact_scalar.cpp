#include "hingekit/exact_scalar.hpp"

#include <ostream>
#include <sstream>

namespace hingekit {

namespace {

struct Q2 {
  mpq_class r, s;  // r + s*sqrt2
};

int sign_of(const mpq_class& q) { return sgn(q); }

int sign_q2(const mpq_class& r, const mpq_class& s) {
  int sr = sign_of(r), ss = sign_of(s);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return sr == 0 ? ss : sr;
  mpq_class lhs = r * r, rhs = 2 * s * s;
  return lhs > rhs ? sr : ss;
}

Q2 mul_q2(const Q2& x, const Q2& y) {
  return {x.r * y.r + 2 * x.s * y.s, x.r * y.s + x.s * y.r};
}

}  // namespace

ExactScalar::ExactScalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (auto& v : c_) v.canonicalize();
}

ExactScalar ExactScalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return ExactScalar(q);
}

bool ExactScalar::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

int ExactScalar::sign() const {
  if (is_rational()) return sgn(c_[0]);
  // Write x = p + q*sqrt3 with p, q in Q(sqrt2).
  int sp = sign_q2(c_[0], c_[1]);
  int sq = sign_q2(c_[2], c_[3]);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sp == 0 ? sq : sp;
  Q2 p{c_[0], c_[1]}, q{c_[2], c_[3]};
  Q2 pp = mul_q2(p, p), qq = mul_q2(q, q);
  int st = sign_q2(pp.r - 3 * qq.r, pp.s - 3 * qq.s);
  return st > 0 ? sp : sq;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return ExactScalar(1 / c_[0]);
  // x * conj3(x) = p^2 - 3 q^2 = r + s sqrt2, then invert in Q(sqrt2).
  Q2 p{c_[0], c_[1]}, q{c_[2], c_[3]};
  Q2 pp = mul_q2(p, p), qq = mul_q2(q, q);
  mpq_class r = pp.r - 3 * qq.r, s = pp.s - 3 * qq.s;
  mpq_class n = r * r - 2 * s * s;
  ExactScalar conj3(c_[0], c_[1], -c_[2], -c_[3]);
  ExactScalar tail(r / n, -s / n, 0, 0);
  return conj3 * tail;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (int i = 0; i < 4; ++i)
    if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (int i = 0; i < 4; ++i)
    if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) { return *this = *this * o; }
ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this = *this / o; }

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  // Product table of the basis {1, sqrt2, sqrt3, sqrt6}: basis[i]*basis[j] = mult * basis[k].
  static const int target[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int mult[4][4] = {{1, 1, 1, 1}, {1, 2, 1, 2}, {1, 1, 3, 3}, {1, 2, 3, 6}};
  ExactScalar r;
  int xi[4], yi[4], nx = 0, ny = 0;
  for (int i = 0; i < 4; ++i) {
    if (sgn(x.c_[i]) != 0) xi[nx++] = i;
    if (sgn(y.c_[i]) != 0) yi[ny++] = i;
  }
  mpq_class t;
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) {
      int i = xi[a], j = yi[b];
      mpq_mul(t.get_mpq_t(), x.c_[i].get_mpq_t(), y.c_[j].get_mpq_t());
      if (mult[i][j] != 1) t *= mult[i][j];
      r.c_[target[i][j]] += t;
    }
  return r;
}

ExactScalar operator-(const ExactScalar& x) {
  ExactScalar r;
  for (int i = 0; i < 4; ++i) r.c_[i] = -x.c_[i];
  return r;
}

std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double ExactScalar::to_double() const {
  static const double r2 = 1.4142135623730950488, r3 = 1.7320508075688772935,
                      r6 = 2.4494897427831780982;
  return c_[0].get_d() + c_[1].get_d() * r2 + c_[2].get_d() * r3 + c_[3].get_d() * r6;
}

std::string ExactScalar::key() const {
  std::string s = c_[0].get_str();
  for (int i = 1; i < 4; ++i) {
    s += '|';
    s += c_[i].get_str();
  }
  return s;
}

std::string ExactScalar::to_string() const {
  static const char* names[4] = {"", "sqrt2", "sqrt3", "sqrt6"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    mpq_class v = c_[i];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0)
      os << v.get_str();
    else if (v == 1)
      os << names[i];
    else if (v == -1)
      os << "-" << names[i];
    else
      os << v.get_str() << "*" << names[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.to_string(); }

}  // namespace hingekit
