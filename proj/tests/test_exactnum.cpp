#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "hingekit/motion.hpp"

using namespace hingekit;

namespace {

using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;

// Enclosure of an ExactScalar: midpoint in 100-digit arithmetic and a generous error radius.
struct Enclosure {
  Wide mid, radius;
};

Wide wide(const mpq_class& q) {
  return Wide(q.get_num().get_str()) / Wide(q.get_den().get_str());
}

Enclosure enclose(const Exact& x) {
  static const Wide roots[4] = {Wide(1), sqrt(Wide(2)), sqrt(Wide(3)), sqrt(Wide(6))};
  Enclosure e{0, 0};
  for (int i = 0; i < 4; ++i) {
    Wide t = wide(x.component(i)) * roots[i];
    e.mid += t;
    e.radius += abs(t);
  }
  e.radius = e.radius * Wide("1e-90") + Wide("1e-95");
  return e;
}

// Sign according to the enclosure, or 2 when it cannot decide.
int oracle_sign(const Exact& x) {
  Enclosure e = enclose(x);
  if (e.mid - e.radius > 0) return 1;
  if (e.mid + e.radius < 0) return -1;
  return x.is_zero() ? 0 : 2;
}

Exact random_exact(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
  return Exact(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
               mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("basis products and conjugates") {
  CHECK(Exact::sqrt2() * Exact::sqrt3() == Exact::sqrt6());
  CHECK((Exact(1) + Exact::sqrt2()) * (Exact(1) - Exact::sqrt2()) == Exact(-1));
  CHECK(Exact::sqrt6() * Exact::sqrt6() == Exact(6));
  CHECK(Exact::sqrt2() * Exact::sqrt6() == Exact(2) * Exact::sqrt3());
}

TEST_CASE("comparison against the enclosure oracle") {
  Exact lhs = Exact::sqrt2() + Exact::sqrt3();
  CHECK(lhs > Exact::sqrt6());
  CHECK(oracle_sign(lhs - Exact::sqrt6()) == 1);

  std::mt19937 rng(7);
  int decided = 0;
  for (int i = 0; i < 4000; ++i) {
    Exact x = random_exact(rng);
    int o = oracle_sign(x);
    REQUIRE(o != 2);
    CHECK(x.sign() == o);
    ++decided;
  }
  CHECK(decided == 4000);

  // Near-cancelling values: (a + b sqrt2)^2 against 3 (c + d sqrt2)^2 style differences.
  Exact near = Exact(5) * Exact::sqrt2() + Exact(-7);  // 0.0710...
  CHECK(near.sign() == 1);
  Exact tiny = Exact(99) - Exact(70) * Exact::sqrt2();  // 0.00505...
  CHECK(tiny.sign() == oracle_sign(tiny));
  Exact t2 = Exact(485) * Exact::sqrt3() - Exact(840);  // 1e-3 order
  CHECK(t2.sign() == oracle_sign(t2));
}

TEST_CASE("field axioms on random quadruples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Exact x = random_exact(rng), y = random_exact(rng), z = random_exact(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == Exact(1));
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
  CHECK_THROWS_AS(Exact(1) / Exact(0), DivisionByZero);
}

TEST_CASE("rotation matrices") {
  CHECK(rotation_matrix(Angle15(0)) == Mat2<Exact>::Identity());
  Mat2<Exact> q;
  q << 0, -1, 1, 0;
  CHECK(rotation_matrix(Angle15(6)) == q);

  Angle15 one(1);
  CHECK(one.cos() == Exact::rational(1, 4) * (Exact::sqrt6() + Exact::sqrt2()));
  CHECK(one.sin() == Exact::rational(1, 4) * (Exact::sqrt6() - Exact::sqrt2()));
  // Half-angle identity from the exact 30-degree values.
  CHECK(Exact(2) * one.cos() * one.cos() - Exact(1) == Angle15(2).cos());

  for (int a = 0; a < 24; ++a) {
    Mat2<Exact> ra = rotation_matrix(Angle15(a));
    Exact det = ra(0, 0) * ra(1, 1) - ra(0, 1) * ra(1, 0);
    CHECK(det == Exact(1));
    Enclosure ec = enclose(ra(0, 0));
    CHECK(abs(ec.mid - cos(Wide(a) * boost::math::constants::pi<Wide>() / 12)) < Wide("1e-80"));
    for (int b = 0; b < 24; ++b) {
      Mat2<Exact> prod = ra * rotation_matrix(Angle15(b));
      CHECK(prod == rotation_matrix(Angle15(a + b)));
    }
  }
}

TEST_CASE("applying motions") {
  Vec2<Exact> p(1, 1);
  CHECK(RigidMotion<Exact>::identity().apply(p) == p);
  auto r90 = motion_from_angle(Angle15(6), Vec2<Exact>::Zero());
  CHECK(r90.apply(Vec2<Exact>(1, 0)) == Vec2<Exact>(0, 1));
  auto m = motion_from_angle(Angle15(2), Vec2<Exact>(1, 0));
  Vec2<Exact> expect(Exact(1) + Exact::rational(1, 2) * Exact::sqrt3(), Exact::rational(1, 2));
  CHECK(m.apply(Vec2<Exact>(1, 0)) == expect);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> step(0, 23), coord(-5, 5);
  for (int i = 0; i < 100; ++i) {
    auto a = motion_from_angle(Angle15(step(rng)), Vec2<Exact>(coord(rng), coord(rng)));
    auto b = motion_from_angle(Angle15(step(rng)), Vec2<Exact>(coord(rng), coord(rng)));
    Vec2<Exact> x(Exact::rational(coord(rng), 3), coord(rng));
    CHECK(a.after(b).apply(x) == a.apply(b.apply(x)));
    CHECK(a.inverse().apply(a.apply(x)) == x);
    CHECK(a.is_rotation());
  }
  Mat2<Exact> refl;
  refl << 1, 0, 0, -1;
  CHECK_FALSE(RigidMotion<Exact>(refl, Vec2<Exact>::Zero()).is_rotation());
}
