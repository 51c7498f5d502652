#include <doctest.h>

#include "arrlab/exact.hpp"
#include "support.hpp"

using namespace arrlab;

namespace {

QuadExt gamma_plus() { return QuadExt(Rational(1, 2), Rational(1, 2), 5); }
QuadExt omega() { return QuadExt(Rational(1, 2), Rational(1, 2), -3); }

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rationals are stored in lowest terms") {
  Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational(-5, 2).str() == "-5/2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("squarefree part keeps the sign") {
  CHECK(squarefree_part(mpz_class(-12)) == -3);
  CHECK(squarefree_part(mpz_class(20)) == 5);
  CHECK(squarefree_part(mpz_class(1)) == 1);
  CHECK(is_squarefree(-1));
  CHECK_FALSE(is_squarefree(8));
}

TEST_CASE("gamma_+ * gamma_- = -1") {
  CHECK(gamma_plus() * gamma_plus().conjugate() == QuadExt(-1));
  QuadExt g = gamma_plus();
  CHECK((g * g - g - QuadExt(1)).is_zero());
}

TEST_CASE("the MacLane parameter satisfies x^2 - x + 1") {
  QuadExt w = omega();
  CHECK((w * w - w + QuadExt(1)).is_zero());
  CHECK(w.conjugate() == QuadExt(Rational(1, 2), Rational(-1, 2), -3));
}

TEST_CASE("additive identity and rational canonical form") {
  QuadExt x = omega();
  CHECK(x + QuadExt(0) == x);
  QuadExt r = x - x + QuadExt(3);
  CHECK(r.d() == 1);
  CHECK(r.is_rational());
  CHECK(QuadExt(5).conjugate() == QuadExt(5));
}

TEST_CASE("mixed radicands and zero division are errors") {
  QuadExt a = QuadExt::sqrt_of(5);
  QuadExt b = QuadExt::sqrt_of(-3);
  CHECK_THROWS_AS(a + b, Error);
  try {
    (void)(a * b);
    FAIL("expected MixedField");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MixedField);
  }
  try {
    (void)(a / QuadExt(0));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
  // a rational operand mixes with anything
  CHECK(a + QuadExt(Rational(1, 3)) == QuadExt(Rational(1, 3), 1, 5));
}

TEST_CASE("string form round-trips") {
  for (const QuadExt& x : {omega(), gamma_plus(), QuadExt::sqrt_of(-1), QuadExt(Rational(-7, 3)), QuadExt(0)}) {
    CHECK(QuadExt::parse(x.str()) == x);
  }
  CHECK(omega().str() == "1/2+1/2*sqrt(-3)");
  CHECK(QuadExt::sqrt_of(-1).str() == "0+1*sqrt(-1)");
  CHECK_THROWS_AS(QuadExt::parse("1+2*sqrt(4)"), Error);
  CHECK_THROWS_AS(QuadExt::parse("abc"), Error);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(20240611);
  const std::int64_t fields[] = {-3, -1, 2, 5, 1};
  int cases = 0;
  for (int it = 0; it < 10000; ++it) {
    const std::int64_t d = fields[it % 5];
    QuadExt x = testing::random_quad(rng, d), y = testing::random_quad(rng, d), z = testing::random_quad(rng, d);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x + y == y + x);
    REQUIRE(x * y == y * x);
    REQUIRE((x - x).is_zero());
    if (!y.is_zero()) {
      REQUIRE((x / y) * y == x);
      REQUIRE(y * y.inverse() == QuadExt(1));
    }
    ++cases;
  }
  CHECK(cases == 10000);
}

TEST_CASE("conjugation is a field automorphism fixing Q") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 10000; ++it) {
    const std::int64_t d = it % 2 ? -3 : 5;
    QuadExt x = testing::random_quad(rng, d), y = testing::random_quad(rng, d);
    REQUIRE((x + y).conjugate() == x.conjugate() + y.conjugate());
    REQUIRE((x * y).conjugate() == x.conjugate() * y.conjugate());
    REQUIRE(x.conjugate().conjugate() == x);
    REQUIRE(QuadExt(x.norm()) == x * x.conjugate());
    Rational q = testing::small_rational(rng);
    REQUIRE(QuadExt(q).conjugate() == QuadExt(q));
  }
}

TEST_CASE("polynomial gcd, squarefree part, discriminant") {
  const Poly t = Poly::t();
  Poly f = (t * t - t - Poly(1));         // x^2 - x - 1
  Poly g = f * (t - Poly(2));
  CHECK(gcd(g, f * (t + Poly(3))) == f);
  CHECK(squarefree(g * (t - Poly(2))) == g.monic());
  CHECK(discriminant(f) == QuadExt(5));
  auto [q, r] = divmod(g, t - Poly(2));
  CHECK(q == f);
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(f, Poly()), Error);
}

TEST_CASE("quadratic roots land in the splitting field") {
  const Poly t = Poly::t();
  auto roots = poly_roots_quadratic(t * t - t - Poly(1));
  CHECK(roots.field_d == 5);
  REQUIRE(roots.roots.size() == 2);
  CHECK(roots.roots[0].value == gamma_plus().conjugate());
  CHECK(roots.roots[1].value == gamma_plus());

  auto mac = poly_roots_quadratic(t * t - t + Poly(1));
  CHECK(mac.field_d == -3);
  auto dbl = poly_roots_quadratic((t - Poly(1)) * (t - Poly(1)));
  REQUIRE(dbl.roots.size() == 1);
  CHECK(dbl.roots[0].multiplicity == 2);
  try {
    poly_roots_quadratic(t * t * t - Poly(2));
    FAIL("expected UnsupportedDegree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedDegree);
  }
}

TEST_CASE("rational functions normalize and report poles") {
  const Poly t = Poly::t();
  RatFun f(t * t - Poly(1), Poly(2) * (t - Poly(1)));
  CHECK(f.denominator() == Poly({1}));
  CHECK(f.numerator() == Poly({QuadExt(Rational(1, 2)), QuadExt(Rational(1, 2))}));
  RatFun g(Poly(1), t);
  CHECK(g.evaluate(QuadExt(2)) == QuadExt(Rational(1, 2)));
  try {
    g.evaluate(QuadExt(0));
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PoleAtEvaluationPoint);
  }
  CHECK((g * RatFun(t)) == RatFun(Poly(1)));
}

}  // TEST_SUITE
