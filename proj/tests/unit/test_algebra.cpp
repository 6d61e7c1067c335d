#include "doctest.h"
#include "qaffine/algebra.hpp"
#include "qaffine/errors.hpp"
#include "qaffine/random.hpp"

using namespace qaffine;

namespace {
const AlgebraElement a = AlgebraElement::a();
const AlgebraElement as = AlgebraElement::aStar();
const AlgebraElement c = AlgebraElement::c();
const AlgebraElement cs = AlgebraElement::cStar();
const QScalar q = QScalar::q(1);
}  // namespace

TEST_CASE("defining relations normalize to zero") {
  CHECK((a * c - q * (c * a)).isZero());
  CHECK((cs * as - q * (as * cs)).isZero());
  CHECK((a * cs - q * (cs * a)).isZero());
  CHECK((c * as - q * (as * c)).isZero());
  CHECK((c * cs - cs * c).isZero());
  CHECK((as * a + cs * c - 1).isZero());
  CHECK((a * as + QScalar::q(2) * (c * cs) - 1).isZero());
  CHECK((as * a + cs * c - (a * as + QScalar::q(2) * (c * cs))).isZero());
}

TEST_CASE("product examples") {
  CHECK(c * a == q.inv() * (a * c));
  CHECK(c * a == AlgebraElement(Monomial{1, 1, 0}, q.inv()));
  CHECK(as * a == 1 - cs * c);
  CHECK(a * as == 1 - QScalar::q(2) * (c * cs));
  const AlgebraElement ac = a * c;
  CHECK(ac * ac == AlgebraElement(Monomial{2, 2, 0}, q.inv()));
}

TEST_CASE("higher sphere products match iterated relations") {
  // a^2 (a*)^2 computed two ways
  const AlgebraElement lhs = pow(a, 2) * pow(as, 2);
  const AlgebraElement rhs = a * (a * as) * as;
  CHECK(lhs == rhs);
  CHECK(pow(as, 3) * pow(a, 2) == as * (as * (as * a) * a));
  CHECK(pow(a, 3) * as == a * a * (a * as));
}

TEST_CASE("star examples") {
  CHECK(star(a) == as);
  CHECK(star(a * c) == q * (as * cs));
  const AlgebraElement x = 1 - QScalar::q(2) * (c * cs);
  CHECK(star(x) == x);
  CHECK(star(QScalar::s(3) * a) == QScalar::s(3) * as);
}

TEST_CASE("associativity, unit and star on random inputs") {
  Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    const AlgebraElement f = randomElement(rng, 4);
    const AlgebraElement g = randomElement(rng, 4);
    const AlgebraElement h = randomElement(rng, 4);
    CHECK((f * g) * h == f * (g * h));
    CHECK(AlgebraElement(1L) * f == f);
    CHECK(f * AlgebraElement(1L) == f);
    CHECK(star(star(f)) == f);
    CHECK(star(f * g) == star(g) * star(f));
  }
}

TEST_CASE("parallel product agrees with serial") {
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    const AlgebraElement f = randomElement(rng, 5, 12);
    const AlgebraElement g = randomElement(rng, 5, 12);
    CHECK(mulParallel(f, g) == mulSerial(f, g));
  }
}

TEST_CASE("classical limit") {
  CommutativePoly expected{{Monomial{1, 1, 0}, Rational(1)}};
  CHECK(classicalLimit(q * a * c) == classicalLimit(a * c));
  CHECK(classicalLimit(q * (a * c)) == expected);
  CHECK(classicalLimit(as * a + cs * c) == CommutativePoly{{Monomial{}, Rational(1)}});
  const QScalar k = QScalar(1L) - QScalar::q(-2);
  CHECK(classicalLimit((k.inv() * k) * a) == classicalLimit(a));
  CHECK_THROWS_AS(classicalLimit(k.inv() * a), PoleError);
}

TEST_CASE("degree cap") {
  const int saved = degreeCap();
  setDegreeCap(4);
  CHECK_THROWS_AS(pow(a, 5), DegreeCapExceeded);
  CHECK_NOTHROW(pow(a, 4));
  setDegreeCap(saved);
  CHECK_NOTHROW(pow(a, 5));
}

TEST_CASE("printing") {
  CHECK(AlgebraElement().toString() == "0");
  CHECK(AlgebraElement(1L).toString() == "1");
  CHECK((q * (as * cs)).toString() == "(q) as cs");
  CHECK((1 - cs * c).toString() == "-c cs + 1");
  CHECK(AlgebraElement(Monomial{2, 1, 3}, QScalar::q(2)).toString() == "(q^2) a^2 c cs^3");
}
