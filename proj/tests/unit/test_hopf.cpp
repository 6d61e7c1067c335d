#include "doctest.h"
#include "qaffine/hopf.hpp"
#include "qaffine/random.hpp"

using namespace qaffine;

namespace {
const AlgebraElement a = AlgebraElement::a();
const AlgebraElement as = AlgebraElement::aStar();
const AlgebraElement c = AlgebraElement::c();
const AlgebraElement cs = AlgebraElement::cStar();
const QScalar q = QScalar::q(1);
const QScalar s = QScalar::s(1);
}  // namespace

TEST_CASE("left action examples") {
  CHECK(actL(HopfGen::K, a) == s.inv() * a);
  CHECK(actL(HopfGen::E, c) == as);
  CHECK(actL(HopfGen::F, cs) == -(q.inv() * a));
  CHECK(actL(HopfGen::E, a * a) == -(s * qint(2)) * (a * cs));
  CHECK(actL(HopfGen::E, AlgebraElement(1L)).isZero());
  CHECK(actL(HopfGen::F, AlgebraElement(1L)).isZero());
}

TEST_CASE("right action examples") {
  CHECK(actR(a, HopfGen::F) == c);
  CHECK(actR(c, HopfGen::E) == a);
  CHECK(actR(as, HopfGen::K) == s * as);
  CHECK(actR(pow(c, 2), HopfGen::E) == s * qint(2) * (c * a));
}

TEST_CASE("table rows at n = 3") {
  const int n = 3;
  CHECK(actL(HopfGen::E, pow(c, n)) == QScalar::s(1 - n) * qint(n) * (pow(c, n - 1) * as));
  CHECK(actL(HopfGen::F, pow(as, n)) == QScalar::s(1 - n) * qint(n) * (c * pow(as, n - 1)));
  CHECK(actL(HopfGen::F, pow(cs, n)) == -(QScalar::s(-1 - n) * qint(n)) * (a * pow(cs, n - 1)));
  CHECK(actR(pow(a, n), HopfGen::F) == QScalar::s(n - 1) * qint(n) * (c * pow(a, n - 1)));
  CHECK(actR(pow(cs, n), HopfGen::F) == -(QScalar::s(n - 3) * qint(n)) * (as * pow(cs, n - 1)));
  // corrected exponent: (3 - n)/2
  CHECK(actR(pow(as, n), HopfGen::E) == -(QScalar::s(3 - n) * qint(n)) * (cs * pow(as, n - 1)));
}

TEST_CASE("printed (a*)^n <| E exponent fails away from n = 3") {
  for (int n : {1, 2, 4}) {
    CHECK(actR(pow(as, n), HopfGen::E) != -(QScalar::s(n - 3) * qint(n)) * (cs * pow(as, n - 1)));
  }
}

TEST_CASE("X examples") {
  CHECK(X(Tangent::Plus, c) == as);
  CHECK(X(Tangent::Z, a) == a);
  CHECK(X(Tangent::Z, as) == -(QScalar::q(2) * as));
  CHECK(X(Tangent::Z, AlgebraElement(1L)).isZero());
  CHECK(X(Tangent::Plus, a) == -(q * cs));
  CHECK(X(Tangent::Minus, a).isZero());
}

TEST_CASE("sigma examples") {
  CHECK(sigma(Tangent::Plus, a) == q.inv() * a);
  CHECK(sigma(Tangent::Z, cs) == QScalar::q(2) * cs);
  CHECK(sigma(Tangent::Plus, AlgebraElement(1L)) == AlgebraElement(1L));
  CHECK(sigma(Tangent::Z, sigma(Tangent::Z, a), Side::Left, -1) == a);
}

TEST_CASE("word actions compose") {
  CHECK(actL({HopfGen::K, HopfGen::Kinv}, a * c) == a * c);
  CHECK(actL({HopfGen::E, HopfGen::K}, c) == actL(HopfGen::E, actL(HopfGen::K, c)));
  CHECK(actR(a, {HopfGen::F, HopfGen::E}) == actR(actR(a, HopfGen::F), HopfGen::E));
}

TEST_CASE("twisted Leibniz on random pairs") {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const AlgebraElement f = randomElement(rng, 3);
    const AlgebraElement g = randomElement(rng, 3);
    for (Tangent t : kTangents) {
      for (Side side : {Side::Left, Side::Right}) {
        const AlgebraElement lhs = X(t, f * g, side);
        AlgebraElement rhs;
        if (side == Side::Left) {
          rhs = f * X(t, g) + X(t, f) * sigma(t, g);
        } else {
          rhs = X(t, f, side) * sigma(t, g, side) + f * X(t, g, side);
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("q-commutation relations on low-degree monomials") {
  const QScalar q2 = QScalar::q(2);
  const QScalar onePlus = QScalar(1L) + q2;
  for (int d = 0; d <= 3; ++d) {
    for (int k = -d; k <= d; ++k) {
      for (int m = 0; m + std::abs(k) <= d; ++m) {
        const AlgebraElement f(Monomial{k, m, d - std::abs(k) - m});
        auto Xp = [](const AlgebraElement& g) { return X(Tangent::Plus, g); };
        auto Xm = [](const AlgebraElement& g) { return X(Tangent::Minus, g); };
        auto Xz = [](const AlgebraElement& g) { return X(Tangent::Z, g); };
        CHECK(Xm(Xp(f)) - q2 * Xp(Xm(f)) == Xz(f));
        CHECK(q2 * Xz(Xm(f)) - q2.inv() * Xm(Xz(f)) == onePlus * Xm(f));
        CHECK(q2 * Xp(Xz(f)) - q2.inv() * Xz(Xp(f)) == onePlus * Xp(f));
      }
    }
  }
}

TEST_CASE("star identities") {
  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    const AlgebraElement f = randomElement(rng, 4);
    CHECK(X(Tangent::Plus, star(f)) == -kPow(Side::Left, 2, star(X(Tangent::Minus, f))));
    CHECK(X(Tangent::Minus, star(f)) == -kPow(Side::Left, 2, star(X(Tangent::Plus, f))));
    CHECK(X(Tangent::Z, star(f)) == -kPow(Side::Left, 4, star(X(Tangent::Z, f))));
  }
}

TEST_CASE("left and right actions commute; K is an automorphism") {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const AlgebraElement f = randomElement(rng, 3);
    const AlgebraElement g = randomElement(rng, 3);
    for (HopfGen h : {HopfGen::E, HopfGen::F, HopfGen::K}) {
      for (HopfGen k : {HopfGen::E, HopfGen::F, HopfGen::Kinv}) {
        CHECK(actR(actL(h, f), k) == actL(h, actR(f, k)));
      }
    }
    CHECK(actL(HopfGen::K, f * g) == actL(HopfGen::K, f) * actL(HopfGen::K, g));
    CHECK(actR(f * g, HopfGen::K) == actR(f, HopfGen::K) * actR(g, HopfGen::K));
  }
}

TEST_CASE("right vector fields on the sphere generators") {
  const AlgebraElement b0 = c * cs;
  const AlgebraElement bp = c * as;
  const AlgebraElement bm = a * cs;
  const AlgebraElement one(1L);
  const QScalar onePlus = QScalar(1L) + QScalar::q(2);
  auto Y = [](Tangent t, const AlgebraElement& f) { return X(t, f, Side::Right); };
  CHECK(Y(Tangent::Plus, b0) == q.inv() * bm);
  CHECK(Y(Tangent::Minus, b0) == -(q.inv() * bp));
  CHECK(Y(Tangent::Z, b0).isZero());
  CHECK(Y(Tangent::Plus, bp) == q * one - q * onePlus * b0);
  CHECK(Y(Tangent::Minus, bp).isZero());
  CHECK(Y(Tangent::Z, bp) == -(QScalar::q(2) * onePlus) * bp);
  CHECK(Y(Tangent::Plus, bm).isZero());
  CHECK(Y(Tangent::Minus, bm) == -(q.inv() * one) + q.inv() * onePlus * b0);
  CHECK(Y(Tangent::Z, bm) == (QScalar(1L) + QScalar::q(-2)) * bm);
}
