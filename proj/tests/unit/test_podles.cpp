#include "doctest.h"
#include "qaffine/errors.hpp"
#include "qaffine/podles.hpp"
#include "qaffine/random.hpp"

using namespace qaffine;

namespace {
const AlgebraElement a = AlgebraElement::a();
const AlgebraElement as = AlgebraElement::aStar();
const AlgebraElement c = AlgebraElement::c();
const AlgebraElement cs = AlgebraElement::cStar();
const AlgebraElement one(1L);
const QScalar q = QScalar::q(1);
const QScalar q2 = QScalar::q(2);
const QScalar onePlus = QScalar(1L) + q2;
const SphereGens& B = sphereGens();
}  // namespace

TEST_CASE("sphere relations") {
  CHECK(B.bm * B.b0 == q2 * (B.b0 * B.bm));
  CHECK(B.bp * B.b0 == q2.inv() * (B.b0 * B.bp));
  CHECK(B.bm * B.bp == q2 * (B.b0 * (one - q2 * B.b0)));
  CHECK(B.bp * B.bm == B.b0 * (one - B.b0));
  CHECK(star(B.bp) == B.bm);
  CHECK(star(B.b0) == B.b0);
}

TEST_CASE("invariance") {
  CHECK(isInvariant(B.b0));
  CHECK_FALSE(isInvariant(a));
  CHECK(isInvariant(B.bp * B.bp * B.b0));
  CHECK(isInvariant(one));
  CHECK(sphereBasisWord(-2, 1) == B.bm * B.bm * B.b0);
  CHECK(sphereBasisWord(0, 0) == one);
}

TEST_CASE("left action table on the generators") {
  auto Xl = [](Tangent t, const AlgebraElement& f) { return X(t, f); };
  CHECK(Xl(Tangent::Plus, B.b0) == q * (as * cs));
  CHECK(Xl(Tangent::Minus, B.b0) == -(q.inv() * (c * a)));
  CHECK(Xl(Tangent::Z, B.b0).isZero());
  CHECK(Xl(Tangent::Plus, B.bp) == q * (as * as));
  CHECK(Xl(Tangent::Minus, B.bp) == c * c);
  CHECK(Xl(Tangent::Z, B.bp).isZero());
  // sign agrees with the dB- display, not the table
  CHECK(Xl(Tangent::Plus, B.bm) == -(q2 * (cs * cs)));
  CHECK(Xl(Tangent::Plus, B.bm) != q2 * (cs * cs));
  CHECK(Xl(Tangent::Minus, B.bm) == -(q.inv() * (a * a)));
  CHECK(Xl(Tangent::Z, B.bm).isZero());
}

TEST_CASE("Yact") {
  CHECK(Yact(B.b0, Tangent::Plus) == q.inv() * B.bm);
  CHECK(Yact(B.bp, Tangent::Z) == -(q2 * onePlus) * B.bp);
  CHECK(Yact(B.bm, Tangent::Plus).isZero());
  CHECK_THROWS_AS(Yact(a, Tangent::Plus), PreconditionError);
  Rng rng(61);
  for (int i = 0; i < 5; ++i) {
    const AlgebraElement f = sphereBasisWord(static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 3));
    for (Tangent t : kTangents) CHECK(isInvariant(Yact(f, t)));
  }
}

TEST_CASE("printed rel-rvf fails") {
  const RelRvfResult r1 = checkRelRvf(0, 0);
  CHECK(r1.lhs.isZero());
  CHECK_FALSE(r1.ok);
  CHECK(r1.rhs == (q2.inv() * onePlus) * ((QScalar::q(4) - QScalar(1L)) * B.b0 +
                                           (QScalar(1L) - QScalar::q(6)) * (B.b0 * B.b0)));
  const RelRvfResult rb = checkRelRvf(0, 1);
  CHECK(rb.lhs == (q2.inv() * onePlus) * ((QScalar::q(4) - QScalar(1L)) * B.b0 +
                                           (QScalar(1L) - QScalar::q(6)) * (B.b0 * B.b0)));
  CHECK_FALSE(rb.ok);
}

TEST_CASE("classical relation at q = 1") {
  for (int m = -2; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) CHECK(classicalRelation(sphereBasisWord(m, n)));
  }
}

TEST_CASE("dSphere") {
  CHECK(dSphere(B.bp) == OneForm::fromLeft({q * (as * as), c * c, {}}));
  CHECK(dSphere(B.bm) == OneForm::fromLeft({-(q2 * (cs * cs)), -(q.inv() * (a * a)), {}}));
  CHECK(dSphere(one).isZero());
  CHECK(dSphere(B.b0 * B.bp) == d(B.b0 * B.bp));
  CHECK_THROWS_AS(dSphere(a), PreconditionError);
}

TEST_CASE("omega from dB") {
  const OmegaFromDB o = omegaFromDB();
  CHECK(combineDB(o.plus) == OneForm::basis(Tangent::Plus));
  CHECK(combineDB(o.minus) == OneForm::basis(Tangent::Minus));
  for (const auto& e : o.plus) CHECK_FALSE(classicalLimit(e).empty());
}

TEST_CASE("V operators") {
  for (const auto& v : Vops(one)) CHECK(v.isZero());
  CHECK(vopsDifferential(B.b0) == dSphere(B.b0));
  // the printed coefficients do not reproduce d on B+
  CHECK(vopsDifferential(B.bp) != dSphere(B.bp));
}

TEST_CASE("frame coefficients") {
  CHECK(betaCoeff(1, 0) == QScalar(1L));
  CHECK(betaCoeff(1, 1) == q2);
  CHECK(alphaCoeff(2, 0) == QScalar(1L));
  CHECK(alphaCoeff(2, 2) == QScalar(1L));
  const Frame psi = frame(1, FrameKind::Psi);
  REQUIRE(psi.entries.size() == 2);
  CHECK(psi.entries[0].coeff.value() == QScalar(1L));
  CHECK(psi.entries[0].word == as);
  CHECK(psi.entries[1].coeff.value() == q);
  CHECK(psi.entries[1].word == cs);
  CHECK(partitionOfUnity(psi) == one);
  for (int n = 0; n <= 4; ++n) {
    CHECK(partitionOfUnity(frame(n, FrameKind::Phi)) == one);
    CHECK(partitionOfUnity(frame(n, FrameKind::Psi)) == one);
  }
  CHECK_FALSE(frame(2, FrameKind::Psi).entries[1].coeff.value().has_value());
}

TEST_CASE("radical scalars") {
  const RadicalScalar r = RadicalScalar::sqrtOf(onePlus);
  CHECK_FALSE(r.value());
  CHECK((r * r).value() == onePlus);
  CHECK(RadicalScalar::sqrtOf(QScalar::q(4)).value() == q2);
  CHECK(r.square() == onePlus);
}

TEST_CASE("projectors") {
  const Projector p1(1);
  const auto m = p1.matrix();
  REQUIRE(m);
  CHECK((*m)[0][0] == one - B.b0);
  CHECK((*m)[0][1] == B.bp);
  CHECK((*m)[1][0] == B.bm);
  CHECK((*m)[1][1] == q2 * B.b0);
  CHECK(isIdempotent(*m));
  for (int n = -3; n <= 3; ++n) {
    const Projector p(n);
    CHECK(p.idempotent());
    CHECK(p.selfAdjoint());
    CHECK(p.entriesInvariant());
    CHECK(p.weightRule());
  }
  CHECK_FALSE(Projector(2).matrix());
}

TEST_CASE("line bundle degrees") {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& e : frame(n, FrameKind::Phi).entries) CHECK(lineBundleDegree(e.word) == n);
    for (const auto& e : frame(n, FrameKind::Psi).entries) CHECK(lineBundleDegree(e.word) == -n);
  }
  const AlgebraElement x = frame(2, FrameKind::Phi).entries[1].word;
  const AlgebraElement y = frame(1, FrameKind::Phi).entries[0].word;
  CHECK(lineBundleDegree(x * y) == 3);
  CHECK_FALSE(lineBundleDegree(a + as));
  CHECK(lineBundleDegree(B.b0) == 0);
}

TEST_CASE("induced connection on M_1") {
  const HermitianForm h = HermitianForm::identity(2);
  const InducedConnection conn = inducedSphereConnection(1, h, ConnParams::zero(2));
  CHECK(checkInducedDisplay(conn));
  auto nabla = [&conn](Tangent t, const ModuleVec& v) { return conn.apply(t, v); };
  for (std::size_t mu = 0; mu < 2; ++mu) {
    const ModuleVec e = applyMatrix(conn.projector(), ModuleVec::basis(2, mu));
    for (Tangent t : kTangents) {
      CHECK(leibnizResidual(nabla, Side::Right, t, e, B.bp).isZero());
      CHECK(leibnizResidual(nabla, Side::Right, t, e, B.b0 * B.bm).isZero());
    }
  }
  CHECK(checkOrthogonalCompat(conn.projector(), conn.base(), h, sphereProbes()).ok());
}

TEST_CASE("induced connections with parameters") {
  ConnParams p = ConnParams::zero(3);
  p.gammaP[0][1] = B.bp;
  p.gammaP[2][2] = B.b0;
  p.rho[0][2] = B.bm;
  p.rho[2][0] = B.bp;
  std::vector<QScalar> w = Projector(2).weights();
  const HermitianForm h = HermitianForm::diagonal(w);
  const InducedConnection conn = inducedSphereConnection(2, h, p);
  CHECK(conn.projector() == Projector(2).conjugated());
  CHECK(checkInducedDisplay(conn));
  CHECK(checkCompatBasis(conn.base(), h).ok);
  std::vector<AlgebraElement> probes = sphereProbes();
  probes.resize(4);
  CHECK(checkOrthogonalCompat(conn.projector(), conn.base(), h, probes).ok());
  const InducedConnection trivial = inducedSphereConnection(0, HermitianForm::identity(1), ConnParams::zero(1));
  CHECK(trivial.apply(Tangent::Plus, ModuleVec::basis(1, 0, B.b0)) ==
        ModuleVec::basis(1, 0, X(Tangent::Plus, B.b0, Side::Right)));
  ConnParams bad = ConnParams::zero(2);
  bad.gammaP[0][0] = a;
  CHECK_THROWS_AS(inducedSphereConnection(1, HermitianForm::identity(2), bad), PreconditionError);
}
