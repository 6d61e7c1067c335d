#include "qaffine/podles.hpp"

#include <sstream>

#include "qaffine/errors.hpp"

namespace qaffine {

namespace {

QScalar q(int k) { return QScalar::q(k); }

const QScalar& onePlusQ2() {
  static const QScalar v = QScalar(1L) + q(2);
  return v;
}

AlgebraElement yRaw(Tangent t, const AlgebraElement& f) { return X(t, f, Side::Right); }

AlgebraElement frameWord(int n, int mu, FrameKind kind) {
  if (kind == FrameKind::Phi) return pow(AlgebraElement::c(), n - mu) * pow(AlgebraElement::a(), mu);
  return pow(AlgebraElement::cStar(), mu) * pow(AlgebraElement::aStar(), n - mu);
}

}  // namespace

const SphereGens& sphereGens() {
  static const SphereGens g{AlgebraElement::c() * AlgebraElement::cStar(),
                            AlgebraElement::c() * AlgebraElement::aStar(),
                            AlgebraElement::a() * AlgebraElement::cStar()};
  return g;
}

bool isInvariant(const AlgebraElement& f) { return kPow(Side::Left, 1, f) == f; }

AlgebraElement sphereBasisWord(int m, int n) {
  if (n < 0) throw PreconditionError("sphere basis word needs n >= 0");
  const SphereGens& g = sphereGens();
  const AlgebraElement head = m >= 0 ? pow(g.bp, m) : pow(g.bm, -m);
  return head * pow(g.b0, n);
}

AlgebraElement Yact(const AlgebraElement& f, Tangent a) {
  if (!isInvariant(f)) throw PreconditionError("Yact: argument is not in the sphere");
  AlgebraElement r = yRaw(a, f);
  if (!isInvariant(r)) throw Error("Yact: result left the sphere");
  return r;
}

RelRvfResult checkRelRvf(const AlgebraElement& f) {
  const SphereGens& g = sphereGens();
  const AlgebraElement one(1L);
  const QScalar q4p = QScalar(1L) + q(4);
  const AlgebraElement yp = yRaw(Tangent::Plus, f);
  const AlgebraElement ym = yRaw(Tangent::Minus, f);
  const AlgebraElement yz = yRaw(Tangent::Z, f);
  const AlgebraElement yzz = yRaw(Tangent::Z, yz);
  const AlgebraElement b0sq = g.b0 * g.b0;

  RelRvfResult r;
  r.lhs = onePlusQ2() * (q(1) * (yp * g.bp) + q(-1) * (ym * g.bm)) +
          yz * (one - (QScalar(2L) * onePlusQ2() * q4p.inv()) * g.b0);
  const AlgebraElement zzFactor =
      ((QScalar(1L) - q(2)) * q4p.inv() * (QScalar(2L) * q(4) + q(2) + QScalar(1L))) * g.b0 -
      (QScalar(1L) - q(6)) * b0sq;
  const AlgebraElement k4Factor = (q(4) - QScalar(1L)) * g.b0 + (QScalar(1L) - q(6)) * b0sq;
  r.rhs = q(-2) * (yzz * zzFactor) + (q(-2) * onePlusQ2()) * (kPow(Side::Right, 4, f) * k4Factor);
  r.residual = r.lhs - r.rhs;
  r.ok = r.residual.isZero();
  return r;
}

OneForm dSphere(const AlgebraElement& f) {
  if (!isInvariant(f)) throw PreconditionError("dSphere: argument is not in the sphere");
  const OneForm df = d(f);
  if (!df.left()[index(Tangent::Z)].isZero()) throw Error("dSphere: wz component does not vanish");
  return df;
}

OmegaFromDB omegaFromDB() {
  const AlgebraElement a = AlgebraElement::a();
  const AlgebraElement as = AlgebraElement::aStar();
  const AlgebraElement c = AlgebraElement::c();
  const AlgebraElement cs = AlgebraElement::cStar();
  OmegaFromDB r;
  r.plus = {q(-1) * (a * a), -(q(2) * (c * c)), onePlusQ2() * (a * c)};
  r.minus = {cs * cs, -(q(1) * (as * as)), -(onePlusQ2() * (cs * as))};
  return r;
}

OneForm combineDB(const std::array<AlgebraElement, 3>& coeffs) {
  const SphereGens& g = sphereGens();
  const std::array<const AlgebraElement*, 3> gens{&g.bp, &g.bm, &g.b0};
  OneForm r;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!coeffs[k].isZero()) r = r + smulL(coeffs[k], dSphere(*gens[k]));
  }
  return r;
}

std::array<AlgebraElement, 3> Vops(const AlgebraElement& f) {
  const SphereGens& g = sphereGens();
  const AlgebraElement one(1L);
  const QScalar q4p = QScalar(1L) + q(4);
  const QScalar zCoeff = q(-2) * (QScalar(1L) + q(6)) * q4p.inv();
  const QScalar zzCoeff = (QScalar(1L) - q(2)) * (onePlusQ2() * q4p).inv();
  const AlgebraElement yp = yRaw(Tangent::Plus, f);
  const AlgebraElement ym = yRaw(Tangent::Minus, f);
  const AlgebraElement yz = yRaw(Tangent::Z, f);
  const AlgebraElement yzz = yRaw(Tangent::Z, yz);

  std::array<AlgebraElement, 3> v;
  v[0] = q(-1) * (yp * (one - (q(-2) * onePlusQ2()) * g.b0)) - zCoeff * (yz * g.bm) +
         zzCoeff * (yzz * g.bm);
  v[1] = -(q(1) * (ym * (one - (q(2) * onePlusQ2()) * g.b0))) + zCoeff * (yz * g.bp) -
         zzCoeff * (yzz * g.bp);
  v[2] = onePlusQ2() * (q(-1) * (yp * g.bp) - q(1) * (ym * g.bm)) +
         ((QScalar(1L) - q(4)) * (QScalar(1L) + q(6)) * q4p.inv()) * (yz * g.b0) -
         ((QScalar(1L) - q(2)) * q4p.inv()) * (yzz * g.b0);
  return v;
}

OneForm vopsDifferential(const AlgebraElement& f) {
  if (!isInvariant(f)) throw PreconditionError("Vops: argument is not in the sphere");
  return combineDB(Vops(f));
}

CommutativePoly classicalRelationResidual(const AlgebraElement& f) {
  const SphereGens& g = sphereGens();
  const AlgebraElement one(1L);
  const AlgebraElement expr = QScalar(2L) * (yRaw(Tangent::Plus, f) * g.bp + yRaw(Tangent::Minus, f) * g.bm) +
                              yRaw(Tangent::Z, f) * (one - QScalar(2L) * g.b0);
  return classicalLimit(expr);
}

bool classicalRelation(const AlgebraElement& f) { return classicalRelationResidual(f).empty(); }

std::optional<int> lineBundleDegree(const AlgebraElement& f) {
  std::optional<int> w;
  for (const auto& [m, coeff] : f.terms()) {
    const int mw = m.leftWeight();
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  if (!w) return std::nullopt;
  return -*w;
}

QScalar alphaCoeff(int n, int mu) {
  QScalar r(1L);
  for (int k = 0; k <= n - mu - 1; ++k) {
    r = r * (QScalar(1L) - q(2 * (n - k))) * (QScalar(1L) - q(2 * (k + 1))).inv();
  }
  return r;
}

QScalar betaCoeff(int n, int mu) {
  QScalar r = q(2 * mu);
  for (int k = 0; k <= mu - 1; ++k) {
    r = r * (QScalar(1L) - q(-2 * (n - k))) * (QScalar(1L) - q(-2 * (k + 1))).inv();
  }
  return r;
}

RadicalScalar::RadicalScalar(QScalar base, QScalar radicand)
    : base_(std::move(base)), radicand_(std::move(radicand)) {
  if (radicand_.isZero() || base_.isZero()) {
    base_ = QScalar();
    radicand_ = QScalar(1L);
    return;
  }
  if (auto root = radicand_.sqrt()) {
    base_ = base_ * *root;
    radicand_ = QScalar(1L);
  }
}

std::optional<QScalar> RadicalScalar::value() const {
  if (radicand_.isOne()) return base_;
  return std::nullopt;
}

RadicalScalar operator*(const RadicalScalar& x, const RadicalScalar& y) {
  if (x.radicand_ == y.radicand_) return RadicalScalar(x.base_ * y.base_ * x.radicand_);
  return RadicalScalar(x.base_ * y.base_, x.radicand_ * y.radicand_);
}

std::string RadicalScalar::toString() const {
  if (radicand_.isOne()) return base_.toString();
  const std::string root = "sqrt(" + radicand_.toString() + ")";
  if (base_.isOne()) return root;
  return "(" + base_.toString() + ") " + root;
}

Frame frame(int n, FrameKind kind) {
  if (n < 0) throw PreconditionError("frame degree must be nonnegative");
  Frame f;
  f.n = n;
  f.kind = kind;
  for (int mu = 0; mu <= n; ++mu) {
    const QScalar w = kind == FrameKind::Phi ? alphaCoeff(n, mu) : betaCoeff(n, mu);
    f.entries.push_back({RadicalScalar::sqrtOf(w), frameWord(n, mu, kind)});
  }
  return f;
}

AlgebraElement partitionOfUnity(const Frame& f) {
  AlgebraElement r;
  for (const auto& e : f.entries) r += e.coeff.square() * (star(e.word) * e.word);
  return r;
}

Projector::Projector(int n) : n_(n) {
  const int m = n >= 0 ? n : -n;
  const FrameKind kind = n >= 0 ? FrameKind::Psi : FrameKind::Phi;
  std::vector<AlgebraElement> ws;
  for (int mu = 0; mu <= m; ++mu) {
    weights_.push_back(kind == FrameKind::Phi ? alphaCoeff(m, mu) : betaCoeff(m, mu));
    ws.push_back(frameWord(m, mu, kind));
  }
  words_ = zeroMatrix(ws.size());
  for (std::size_t mu = 0; mu < ws.size(); ++mu) {
    for (std::size_t nu = 0; nu < ws.size(); ++nu) words_[mu][nu] = ws[mu] * star(ws[nu]);
  }
}

RadicalScalar Projector::coefficient(std::size_t mu, std::size_t nu) const {
  return RadicalScalar::sqrtOf(weights_[mu] * weights_[nu]);
}

std::optional<AlgMatrix> Projector::matrix() const {
  AlgMatrix r = zeroMatrix(size());
  for (std::size_t mu = 0; mu < size(); ++mu) {
    for (std::size_t nu = 0; nu < size(); ++nu) {
      const auto v = coefficient(mu, nu).value();
      if (!v) return std::nullopt;
      r[mu][nu] = *v * words_[mu][nu];
    }
  }
  return r;
}

AlgMatrix Projector::conjugated() const {
  AlgMatrix r = words_;
  for (auto& row : r) {
    for (std::size_t nu = 0; nu < size(); ++nu) row[nu] = weights_[nu] * row[nu];
  }
  return r;
}

bool Projector::idempotent() const { return isIdempotent(conjugated()); }

bool Projector::selfAdjoint() const { return adjoint(words_) == words_; }

bool Projector::entriesInvariant() const {
  for (const auto& row : words_) {
    for (const auto& e : row) {
      if (!isInvariant(e)) return false;
    }
  }
  return true;
}

bool Projector::weightRule() const {
  for (std::size_t mu = 0; mu < size(); ++mu) {
    for (std::size_t nu = 0; nu < size(); ++nu) {
      const int k = static_cast<int>(nu) - static_cast<int>(mu);
      if (kPow(Side::Right, 1, words_[mu][nu]) != q(k) * words_[mu][nu]) return false;
    }
  }
  return true;
}

std::string Projector::toString() const {
  std::ostringstream out;
  for (std::size_t mu = 0; mu < size(); ++mu) {
    out << "[";
    for (std::size_t nu = 0; nu < size(); ++nu) {
      if (nu > 0) out << ", ";
      const RadicalScalar k = coefficient(mu, nu);
      if (k.value()) {
        out << (*k.value() * words_[mu][nu]).toString();
      } else {
        out << k.toString() << " * (" << words_[mu][nu].toString() << ")";
      }
    }
    out << "]\n";
  }
  return out.str();
}

std::vector<AlgebraElement> sphereProbes() {
  const SphereGens& g = sphereGens();
  const std::vector<AlgebraElement> gens{g.b0, g.bp, g.bm};
  std::vector<AlgebraElement> out{AlgebraElement(1L)};
  for (const auto& x : gens) out.push_back(x);
  for (const auto& x : gens) {
    for (const auto& y : gens) out.push_back(x * y);
  }
  return out;
}

InducedConnection inducedSphereConnection(int n, const HermitianForm& h, const ConnParams& params) {
  const Projector p(n);
  if (h.rank() != p.size()) throw RankMismatch("metric rank must be |n| + 1");
  for (const auto& row : h.h()) {
    for (const auto& e : row) {
      if (!isInvariant(e)) throw PreconditionError("metric entries must lie in the sphere");
    }
  }
  for (const AlgMatrix* m : {&params.gammaP, &params.rho}) {
    for (const auto& row : *m) {
      for (const auto& e : row) {
        if (!isInvariant(e)) throw PreconditionError("connection parameters must lie in the sphere");
      }
    }
  }
  const auto exact = p.matrix();
  return InducedConnection(exact ? *exact : p.conjugated(), christoffelFromForm(h, params, Side::Right));
}

bool checkInducedDisplay(const InducedConnection& conn) {
  const AlgMatrix& p = conn.projector();
  const Connection& base = conn.base();
  const std::size_t n = p.size();
  auto hat = [&p, n](std::size_t i) { return applyMatrix(p, ModuleVec::basis(n, i)); };
  for (Tangent a : kTangents) {
    const int k = a == Tangent::Z ? 4 : 2;
    for (std::size_t mu = 0; mu < n; ++mu) {
      ModuleVec column(n);
      for (std::size_t nu = 0; nu < n; ++nu) column.coords[nu] = p[nu][mu];
      const ModuleVec lhs = conn.apply(a, column);
      ModuleVec rhs(n);
      for (std::size_t nu = 0; nu < n; ++nu) {
        const AlgebraElement& pnm = p[nu][mu];
        if (pnm.isZero()) continue;
        const QScalar twist = q(k * (static_cast<int>(mu) - static_cast<int>(nu)));
        for (std::size_t g = 0; g < n; ++g) {
          const AlgebraElement& gamma = base[a][g][nu];
          if (!gamma.isZero()) rhs = rhs + hat(g) * (twist * (gamma * pnm));
        }
        rhs = rhs + hat(nu) * yRaw(a, pnm);
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace qaffine
