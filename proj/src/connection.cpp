#include "qaffine/connection.hpp"

#include <functional>
#include <sstream>

#include "qaffine/errors.hpp"

namespace qaffine {

namespace {

using NablaFn = std::function<ModuleVec(Tangent, const ModuleVec&)>;

const QScalar& half() {
  static const QScalar v(Rational(1, 2));
  return v;
}

AlgebraElement K(int j, const AlgebraElement& f) { return kPow(Side::Left, j, f); }

void requireSquare(const AlgMatrix& m, std::size_t n, const char* what) {
  if (m.size() != n) throw RankMismatch(std::string(what) + ": wrong number of rows");
  for (const auto& row : m) {
    if (row.size() != n) throw RankMismatch(std::string(what) + ": wrong number of columns");
  }
}

// The compatibility residuals for an arbitrary nabla on the given side.
CompatResult compatResiduals(const NablaFn& nabla, Side side, const HermitianForm& h,
                             const ModuleVec& m1, const ModuleVec& m2) {
  if (m1.rank() != h.rank() || m2.rank() != h.rank()) {
    throw RankMismatch("module vector rank does not match the hermitian form");
  }
  CompatResult out;
  const AlgebraElement h12 = hEval(h, m1, m2);
  for (Tangent a : kTangents) {
    const Tangent b = daggerOf(a);
    AlgebraElement twisted = hEval(h, nabla(b, m1), m2);
    QScalar factor(1L);
    if (side == Side::Right && a == Tangent::Plus) factor = QScalar::q(2);
    if (side == Side::Right && a == Tangent::Minus) factor = QScalar::q(-2);
    AlgebraElement r = X(a, h12, side) - hEval(h, m1, nabla(a, m2)) +
                       factor * kPow(side, twistPower(a), twisted);
    if (!r.isZero()) out.ok = false;
    out.residual[index(a)] = std::move(r);
  }
  return out;
}

}  // namespace

AlgMatrix zeroMatrix(std::size_t n) { return AlgMatrix(n, std::vector<AlgebraElement>(n)); }

AlgMatrix identityMatrix(std::size_t n) {
  AlgMatrix m = zeroMatrix(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = AlgebraElement(1L);
  return m;
}

AlgMatrix matmul(const AlgMatrix& x, const AlgMatrix& y) {
  const std::size_t n = x.size();
  const std::size_t k = y.size();
  const std::size_t m = k == 0 ? 0 : y[0].size();
  AlgMatrix r(n, std::vector<AlgebraElement>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].size() != k) throw RankMismatch("matrix product shape mismatch");
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (!x[i][l].isZero() && !y[l][j].isZero()) r[i][j] += x[i][l] * y[l][j];
      }
    }
  }
  return r;
}

AlgMatrix operator+(const AlgMatrix& x, const AlgMatrix& y) {
  AlgMatrix r = x;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += y[i][j];
  }
  return r;
}

AlgMatrix operator-(const AlgMatrix& x, const AlgMatrix& y) {
  AlgMatrix r = x;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= y[i][j];
  }
  return r;
}

bool isZero(const AlgMatrix& x) {
  for (const auto& row : x) {
    for (const auto& e : row) {
      if (!e.isZero()) return false;
    }
  }
  return true;
}

AlgMatrix adjoint(const AlgMatrix& x) {
  const std::size_t n = x.size();
  const std::size_t m = n == 0 ? 0 : x[0].size();
  AlgMatrix r(m, std::vector<AlgebraElement>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) r[j][i] = star(x[i][j]);
  }
  return r;
}

ModuleVec ModuleVec::basis(std::size_t n, std::size_t i, const AlgebraElement& f) {
  ModuleVec m(n);
  m.coords[i] = f;
  return m;
}

bool ModuleVec::isZero() const {
  for (const auto& c : coords) {
    if (!c.isZero()) return false;
  }
  return true;
}

ModuleVec& ModuleVec::operator+=(const ModuleVec& o) {
  if (o.rank() != rank()) throw RankMismatch("module vector ranks differ");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

ModuleVec& ModuleVec::operator-=(const ModuleVec& o) {
  if (o.rank() != rank()) throw RankMismatch("module vector ranks differ");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

ModuleVec operator*(const QScalar& k, const ModuleVec& m) {
  ModuleVec r = m;
  for (auto& c : r.coords) c *= k;
  return r;
}

ModuleVec operator*(const ModuleVec& m, const AlgebraElement& f) {
  ModuleVec r(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (!m.coords[i].isZero()) r.coords[i] = m.coords[i] * f;
  }
  return r;
}

std::string ModuleVec::toString() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) os << ", ";
    os << coords[i].toString();
  }
  os << "]";
  return os.str();
}

ModuleVec applyMatrix(const AlgMatrix& p, const ModuleVec& m) {
  if (p.size() != m.rank()) throw RankMismatch("matrix does not match module rank");
  ModuleVec r(m.rank());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < m.rank(); ++j) {
      if (!p[i][j].isZero() && !m.coords[j].isZero()) r.coords[i] += p[i][j] * m.coords[j];
    }
  }
  return r;
}

HermitianForm::HermitianForm(AlgMatrix h, AlgMatrix hInv) : h_(std::move(h)), hInv_(std::move(hInv)) {
  const std::size_t n = h_.size();
  requireSquare(h_, n, "hermitian form");
  requireSquare(hInv_, n, "inverse of hermitian form");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (star(h_[i][j]) != h_[j][i]) {
        throw PreconditionError("hermitian form is not symmetric at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
      }
    }
  }
  const AlgMatrix id = identityMatrix(n);
  if (matmul(h_, hInv_) != id || matmul(hInv_, h_) != id) {
    throw PreconditionError("supplied inverse does not invert the hermitian form");
  }
}

HermitianForm HermitianForm::identity(std::size_t n) {
  return HermitianForm(identityMatrix(n), identityMatrix(n));
}

HermitianForm HermitianForm::diagonal(const std::vector<QScalar>& entries) {
  AlgMatrix h = zeroMatrix(entries.size());
  AlgMatrix hi = zeroMatrix(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    h[i][i] = AlgebraElement(entries[i]);
    hi[i][i] = AlgebraElement(entries[i].inv());
  }
  return HermitianForm(std::move(h), std::move(hi));
}

HermitianForm congruentMetric(const std::vector<QScalar>& d, const AlgMatrix& u, const AlgMatrix& uInv) {
  AlgMatrix dm = zeroMatrix(d.size());
  AlgMatrix dInv = zeroMatrix(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    dm[i][i] = AlgebraElement(d[i]);
    dInv[i][i] = AlgebraElement(d[i].inv());
  }
  return HermitianForm(matmul(adjoint(u), matmul(dm, u)), matmul(uInv, matmul(dInv, adjoint(uInv))));
}

AlgebraElement hEval(const HermitianForm& h, const ModuleVec& m1, const ModuleVec& m2) {
  const std::size_t n = h.rank();
  if (m1.rank() != n || m2.rank() != n) throw RankMismatch("hEval: rank mismatch");
  AlgebraElement r;
  for (std::size_t i = 0; i < n; ++i) {
    if (m1.coords[i].isZero()) continue;
    const AlgebraElement left = star(m1.coords[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (h(i, j).isZero() || m2.coords[j].isZero()) continue;
      r += left * h(i, j) * m2.coords[j];
    }
  }
  return r;
}

Connection Connection::zero(std::size_t n, Side side) {
  Connection c;
  c.rank = n;
  c.side = side;
  for (auto& g : c.gamma) g = zeroMatrix(n);
  return c;
}

ModuleVec nablaApply(const Connection& conn, Tangent a, const ModuleVec& m) {
  if (m.rank() != conn.rank) throw RankMismatch("nablaApply: rank mismatch");
  const AlgMatrix& g = conn[a];
  ModuleVec r(conn.rank);
  for (std::size_t i = 0; i < conn.rank; ++i) {
    if (m.coords[i].isZero()) continue;
    const AlgebraElement twisted = sigma(a, m.coords[i], conn.side);
    for (std::size_t j = 0; j < conn.rank; ++j) {
      if (!g[j][i].isZero()) r.coords[j] += g[j][i] * twisted;
    }
    r.coords[i] += X(a, m.coords[i], conn.side);
  }
  return r;
}

CompatResult checkCompat(const Connection& conn, const HermitianForm& h, const ModuleVec& m1,
                         const ModuleVec& m2) {
  if (conn.rank != h.rank()) throw RankMismatch("connection and hermitian form ranks differ");
  return compatResiduals([&conn](Tangent a, const ModuleVec& m) { return nablaApply(conn, a, m); },
                         conn.side, h, m1, m2);
}

CompatResult checkCompatBasis(const Connection& conn, const HermitianForm& h) {
  CompatResult total;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    for (std::size_t j = 0; j < h.rank(); ++j) {
      CompatResult r = checkCompat(conn, h, ModuleVec::basis(h.rank(), i), ModuleVec::basis(h.rank(), j));
      if (!r.ok) return r;
    }
  }
  return total;
}

ConnParams ConnParams::zero(std::size_t n) { return ConnParams{zeroMatrix(n), zeroMatrix(n)}; }

Connection christoffelFromForm(const HermitianForm& h, const ConnParams& p, Side side) {
  const std::size_t n = h.rank();
  requireSquare(p.gammaP, n, "gamma parameters");
  requireSquare(p.rho, n, "rho parameters");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (star(p.rho[i][j]) != p.rho[j][i]) throw PreconditionError("rho is not hermitian");
    }
  }
  // lowered symbols Gamma_{a,kj}
  std::array<AlgMatrix, 3> low{zeroMatrix(n), zeroMatrix(n), zeroMatrix(n)};
  const QScalar plusFactor = side == Side::Left ? QScalar(1L) : QScalar::q(2);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const AlgebraElement& hkj = h(k, j);
      low[0][k][j] = half() * X(Tangent::Plus, hkj, side) + plusFactor * kPow(side, 1, p.gammaP[k][j]);
      low[1][k][j] = half() * X(Tangent::Minus, hkj, side) + kPow(side, 1, star(p.gammaP[j][k]));
      low[2][k][j] = half() * X(Tangent::Z, hkj, side) + kPow(side, 2, p.rho[k][j]);
    }
  }
  Connection c;
  c.rank = n;
  c.side = side;
  for (int a = 0; a < 3; ++a) c.gamma[a] = matmul(h.hInv(), low[a]);
  return c;
}

TorsionResult checkTorsionFree(const Connection& conn) {
  if (conn.rank != 3) throw RankMismatch("torsion is defined on the rank-3 module of one-forms");
  auto nablaW = [&conn](Tangent a, Tangent i) {
    const AlgMatrix& g = conn[a];
    const int col = index(i);
    return OneForm(g[0][col], g[1][col], g[2][col]);
  };
  const QScalar q2 = QScalar::q(2);
  const QScalar q2inv = QScalar::q(-2);
  const QScalar onePlus = QScalar(1L) + q2;
  using T = Tangent;
  TorsionResult out;
  out.residual[0] = nablaW(T::Minus, T::Plus) - q2 * nablaW(T::Plus, T::Minus) - OneForm::basis(T::Z);
  out.residual[1] = q2 * nablaW(T::Z, T::Minus) - q2inv * nablaW(T::Minus, T::Z) -
                    onePlus * OneForm::basis(T::Minus);
  out.residual[2] = q2 * nablaW(T::Plus, T::Z) - q2inv * nablaW(T::Z, T::Plus) -
                    onePlus * OneForm::basis(T::Plus);
  for (const auto& r : out.residual) {
    if (!r.isZero()) out.ok = false;
  }
  return out;
}

AlgebraElement lcConditionResidual(const HermitianForm& h) {
  if (h.rank() != 3) throw RankMismatch("the Levi-Civita condition needs a rank-3 form");
  constexpr int P = 0, M = 1, Z = 2;
  const QScalar q2 = QScalar::q(2);
  const AlgebraElement lhs = X(Tangent::Z, h(P, P) - q2 * h(M, M));
  const AlgebraElement rhs = K(2, X(Tangent::Minus, h(Z, P))) - q2 * X(Tangent::Minus, h(M, Z)) -
                             q2 * K(2, X(Tangent::Plus, h(Z, M))) + X(Tangent::Plus, h(P, Z));
  return lhs - rhs;
}

bool lcCondition(const HermitianForm& h) { return lcConditionResidual(h).isZero(); }

ConnParams lcParams(const HermitianForm& h, const LcFreeParams& free) {
  if (h.rank() != 3) throw RankMismatch("lcSolve needs a rank-3 form");
  if (star(free.rhoMM) != free.rhoMM) throw PreconditionError("rho_{--} must be hermitian");
  if (star(free.rhoZZ) != free.rhoZZ) throw PreconditionError("rho_{zz} must be hermitian");
  const AlgebraElement cond = lcConditionResidual(h);
  if (!cond.isZero()) {
    throw PreconditionError("metric violates the Levi-Civita existence condition: " + cond.toString());
  }
  constexpr int P = 0, M = 1, Z = 2;
  const QScalar q2 = QScalar::q(2);
  const QScalar qm2 = QScalar::q(-2);
  const QScalar onePlus = QScalar(1L) + q2;
  const QScalar hq2 = half() * q2;
  const QScalar hqm2 = half() * qm2;

  std::array<AlgebraElement, 3> A, B, C;
  for (int b = 0; b < 3; ++b) {
    A[b] = K(-1, h(b, Z) - half() * X(Tangent::Minus, h(b, P)) + hq2 * X(Tangent::Plus, h(b, M)));
    B[b] = K(-1, onePlus * h(b, M) - hq2 * X(Tangent::Z, h(b, M)) + hqm2 * X(Tangent::Minus, h(b, Z)));
    C[b] = K(-1, onePlus * h(b, P) - hq2 * X(Tangent::Plus, h(b, Z)) + hqm2 * X(Tangent::Z, h(b, P)));
  }

  AlgMatrix g = zeroMatrix(3);
  AlgMatrix rho = zeroMatrix(3);
  g[P][M] = free.gammaPM;
  g[M][P] = free.gammaMP;
  g[Z][Z] = free.gammaZZ;
  rho[P][M] = free.rhoPM;
  rho[M][P] = star(free.rhoPM);
  rho[M][M] = free.rhoMM;
  rho[Z][Z] = free.rhoZZ;

  // first group
  g[P][P] = star(A[P]) + q2 * star(g[P][M]);
  g[M][M] = qm2 * star(g[P][M]) - qm2 * A[M];
  // second group
  g[Z][P] = QScalar::q(4) * star(K(1, rho[P][M])) - q2 * star(B[P]);
  rho[Z][M] = qm2 * K(-1, B[Z]) + QScalar::q(-4) * K(-1, star(g[Z][Z]));
  g[M][Z] = qm2 * C[M] + QScalar::q(-4) * K(1, rho[M][P]);
  rho[Z][P] = QScalar::q(4) * K(-1, g[Z][Z]) - q2 * K(-1, C[Z]);
  rho[M][Z] = star(rho[Z][M]);
  rho[P][Z] = star(rho[Z][P]);
  // third group
  const AlgebraElement R = QScalar::q(10) * rho[M][M] + QScalar::q(4) * K(1, A[Z]) -
                           QScalar::q(8) * K(1, star(B[M])) - q2 * K(1, star(C[P]));
  if (star(R) != R) throw PreconditionError("rho_{++} came out non-hermitian");
  rho[P][P] = R;
  g[Z][M] = QScalar::q(4) * K(-1, rho[M][M]) - q2 * star(B[M]);
  g[P][Z] = qm2 * C[P] + QScalar::q(-4) * K(1, rho[P][P]);
  return ConnParams{std::move(g), std::move(rho)};
}

Connection lcSolve(const HermitianForm& h, const LcFreeParams& free) {
  return christoffelFromForm(h, lcParams(h, free));
}

HermitianForm diagonalMetric(const AlgebraElement& h, const AlgebraElement& hInv,
                             const AlgebraElement& hz, const AlgebraElement& hzInv) {
  AlgMatrix m = zeroMatrix(3);
  AlgMatrix mi = zeroMatrix(3);
  m[0][0] = QScalar::q(2) * h;
  m[1][1] = h;
  m[2][2] = hz;
  mi[0][0] = QScalar::q(-2) * hInv;
  mi[1][1] = hInv;
  mi[2][2] = hzInv;
  return HermitianForm(std::move(m), std::move(mi));
}

Connection diagonalLC(const AlgebraElement& h, const AlgebraElement& hInv, const AlgebraElement& hz,
                      const AlgebraElement& hzInv) {
  if (h * hInv != AlgebraElement(1L) || hInv * h != AlgebraElement(1L)) {
    throw PreconditionError("supplied h^-1 does not invert h");
  }
  if (hz * hzInv != AlgebraElement(1L) || hzInv * hz != AlgebraElement(1L)) {
    throw PreconditionError("supplied hz^-1 does not invert hz");
  }
  constexpr int P = 0, M = 1, Z = 2;
  const QScalar q2 = QScalar::q(2);
  const QScalar q4 = QScalar::q(4);
  const QScalar q6 = QScalar::q(6);
  const QScalar q8 = QScalar::q(8);
  const QScalar norm = (QScalar(1L) - QScalar::q(-2)).inv();
  const QScalar one(1L);
  using T = Tangent;

  Connection c = Connection::zero(3);
  auto& gp = c[T::Plus];
  auto& gm = c[T::Minus];
  auto& gz = c[T::Z];
  // column i holds nabla_a w_i
  gp[P][P] = hInv * X(T::Plus, h);
  gp[Z][M] = hzInv * norm * ((one - half() * q4) * K(2, h) - half() * q4 * K(-2, h));
  gp[P][Z] = QScalar::q(-2) * hInv * (K(2, hz) + norm * ((q2 - half() * q6) * h - half() * q6 * K(4, h)));
  gp[Z][Z] = half() * hzInv * X(T::Plus, hz);

  gm[Z][P] = AlgebraElement(1L) + hzInv * norm * ((q2 - half() * q6) * K(2, h) - half() * q6 * K(-2, h));
  gm[M][M] = hInv * X(T::Minus, h);
  gm[M][Z] = hInv * norm * ((one - half() * q4) * h - half() * q4 * K(4, h));
  gm[Z][Z] = half() * hzInv * X(T::Minus, hz);

  gz[Z][P] = half() * q4 * hzInv * X(T::Plus, hz);
  gz[P][P] = q2 * hInv * K(2, hz) + hInv * norm * ((one - half() * q8) * h - half() * q8 * K(4, h));
  gz[Z][M] = half() * QScalar::q(-4) * hzInv * X(T::Minus, hz);
  gz[M][M] = hInv * norm * (half() * h - half() * K(4, h));
  gz[Z][Z] = half() * hzInv * X(T::Z, hz);
  gz[P][Z] = -(half() * q2) * hInv * K(2, X(T::Minus, hz));
  gz[M][Z] = -(half() * QScalar::q(-4)) * hInv * K(2, X(T::Plus, hz));
  return c;
}

bool isIdempotent(const AlgMatrix& p) { return matmul(p, p) == p; }

InducedConnection::InducedConnection(AlgMatrix p, Connection base)
    : p_(std::move(p)), base_(std::move(base)) {
  requireSquare(p_, base_.rank, "projector");
  if (!isIdempotent(p_)) throw PreconditionError("projector is not idempotent");
}

ModuleVec InducedConnection::apply(Tangent a, const ModuleVec& m) const {
  return applyMatrix(p_, nablaApply(base_, a, m));
}

std::vector<AlgebraElement> defaultProbes() {
  std::vector<AlgebraElement> out{AlgebraElement(1L)};
  const std::vector<AlgebraElement> gens{AlgebraElement::a(), AlgebraElement::aStar(),
                                         AlgebraElement::c(), AlgebraElement::cStar()};
  for (const auto& g : gens) out.push_back(g);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) out.push_back(gens[i] * gens[j]);
  }
  return out;
}

OrthogonalCompatResult checkOrthogonalCompat(const AlgMatrix& p, const Connection& conn,
                                             const HermitianForm& h,
                                             const std::vector<AlgebraElement>& probes) {
  const std::size_t n = h.rank();
  if (conn.rank != n || p.size() != n) throw RankMismatch("checkOrthogonalCompat: rank mismatch");
  OrthogonalCompatResult out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ModuleVec ei = ModuleVec::basis(n, i);
      const ModuleVec ej = ModuleVec::basis(n, j);
      if (hEval(h, applyMatrix(p, ei), ej) != hEval(h, ei, applyMatrix(p, ej))) {
        out.selfAdjoint = false;
        out.failures.push_back("h(p e" + std::to_string(i) + ", e" + std::to_string(j) +
                               ") != h(e" + std::to_string(i) + ", p e" + std::to_string(j) + ")");
      }
    }
  }
  if (!out.selfAdjoint) return out;
  const InducedConnection induced(p, conn);
  const NablaFn nabla = [&induced](Tangent a, const ModuleVec& m) { return induced.apply(a, m); };
  std::vector<ModuleVec> vectors;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : probes) vectors.push_back(applyMatrix(p, ModuleVec::basis(n, i, g)));
  }
  for (std::size_t x = 0; x < vectors.size(); ++x) {
    for (std::size_t y = 0; y < vectors.size(); ++y) {
      CompatResult r = compatResiduals(nabla, conn.side, h, vectors[x], vectors[y]);
      if (!r.ok) {
        out.compatible = false;
        for (Tangent a : kTangents) {
          if (!r.residual[index(a)].isZero()) {
            out.failures.push_back("compat " + name(a) + " on (" + vectors[x].toString() + ", " +
                                   vectors[y].toString() + "): " + r.residual[index(a)].toString());
          }
        }
        return out;
      }
    }
  }
  return out;
}

ModuleVec connDifference(const Connection& c1, const Connection& c2, Tangent a, const ModuleVec& m) {
  if (c1.rank != c2.rank || c1.side != c2.side) throw RankMismatch("connDifference: incompatible connections");
  return nablaApply(c1, a, m) - nablaApply(c2, a, m);
}

}  // namespace qaffine
