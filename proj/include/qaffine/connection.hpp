#pragma once

// q-affine connections on free right modules: Christoffel data, hermitian
// forms, metric compatibility, torsion on the module of one-forms, the
// Levi-Civita construction and connections on projective modules.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qaffine/calculus.hpp"

namespace qaffine {

using AlgMatrix = std::vector<std::vector<AlgebraElement>>;

AlgMatrix zeroMatrix(std::size_t n);
AlgMatrix identityMatrix(std::size_t n);
AlgMatrix matmul(const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix operator+(const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix operator-(const AlgMatrix& x, const AlgMatrix& y);
bool isZero(const AlgMatrix& x);
/// Entrywise star of the transpose.
AlgMatrix adjoint(const AlgMatrix& x);

/// Coordinates of m = e_i m^i in a free right module.
struct ModuleVec {
  std::vector<AlgebraElement> coords;

  ModuleVec() = default;
  explicit ModuleVec(std::size_t n) : coords(n) {}
  explicit ModuleVec(std::vector<AlgebraElement> c) : coords(std::move(c)) {}
  static ModuleVec basis(std::size_t n, std::size_t i, const AlgebraElement& f = AlgebraElement(1L));

  std::size_t rank() const { return coords.size(); }
  bool isZero() const;

  ModuleVec& operator+=(const ModuleVec& o);
  ModuleVec& operator-=(const ModuleVec& o);
  friend ModuleVec operator+(ModuleVec x, const ModuleVec& y) { return x += y; }
  friend ModuleVec operator-(ModuleVec x, const ModuleVec& y) { return x -= y; }
  friend ModuleVec operator*(const QScalar& k, const ModuleVec& m);
  /// Right module action m * f.
  friend ModuleVec operator*(const ModuleVec& m, const AlgebraElement& f);
  friend bool operator==(const ModuleVec&, const ModuleVec&) = default;

  std::string toString() const;
};

/// p(m) for a matrix acting on coordinate columns.
ModuleVec applyMatrix(const AlgMatrix& p, const ModuleVec& m);

/// h with a caller-supplied inverse; symmetry and inverse are checked.
class HermitianForm {
 public:
  HermitianForm(AlgMatrix h, AlgMatrix hInv);
  static HermitianForm identity(std::size_t n);
  static HermitianForm diagonal(const std::vector<QScalar>& entries);

  std::size_t rank() const { return h_.size(); }
  const AlgMatrix& h() const { return h_; }
  const AlgMatrix& hInv() const { return hInv_; }
  const AlgebraElement& operator()(std::size_t i, std::size_t j) const { return h_[i][j]; }

 private:
  AlgMatrix h_;
  AlgMatrix hInv_;
};

/// h = U* D U with hInv = Uinv D^-1 Uinv*, for a scalar diagonal D.
HermitianForm congruentMetric(const std::vector<QScalar>& d, const AlgMatrix& u, const AlgMatrix& uInv);

/// h(m1, m2) = (m1^i)* h_ij m2^j.
AlgebraElement hEval(const HermitianForm& h, const ModuleVec& m1, const ModuleVec& m2);

/// Christoffel symbols: gamma[a][j][i] = Gamma^j_{a i}, so that
/// nabla_a e_i = e_j Gamma^j_{a i}. The side selects whether tangent vectors
/// act from the left (X |> f) or from the right (f <| Y).
struct Connection {
  std::size_t rank = 0;
  Side side = Side::Left;
  std::array<AlgMatrix, 3> gamma;

  static Connection zero(std::size_t n, Side side = Side::Left);
  AlgMatrix& operator[](Tangent t) { return gamma[index(t)]; }
  const AlgMatrix& operator[](Tangent t) const { return gamma[index(t)]; }
  friend bool operator==(const Connection&, const Connection&) = default;
};

/// nabla_a(e_i m^i) = e_j Gamma^j_{a i} sigma_a(m^i) + e_i X_a(m^i).
ModuleVec nablaApply(const Connection& conn, Tangent a, const ModuleVec& m);

/// The three compatibility residuals, indexed by tangent direction.
struct CompatResult {
  bool ok = true;
  std::array<AlgebraElement, 3> residual;
};

/// Left: X_a h(m1,m2) - h(m1, nabla_a m2) + K^k h(nabla_{a^dagger} m1, m2)
/// with k = 2 for +, - and k = 4 for z. Right: the same with the actions
/// on the right and prefactors q^2, q^-2, 1 on the last term.
CompatResult checkCompat(const Connection& conn, const HermitianForm& h, const ModuleVec& m1,
                         const ModuleVec& m2);
/// Runs checkCompat on every basis pair (e_i, e_j); residuals are summed
/// into the first failure found.
CompatResult checkCompatBasis(const Connection& conn, const HermitianForm& h);

struct ConnParams {
  AlgMatrix gammaP;
  AlgMatrix rho;

  static ConnParams zero(std::size_t n);
};

/// Left: Gamma_{+,kj} = X_+(h_kj)/2 + K(g_kj), Gamma_{-,kj} = X_-(h_kj)/2 + K(g_jk*),
/// Gamma_{z,kj} = X_z(h_kj)/2 + K^2(rho_kj), raised with hInv.
/// Right: Gamma_{+,kj} = h_kj<|Y_+/2 + q^2 g_kj<|K, Gamma_{-,kj} = h_kj<|Y_-/2 + g_jk*<|K,
/// Gamma_{z,kj} = h_kj<|Y_z/2 + rho_kj<|K^2.
Connection christoffelFromForm(const HermitianForm& h, const ConnParams& p, Side side = Side::Left);

/// Torsion residuals on the one-forms (basis order w+, w-, wz):
///   nabla_- w+ - q^2 nabla_+ w- - wz,
///   q^2 nabla_z w- - q^-2 nabla_- wz - (1+q^2) w-,
///   q^2 nabla_+ wz - q^-2 nabla_z w+ - (1+q^2) w+.
struct TorsionResult {
  bool ok = true;
  std::array<OneForm, 3> residual;
};
TorsionResult checkTorsionFree(const Connection& conn);

/// X_z(h++ - q^2 h--) - [K^2 X_-(hz+) - q^2 X_-(h-z) - q^2 K^2 X_+(hz-) + X_+(h+z)].
AlgebraElement lcConditionResidual(const HermitianForm& h);
bool lcCondition(const HermitianForm& h);

/// Free data of the Levi-Civita solution. rhoMM and rhoZZ must be hermitian;
/// rho_{-+} is taken as rhoPM*.
struct LcFreeParams {
  AlgebraElement gammaPM;
  AlgebraElement gammaMP;
  AlgebraElement gammaZZ;
  AlgebraElement rhoPM;
  AlgebraElement rhoMM;
  AlgebraElement rhoZZ;
};

/// Parameters (gamma, rho) solving torsion freeness for h; throws
/// PreconditionError if the existence condition fails.
ConnParams lcParams(const HermitianForm& h, const LcFreeParams& free = {});
Connection lcSolve(const HermitianForm& h, const LcFreeParams& free = {});

/// The explicit Levi-Civita connection for h-- = h, h++ = q^2 h, hzz = hz
/// with all free parameters zero.
Connection diagonalLC(const AlgebraElement& h, const AlgebraElement& hInv, const AlgebraElement& hz,
                      const AlgebraElement& hzInv);
HermitianForm diagonalMetric(const AlgebraElement& h, const AlgebraElement& hInv,
                             const AlgebraElement& hz, const AlgebraElement& hzInv);

bool isIdempotent(const AlgMatrix& p);

/// p o nabla on the image of an idempotent p.
class InducedConnection {
 public:
  InducedConnection(AlgMatrix p, Connection base);
  const AlgMatrix& projector() const { return p_; }
  const Connection& base() const { return base_; }
  ModuleVec apply(Tangent a, const ModuleVec& m) const;

 private:
  AlgMatrix p_;
  Connection base_;
};

/// nabla_a(m f) - nabla_a(m) sigma_a(f) - m X_a(f) for an arbitrary
/// operator nabla_a given as a callback.
template <class Nabla>
ModuleVec leibnizResidual(const Nabla& nabla, Side side, Tangent a, const ModuleVec& m,
                          const AlgebraElement& f) {
  ModuleVec lhs = nabla(a, m * f);
  ModuleVec rhs = nabla(a, m) * sigma(a, f, side);
  for (std::size_t i = 0; i < m.rank(); ++i) rhs.coords[i] += m.coords[i] * X(a, f, side);
  return lhs - rhs;
}

struct OrthogonalCompatResult {
  bool selfAdjoint = true;
  bool compatible = true;
  std::vector<std::string> failures;
  bool ok() const { return selfAdjoint && compatible; }
};

/// Checks h(p m1, m2) = h(m1, p m2) on basis vectors, then the compatibility
/// residuals of p o nabla on the test vectors p(e_i g) for g in probes.
OrthogonalCompatResult checkOrthogonalCompat(const AlgMatrix& p, const Connection& conn,
                                             const HermitianForm& h,
                                             const std::vector<AlgebraElement>& probes);
/// Default probes: 1, the generators and the degree-two monomials.
std::vector<AlgebraElement> defaultProbes();

/// alpha(X_a, m) = nabla1_a m - nabla2_a m.
ModuleVec connDifference(const Connection& c1, const Connection& c2, Tangent a, const ModuleVec& m);

}  // namespace qaffine
