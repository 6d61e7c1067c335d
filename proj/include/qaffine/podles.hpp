#pragma once

// The Podles sphere as the K-invariant subalgebra of S^3_q: generators,
// right vector fields, the differential, frames, projectors and connections
// on the projective modules M_n.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/calculus.hpp"
#include "qaffine/connection.hpp"

namespace qaffine {

struct SphereGens {
  AlgebraElement b0;  // c c*
  AlgebraElement bp;  // c a*
  AlgebraElement bm;  // a c*
};
const SphereGens& sphereGens();

/// K |> f == f.
bool isInvariant(const AlgebraElement& f);

/// X(m) B0^n with X(m) = B+^m for m >= 0 and B-^-m otherwise.
AlgebraElement sphereBasisWord(int m, int n);

/// f <| Y_a for invariant f. Throws PreconditionError on non-invariant input
/// and Error if the result leaves the sphere.
AlgebraElement Yact(const AlgebraElement& f, Tangent a);

/// The relation between the right vector fields, evaluated literally:
/// lhs = ((f<|Y+) B+ q + (f<|Y-) B- q^-1)(1+q^2) + (f<|Yz)(1 - 2(1+q^2)/(1+q^4) B0),
/// rhs = (f<|Yz^2) q^-2 ((1-q^2)/(1+q^4) (2q^4+q^2+1) B0 - (1-q^6) B0^2)
///     + (f<|K^4) q^-2 (1+q^2)((q^4-1) B0 + (1-q^6) B0^2).
struct RelRvfResult {
  bool ok = false;
  AlgebraElement lhs;
  AlgebraElement rhs;
  AlgebraElement residual;
};
RelRvfResult checkRelRvf(const AlgebraElement& f);
inline RelRvfResult checkRelRvf(int m, int n) { return checkRelRvf(sphereBasisWord(m, n)); }

/// df = (X- |> f) w- + (X+ |> f) w+ for invariant f. Throws Error if the
/// wz component of d(f) does not vanish.
OneForm dSphere(const AlgebraElement& f);

/// Coefficients (of dB+, dB-, dB0) expressing w+ and w-.
struct OmegaFromDB {
  std::array<AlgebraElement, 3> plus;
  std::array<AlgebraElement, 3> minus;
};
OmegaFromDB omegaFromDB();
/// sum_k coeff_k dB_k with dB_k taken from dSphere.
OneForm combineDB(const std::array<AlgebraElement, 3>& coeffs);

/// (f<|V+, f<|V-, f<|V0).
std::array<AlgebraElement, 3> Vops(const AlgebraElement& f);
/// (f<|V+) dB+ + (f<|V-) dB- + (f<|V0) dB0.
OneForm vopsDifferential(const AlgebraElement& f);

/// At q = 1: 2((f<|Y+) B+ + (f<|Y-) B-) + (f<|Yz)(1 - 2 B0) in the
/// commutative limit.
CommutativePoly classicalRelationResidual(const AlgebraElement& f);
bool classicalRelation(const AlgebraElement& f);

/// Degree n with K |> f = q^(-n/2) f, if f is homogeneous.
std::optional<int> lineBundleDegree(const AlgebraElement& f);

enum class FrameKind { Phi, Psi };

QScalar alphaCoeff(int n, int mu);
QScalar betaCoeff(int n, int mu);

/// base * sqrt(radicand); perfect squares are absorbed into the base.
class RadicalScalar {
 public:
  RadicalScalar(QScalar base = QScalar(1L), QScalar radicand = QScalar(1L));
  static RadicalScalar sqrtOf(const QScalar& x) { return RadicalScalar(QScalar(1L), x); }

  const QScalar& base() const { return base_; }
  const QScalar& radicand() const { return radicand_; }
  /// The exact value when the radical has been absorbed.
  std::optional<QScalar> value() const;
  QScalar square() const { return base_ * base_ * radicand_; }

  friend RadicalScalar operator*(const RadicalScalar& x, const RadicalScalar& y);
  friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;
  std::string toString() const;

 private:
  QScalar base_;
  QScalar radicand_;
};

struct FrameEntry {
  RadicalScalar coeff;
  AlgebraElement word;
};

struct Frame {
  int n = 0;
  FrameKind kind = FrameKind::Psi;
  std::vector<FrameEntry> entries;
};

/// (Phi_n)_mu = sqrt(alpha_{n mu}) c^(n-mu) a^mu,
/// (Psi_n)_mu = sqrt(beta_{n mu}) (c*)^mu (a*)^(n-mu).
Frame frame(int n, FrameKind kind);
/// sum_mu entry_mu* entry_mu with the radicals squared out.
AlgebraElement partitionOfUnity(const Frame& f);

/// p_n (n >= 0) from Psi_n and p_-n from Phi_n, stored as
/// p^mu_nu = sqrt(w_mu w_nu) W_mu_nu with scalar weights w and words W.
class Projector {
 public:
  explicit Projector(int n);

  int n() const { return n_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<QScalar>& weights() const { return weights_; }
  const AlgMatrix& words() const { return words_; }
  RadicalScalar coefficient(std::size_t mu, std::size_t nu) const;

  /// Entries as elements when every sqrt(w_mu w_nu) is in Q(s).
  std::optional<AlgMatrix> matrix() const;
  /// W diag(w), similar to p through the scalar matrix diag(sqrt w).
  AlgMatrix conjugated() const;

  bool idempotent() const;
  bool selfAdjoint() const;
  bool entriesInvariant() const;
  /// p^mu_nu <| K = q^(nu - mu) p^mu_nu.
  bool weightRule() const;

  std::string toString() const;

 private:
  int n_;
  std::vector<QScalar> weights_;
  AlgMatrix words_;
};

/// 1, B0, B+, B- and their degree-two products.
std::vector<AlgebraElement> sphereProbes();

/// p o nabla for the right-action connection christoffelFromForm(h, params)
/// on (S^2_q)^(|n|+1). Uses p itself when its entries are rational, and
/// conjugated() otherwise; h must be written in the matching frame.
InducedConnection inducedSphereConnection(int n, const HermitianForm& h, const ConnParams& params);

/// Compares nabla_a e^_mu from the induced connection with the closed form
/// e^_g Gamma^g_{a nu} q^(k(mu-nu)) p^nu_mu + e^_nu (p^nu_mu <| Y_a), k = 2, 2, 4.
bool checkInducedDisplay(const InducedConnection& conn);

}  // namespace qaffine
