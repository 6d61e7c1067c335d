#pragma once

// The quantum 3-sphere S^3_q as a normal-form rewriting engine.
//
// Every element is kept as a Q(s)-linear combination of PBW monomials
//   a^k c^m (c*)^n   (k >= 0)   or   (a*)^k c^m (c*)^n   (k >= 1),
// which form a linear basis. Products are reduced with the commutation
// relations ac = qca, ac* = qc*a, c*a* = qa*c*, ca* = qa*c, cc* = c*c and the
// sphere relations a*a = 1 - c*c, aa* = 1 - q^2 cc*.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaffine/scalar.hpp"

namespace qaffine {

/// PBW monomial. aExp > 0 encodes a^aExp, aExp < 0 encodes (a*)^(-aExp).
struct Monomial {
  int aExp = 0;
  int cExp = 0;
  int cStarExp = 0;

  int degree() const { return (aExp < 0 ? -aExp : aExp) + cExp + cStarExp; }
  bool isOne() const { return aExp == 0 && cExp == 0 && cStarExp == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Exponent of s in K |> m = s^e m (left action of K).
  int leftWeight() const { return -(aExp + cExp - cStarExp); }
  /// Exponent of s in m <| K = s^e m (right action of K).
  int rightWeight() const { return -(aExp - cExp + cStarExp); }

  std::string toString() const;
};

/// Display order: higher total degree first, then by exponents descending.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.degree() != y.degree()) return x.degree() > y.degree();
    if (x.aExp != y.aExp) return x.aExp > y.aExp;
    if (x.cExp != y.cExp) return x.cExp > y.cExp;
    return x.cStarExp > y.cStarExp;
  }
};

/// Upper bound on monomial degree accepted by the kernel (default 24).
int degreeCap();
void setDegreeCap(int cap);

class AlgebraElement {
 public:
  using TermMap = std::map<Monomial, QScalar, MonomialOrder>;

  AlgebraElement() = default;
  AlgebraElement(const QScalar& scalar);  // NOLINT(google-explicit-constructor)
  AlgebraElement(long scalar) : AlgebraElement(QScalar(scalar)) {}  // NOLINT
  AlgebraElement(const Monomial& m, const QScalar& coeff = QScalar(1L));

  static AlgebraElement a();
  static AlgebraElement aStar();
  static AlgebraElement c();
  static AlgebraElement cStar();

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  /// True for elements in Q(s) * 1.
  bool isScalar() const;
  /// Coefficient of the unit monomial.
  QScalar scalarPart() const;
  QScalar coefficient(const Monomial& m) const;
  int maxDegree() const;

  void addTerm(const Monomial& m, const QScalar& coeff);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const QScalar& s);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(AlgebraElement x, const QScalar& s) { return x *= s; }
  friend AlgebraElement operator*(const QScalar& s, AlgebraElement x) { return x *= s; }
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

  /// Applies fn to every coefficient, dropping zeros.
  AlgebraElement mapTerms(const std::function<QScalar(const Monomial&, const QScalar&)>& fn) const;

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

  /// Canonical text, e.g. "(q^2) a^2 c cs^3 + 1".
  std::string toString() const;

 private:
  TermMap terms_;
};

/// Serial reference product.
AlgebraElement mulSerial(const AlgebraElement& f, const AlgebraElement& g);
/// OpenMP product: splits the outer sum across threads and merges the
/// per-thread accumulators. Produces exactly mulSerial's result.
AlgebraElement mulParallel(const AlgebraElement& f, const AlgebraElement& g);

/// Product of two PBW monomials as a normal-form element.
AlgebraElement mulMonomials(const Monomial& x, const Monomial& y);

AlgebraElement pow(const AlgebraElement& f, int e);
AlgebraElement star(const AlgebraElement& f);

/// Product of a list of factors, left to right.
AlgebraElement product(std::initializer_list<AlgebraElement> factors);

/// Image in the commutative ring Q[a, a~, c, c~]/(a~a + c~c - 1) at q = 1.
/// Keys are the same PBW shapes; coefficients are evaluated at s = 1.
using CommutativePoly = std::map<Monomial, Rational, MonomialOrder>;
CommutativePoly classicalLimit(const AlgebraElement& f);
std::string formatClassical(const CommutativePoly& p);

}  // namespace qaffine
