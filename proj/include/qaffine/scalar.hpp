#pragma once

// Exact arithmetic in the rational function field Q(s), where s = q^(1/2).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qaffine {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial in s, coefficient i multiplies s^i.
/// Invariant: no trailing (high-order) zero coefficients; the zero
/// polynomial is the empty vector.
using IntPoly = std::vector<Integer>;

namespace poly {

void trim(IntPoly& p);
int degree(const IntPoly& p);  // -1 for the zero polynomial
IntPoly add(const IntPoly& x, const IntPoly& y);
IntPoly sub(const IntPoly& x, const IntPoly& y);
IntPoly mul(const IntPoly& x, const IntPoly& y);
Integer content(const IntPoly& p);
/// Primitive gcd over Z[s]: positive leading coefficient, content 1.
IntPoly gcd(IntPoly x, IntPoly y);
/// Exact quotient x / y; y must divide x in Z[s].
IntPoly divExact(const IntPoly& x, const IntPoly& y);
Rational evaluate(const IntPoly& p, const Rational& at);
/// Integer square root in Z[s] if p is a perfect square with positive
/// leading coefficient.
std::optional<IntPoly> sqrt(const IntPoly& p);

}  // namespace poly

/// An element of Q(s) stored as s^shift * num / den.
///
/// Canonical form: num(0) != 0 and den(0) != 0 (all powers of s live in
/// shift), num and den coprime in Q[s], the combined content of num and den
/// is 1, and den has a positive leading coefficient. Zero is
/// num = {}, den = {1}, shift = 0. Two equal field elements therefore have
/// identical representations, so equality is structural.
class QScalar {
 public:
  QScalar();
  QScalar(long v);  // NOLINT(google-explicit-constructor)
  explicit QScalar(const Integer& v);
  explicit QScalar(const Rational& v);

  /// s^k; q^k is s^(2k).
  static QScalar s(int k);
  static QScalar q(int k);
  /// Builds s^shift * num / den and canonicalizes it.
  static QScalar fraction(IntPoly num, IntPoly den, int shift = 0);

  bool isZero() const { return num_.empty(); }
  bool isOne() const;
  /// True when the denominator is 1 (a Laurent polynomial in s).
  bool isLaurent() const { return den_.size() == 1 && den_[0] == 1; }
  /// True when the value is a rational constant (no s-dependence).
  bool isRationalConstant() const;
  std::optional<Rational> asRational() const;

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  int shift() const { return shift_; }

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  friend QScalar operator+(QScalar x, const QScalar& y) { return x += y; }
  friend QScalar operator-(QScalar x, const QScalar& y) { return x -= y; }
  friend QScalar operator*(QScalar x, const QScalar& y) { return x *= y; }
  friend QScalar operator/(QScalar x, const QScalar& y) { return x /= y; }

  /// Multiplication by s^k without any gcd work.
  QScalar mulSPow(int k) const;
  QScalar inv() const;
  QScalar pow(int e) const;

  /// Exact value at s = s0. Throws PoleError if the denominator vanishes.
  Rational eval(const Rational& s0) const;

  /// Square root in Q(s) when one exists (sign fixed by a positive leading
  /// coefficient of the root's numerator).
  std::optional<QScalar> sqrt() const;

  friend bool operator==(const QScalar& x, const QScalar& y) {
    return x.shift_ == y.shift_ && x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const QScalar& x, const QScalar& y) { return !(x == y); }

  std::size_t hash() const;

  /// Reduced fraction in q and s, e.g. "(q^2 + 1)/q" or "s^3 - 2".
  std::string toString() const;
  /// True if toString() is a single factor that needs no parentheses
  /// when juxtaposed with other factors.
  bool printsAsAtom() const;

 private:
  void canonicalize();

  IntPoly num_;
  IntPoly den_;
  int shift_ = 0;
};

/// The q-integer [n] = (q^n - q^-n)/(q - q^-1).
QScalar qint(int n);

}  // namespace qaffine
