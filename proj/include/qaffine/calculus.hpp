#pragma once

// The left-covariant calculus on S^3_q: one-forms over the basis
// (w+, w-, wz), the bimodule structure, d, and the dagger.

#include <array>
#include <string>

#include "qaffine/hopf.hpp"

namespace qaffine {

/// w+ f+ + w- f- + wz fz, stored by its right coordinates.
class OneForm {
 public:
  OneForm() = default;
  OneForm(const AlgebraElement& fPlus, const AlgebraElement& fMinus, const AlgebraElement& fZ)
      : coeff_{fPlus, fMinus, fZ} {}

  /// The basis form w_t.
  static OneForm basis(Tangent t);
  /// Builds sum_t L_t w_t from left coordinates.
  static OneForm fromLeft(const std::array<AlgebraElement, 3>& left);

  const AlgebraElement& operator[](Tangent t) const { return coeff_[index(t)]; }
  AlgebraElement& operator[](Tangent t) { return coeff_[index(t)]; }
  const std::array<AlgebraElement, 3>& right() const { return coeff_; }
  /// Coefficients L_t with w = sum_t L_t w_t.
  std::array<AlgebraElement, 3> left() const;

  bool isZero() const;

  OneForm operator-() const;
  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  friend OneForm operator+(OneForm x, const OneForm& y) { return x += y; }
  friend OneForm operator-(OneForm x, const OneForm& y) { return x -= y; }
  friend OneForm operator*(const QScalar& k, const OneForm& w);
  /// Right multiplication w * g.
  friend OneForm operator*(const OneForm& w, const AlgebraElement& g);
  friend bool operator==(const OneForm&, const OneForm&) = default;

  /// "w+ * (f+) + w- * (f-) + wz * (fz)", zero components omitted.
  std::string toString() const;

 private:
  std::array<AlgebraElement, 3> coeff_;
};

/// f * w, using w_t g = (sigma_t |> g) w_t.
OneForm smulL(const AlgebraElement& f, const OneForm& w);
/// df = sum_t (X_t |> f) w_t.
OneForm d(const AlgebraElement& f);
/// (f w g)^dagger = g* w^dagger f*, with w+^dagger = -w-, wz^dagger = -wz.
OneForm dagger(const OneForm& w);

}  // namespace qaffine
