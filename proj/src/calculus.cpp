#include "qaffine/calculus.hpp"

namespace qaffine {

OneForm OneForm::basis(Tangent t) {
  OneForm w;
  w[t] = AlgebraElement(1L);
  return w;
}

OneForm OneForm::fromLeft(const std::array<AlgebraElement, 3>& left) {
  OneForm w;
  for (Tangent t : kTangents) w[t] = sigma(t, left[index(t)], Side::Left, -1);
  return w;
}

std::array<AlgebraElement, 3> OneForm::left() const {
  std::array<AlgebraElement, 3> out;
  for (Tangent t : kTangents) out[index(t)] = sigma(t, (*this)[t]);
  return out;
}

bool OneForm::isZero() const {
  return coeff_[0].isZero() && coeff_[1].isZero() && coeff_[2].isZero();
}

OneForm OneForm::operator-() const { return OneForm(-coeff_[0], -coeff_[1], -coeff_[2]); }

OneForm& OneForm::operator+=(const OneForm& o) {
  for (int i = 0; i < 3; ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  for (int i = 0; i < 3; ++i) coeff_[i] -= o.coeff_[i];
  return *this;
}

OneForm operator*(const QScalar& k, const OneForm& w) {
  return OneForm(k * w.coeff_[0], k * w.coeff_[1], k * w.coeff_[2]);
}

OneForm operator*(const OneForm& w, const AlgebraElement& g) {
  return OneForm(w.coeff_[0] * g, w.coeff_[1] * g, w.coeff_[2] * g);
}

std::string OneForm::toString() const {
  static const char* names[] = {"w+", "w-", "wz"};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (coeff_[i].isZero()) continue;
    if (!out.empty()) out += " + ";
    out += std::string(names[i]) + " * (" + coeff_[i].toString() + ")";
  }
  return out.empty() ? "0" : out;
}

OneForm smulL(const AlgebraElement& f, const OneForm& w) {
  OneForm r;
  for (Tangent t : kTangents) {
    if (!w[t].isZero()) r[t] = sigma(t, f, Side::Left, -1) * w[t];
  }
  return r;
}

OneForm d(const AlgebraElement& f) {
  OneForm r;
  for (Tangent t : kTangents) r[t] = sigma(t, X(t, f), Side::Left, -1);
  return r;
}

OneForm dagger(const OneForm& w) {
  OneForm r;
  for (Tangent t : kTangents) {
    r[daggerOf(t)] = -sigma(t, star(w[t]), Side::Left, -1);
  }
  return r;
}

}  // namespace qaffine
