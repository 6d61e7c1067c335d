#include "qaffine/random.hpp"

namespace qaffine {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

QScalar randomScalar(Rng& rng) {
  switch (uniform(rng, 0, 5)) {
    case 0: {
      int v = uniform(rng, -3, 3);
      return QScalar(static_cast<long>(v == 0 ? 1 : v));
    }
    case 1:
      return QScalar::q(uniform(rng, -2, 2));
    case 2:
      return QScalar::s(uniform(rng, -3, 3));
    case 3:
      return QScalar(1L) + QScalar::q(2);
    case 4:
      return QScalar(1L) / (QScalar(1L) + QScalar::q(2));
    default:
      return qint(uniform(rng, 2, 3)) * QScalar(static_cast<long>(uniform(rng, 1, 2)));
  }
}

Monomial randomMonomial(Rng& rng, int maxDegree) {
  const int degree = uniform(rng, 0, maxDegree);
  Monomial m;
  for (int i = 0; i < degree; ++i) {
    switch (uniform(rng, 0, 2)) {
      case 0:
        // keep the a-part one-signed
        if (m.aExp > 0 || (m.aExp == 0 && uniform(rng, 0, 1) == 0)) {
          ++m.aExp;
        } else {
          --m.aExp;
        }
        break;
      case 1:
        ++m.cExp;
        break;
      default:
        ++m.cStarExp;
        break;
    }
  }
  return m;
}

AlgebraElement randomElement(Rng& rng, int maxDegree, int maxTerms) {
  AlgebraElement f;
  const int terms = uniform(rng, 1, maxTerms);
  for (int i = 0; i < terms; ++i) f.addTerm(randomMonomial(rng, maxDegree), randomScalar(rng));
  return f;
}

}  // namespace qaffine
