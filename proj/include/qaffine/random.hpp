#pragma once

// Seeded generators of test inputs for property checks.

#include <cstdint>
#include <random>

#include "qaffine/algebra.hpp"

namespace qaffine {

using Rng = std::mt19937_64;

QScalar randomScalar(Rng& rng);
Monomial randomMonomial(Rng& rng, int maxDegree);
/// Up to maxTerms terms, each of total degree <= maxDegree.
AlgebraElement randomElement(Rng& rng, int maxDegree, int maxTerms = 3);

}  // namespace qaffine
