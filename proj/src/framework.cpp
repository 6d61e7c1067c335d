#include "qaffine/framework.hpp"

#include "qaffine/errors.hpp"

namespace qaffine {

namespace {

GenericResult finish(std::vector<AlgebraElement> residual) {
  GenericResult r;
  r.residual = std::move(residual);
  for (const auto& e : r.residual) {
    if (!e.isZero()) r.ok = false;
  }
  return r;
}

}  // namespace

QuantumTangentSpace::QuantumTangentSpace(std::string name, std::size_t dim, Action x, Twist sigma,
                                         std::vector<std::size_t> dagger)
    : name_(std::move(name)), dim_(dim), x_(std::move(x)), sigma_(std::move(sigma)), dagger_(std::move(dagger)) {
  if (dagger_.size() != dim_) throw PreconditionError("dagger map has the wrong length");
  for (std::size_t a = 0; a < dim_; ++a) {
    if (dagger_[a] >= dim_ || dagger_[dagger_[a]] != a) throw PreconditionError("dagger map is not an involution");
  }
}

const QuantumTangentSpace& instanceS3q() {
  static const QuantumTangentSpace t(
      "S3q", 3, [](std::size_t a, const AlgebraElement& f) { return X(kTangents[a], f); },
      [](std::size_t b, std::size_t a, const AlgebraElement& f) {
        if (a != b) return AlgebraElement();
        return sigma(kTangents[a], f);
      },
      {1, 0, 2});
  return t;
}

GenericResult checkXacts(const QuantumTangentSpace& t, const AlgebraElement& f, const AlgebraElement& g) {
  std::vector<AlgebraElement> res;
  for (std::size_t a = 0; a < t.dim(); ++a) {
    AlgebraElement r = t.X(a, f * g) - f * t.X(a, g);
    for (std::size_t b = 0; b < t.dim(); ++b) {
      const AlgebraElement s = t.sigma(b, a, g);
      if (!s.isZero()) r -= t.X(b, f) * s;
    }
    res.push_back(std::move(r));
  }
  return finish(std::move(res));
}

GenericResult checkXactsStar(const QuantumTangentSpace& t, const AlgebraElement& f) {
  std::vector<AlgebraElement> res;
  const AlgebraElement fs = star(f);
  for (std::size_t a = 0; a < t.dim(); ++a) {
    AlgebraElement r = t.X(a, fs);
    for (std::size_t b = 0; b < t.dim(); ++b) r += t.sigma(b, a, star(t.X(t.dagger(b), f)));
    res.push_back(std::move(r));
  }
  return finish(std::move(res));
}

GenericNabla actionNabla(const QuantumTangentSpace& t) {
  return [&t](std::size_t a, const AlgebraElement& m) { return t.X(a, m); };
}

GenericNabla connectionNabla(const QuantumTangentSpace& t, const Connection& conn) {
  if (conn.rank != 1 || conn.side != Side::Left) throw PreconditionError("expected a rank-1 left connection");
  if (t.dim() != 3) throw PreconditionError("expected a three-dimensional tangent space");
  return [&t, conn](std::size_t a, const AlgebraElement& m) {
    return conn.gamma[a][0][0] * t.sigma(a, a, m) + t.X(a, m);
  };
}

GenericResult genericCompatCheck(const QuantumTangentSpace& t, const GenericNabla& nabla,
                                 const AlgebraElement& m1, const AlgebraElement& m2) {
  std::vector<AlgebraElement> res;
  const AlgebraElement m1s = star(m1);
  for (std::size_t a = 0; a < t.dim(); ++a) {
    AlgebraElement r = t.X(a, m1s * m2) - m1s * nabla(a, m2);
    for (std::size_t b = 0; b < t.dim(); ++b) r += t.sigma(b, a, star(nabla(t.dagger(b), m1)) * m2);
    res.push_back(std::move(r));
  }
  return finish(std::move(res));
}

}  // namespace qaffine
