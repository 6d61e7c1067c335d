#pragma once

// A quantum tangent space over a Hopf algebra given by its action on a
// carrier algebra and a twist matrix sigma^b_a, with the generic twisted
// Leibniz, star and compatibility laws.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qaffine/connection.hpp"

namespace qaffine {

class QuantumTangentSpace {
 public:
  using Action = std::function<AlgebraElement(std::size_t a, const AlgebraElement& f)>;
  /// sigma(b, a, f) = sigma^b_a |> f.
  using Twist = std::function<AlgebraElement(std::size_t b, std::size_t a, const AlgebraElement& f)>;

  QuantumTangentSpace(std::string name, std::size_t dim, Action x, Twist sigma,
                      std::vector<std::size_t> dagger);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  AlgebraElement X(std::size_t a, const AlgebraElement& f) const { return x_(a, f); }
  AlgebraElement sigma(std::size_t b, std::size_t a, const AlgebraElement& f) const { return sigma_(b, a, f); }
  std::size_t dagger(std::size_t a) const { return dagger_.at(a); }

 private:
  std::string name_;
  std::size_t dim_;
  Action x_;
  Twist sigma_;
  std::vector<std::size_t> dagger_;
};

/// X_+, X_-, X_z (indices 0, 1, 2) with the diagonal twist K^2, K^2, K^4.
const QuantumTangentSpace& instanceS3q();

struct GenericResult {
  bool ok = true;
  std::vector<AlgebraElement> residual;
};

/// X_a(fg) - f X_a(g) - sum_b X_b(f) sigma^b_a(g), for every a.
GenericResult checkXacts(const QuantumTangentSpace& t, const AlgebraElement& f, const AlgebraElement& g);
/// X_a(f*) + sum_b sigma^b_a((X_{b^dagger} f)*), for every a.
GenericResult checkXactsStar(const QuantumTangentSpace& t, const AlgebraElement& f);

/// nabla_a on the trivial module M = H.
using GenericNabla = std::function<AlgebraElement(std::size_t a, const AlgebraElement& m)>;
GenericNabla actionNabla(const QuantumTangentSpace& t);
/// nabla_a m = Gamma_a sigma^a_a(m) + X_a(m) from a rank-1 left connection.
GenericNabla connectionNabla(const QuantumTangentSpace& t, const Connection& conn);

/// With h(m1, m2) = m1* m2:
/// X_a(h(m1,m2)) - h(m1, nabla_a m2) + sum_b sigma^b_a(h(nabla_{b^dagger} m1, m2)).
GenericResult genericCompatCheck(const QuantumTangentSpace& t, const GenericNabla& nabla,
                                 const AlgebraElement& m1, const AlgebraElement& m2);

}  // namespace qaffine
