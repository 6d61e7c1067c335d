#include "qaffine/algebra.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qaffine/errors.hpp"

namespace qaffine {

namespace {

std::atomic<int> gDegreeCap{24};

// Coefficients of (cc*)^t in a^k (a*)^l (kind 0) or (a*)^k a^l (kind 1),
// after the a-part a^(k-l) has been pulled to the left.
//   a^k (a*)^l = a^(k-l) prod_{i<min} (1 - q^(2(l-i)) cc*)
//   (a*)^k a^l = (a*)^(k-l) prod_{i<min} (1 - q^(-2(l-1-i)) cc*)
const std::vector<QScalar>& sphereTable(int kind, int k, int l) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<QScalar>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(kind, k, l);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<QScalar> coeffs{QScalar(1L)};
  const int steps = std::min(k, l);
  for (int i = 0; i < steps; ++i) {
    const int qExp = kind == 0 ? 2 * (l - i) : -2 * (l - 1 - i);
    // multiply by (1 - q^qExp x)
    std::vector<QScalar> next(coeffs.size() + 1);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      next[t] += coeffs[t];
      next[t + 1] -= coeffs[t].mulSPow(2 * qExp);
    }
    coeffs = std::move(next);
  }
  return cache.emplace(key, std::move(coeffs)).first->second;
}

template <class Sink>
void expandProduct(const Monomial& x, const Monomial& y, Sink&& sink) {
  // Move c^m (c*)^n of x across the a-part of y.
  const int crossExp = -2 * y.aExp * (x.cExp + x.cStarExp);
  const int cSum = x.cExp + y.cExp;
  const int csSum = x.cStarExp + y.cStarExp;
  const int cap = gDegreeCap.load(std::memory_order_relaxed);
  auto emit = [&](const Monomial& m, const QScalar& c) {
    if (m.degree() > cap) throw DegreeCapExceeded(m.degree(), cap);
    sink(m, c);
  };
  if ((x.aExp >= 0 && y.aExp >= 0) || (x.aExp <= 0 && y.aExp <= 0)) {
    emit(Monomial{x.aExp + y.aExp, cSum, csSum}, QScalar::s(crossExp));
    return;
  }
  const int kind = x.aExp > 0 ? 0 : 1;
  const int k = std::abs(x.aExp);
  const int l = std::abs(y.aExp);
  const int aPart = kind == 0 ? k - l : l - k;
  const auto& table = sphereTable(kind, k, l);
  for (std::size_t t = 0; t < table.size(); ++t) {
    if (table[t].isZero()) continue;
    const int ti = static_cast<int>(t);
    emit(Monomial{aPart, cSum + ti, csSum + ti}, table[t].mulSPow(crossExp));
  }
}

void accumulate(AlgebraElement::TermMap& acc, const Monomial& m, const QScalar& c) {
  if (c.isZero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) acc.erase(it);
  }
}

std::string exponentPart(const char* name, int e) {
  if (e == 0) return "";
  std::string r = name;
  if (e != 1) r += "^" + std::to_string(e);
  return r;
}

}  // namespace

int degreeCap() { return gDegreeCap.load(); }
void setDegreeCap(int cap) { gDegreeCap.store(cap); }

std::string Monomial::toString() const {
  std::vector<std::string> parts;
  if (aExp > 0) parts.push_back(exponentPart("a", aExp));
  if (aExp < 0) parts.push_back(exponentPart("as", -aExp));
  if (cExp > 0) parts.push_back(exponentPart("c", cExp));
  if (cStarExp > 0) parts.push_back(exponentPart("cs", cStarExp));
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
  return out;
}

AlgebraElement::AlgebraElement(const QScalar& scalar) {
  if (!scalar.isZero()) terms_.emplace(Monomial{}, scalar);
}

AlgebraElement::AlgebraElement(const Monomial& m, const QScalar& coeff) {
  if (m.degree() > degreeCap()) throw DegreeCapExceeded(m.degree(), degreeCap());
  if (!coeff.isZero()) terms_.emplace(m, coeff);
}

AlgebraElement AlgebraElement::a() { return AlgebraElement(Monomial{1, 0, 0}); }
AlgebraElement AlgebraElement::aStar() { return AlgebraElement(Monomial{-1, 0, 0}); }
AlgebraElement AlgebraElement::c() { return AlgebraElement(Monomial{0, 1, 0}); }
AlgebraElement AlgebraElement::cStar() { return AlgebraElement(Monomial{0, 0, 1}); }

bool AlgebraElement::isScalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isOne());
}

QScalar AlgebraElement::scalarPart() const { return coefficient(Monomial{}); }

QScalar AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QScalar() : it->second;
}

int AlgebraElement::maxDegree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void AlgebraElement::addTerm(const Monomial& m, const QScalar& coeff) {
  if (m.degree() > degreeCap()) throw DegreeCapExceeded(m.degree(), degreeCap());
  accumulate(terms_, m, coeff);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const QScalar& s) {
  if (s.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

AlgebraElement AlgebraElement::mapTerms(
    const std::function<QScalar(const Monomial&, const QScalar&)>& fn) const {
  AlgebraElement r;
  for (const auto& [m, c] : terms_) {
    QScalar v = fn(m, c);
    if (!v.isZero()) r.terms_.emplace_hint(r.terms_.end(), m, std::move(v));
  }
  return r;
}

AlgebraElement mulMonomials(const Monomial& x, const Monomial& y) {
  AlgebraElement r;
  expandProduct(x, y, [&r](const Monomial& m, const QScalar& c) { r.addTerm(m, c); });
  return r;
}

AlgebraElement mulSerial(const AlgebraElement& f, const AlgebraElement& g) {
  AlgebraElement::TermMap acc;
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) {
      const QScalar c12 = c1 * c2;
      expandProduct(m1, m2, [&](const Monomial& m, const QScalar& c) {
        accumulate(acc, m, c12 * c);
      });
    }
  }
  AlgebraElement r;
  for (auto& [m, c] : acc) r.addTerm(m, c);
  return r;
}

AlgebraElement mulParallel(const AlgebraElement& f, const AlgebraElement& g) {
  using Term = std::pair<const Monomial, QScalar>;
  std::vector<const Term*> outer;
  outer.reserve(f.size());
  for (const auto& t : f.terms()) outer.push_back(&t);
  const int threads = std::max(1, omp_get_max_threads());
  std::vector<AlgebraElement::TermMap> partial(static_cast<std::size_t>(threads));
  std::exception_ptr failure;
  std::mutex failureMu;
  const long n = static_cast<long>(outer.size());

#pragma omp parallel num_threads(threads)
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        const auto& [m1, c1] = *outer[static_cast<std::size_t>(i)];
        for (const auto& [m2, c2] : g.terms()) {
          const QScalar c12 = c1 * c2;
          expandProduct(m1, m2, [&](const Monomial& m, const QScalar& c) {
            accumulate(acc, m, c12 * c);
          });
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failureMu);
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  AlgebraElement r;
  for (auto& part : partial) {
    for (auto& [m, c] : part) r.addTerm(m, c);
  }
  return r;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  constexpr std::size_t kParallelThreshold = 256;
  if (x.size() * y.size() >= kParallelThreshold && omp_get_max_threads() > 1) {
    return mulParallel(x, y);
  }
  return mulSerial(x, y);
}

AlgebraElement pow(const AlgebraElement& f, int e) {
  if (e < 0) throw PreconditionError("negative power of an algebra element");
  AlgebraElement r(1L);
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

AlgebraElement product(std::initializer_list<AlgebraElement> factors) {
  AlgebraElement r(1L);
  for (const auto& f : factors) r = r * f;
  return r;
}

AlgebraElement star(const AlgebraElement& f) {
  // (A c^m (c*)^n)* = c^n (c*)^m A* = q^(A(m+n)) A* c^n (c*)^m  (A signed)
  AlgebraElement r;
  for (const auto& [m, c] : f.terms()) {
    const Monomial img{-m.aExp, m.cStarExp, m.cExp};
    r.addTerm(img, c.mulSPow(2 * m.aExp * (m.cExp + m.cStarExp)));
  }
  return r;
}

CommutativePoly classicalLimit(const AlgebraElement& f) {
  CommutativePoly r;
  for (const auto& [m, c] : f.terms()) {
    Rational v = c.eval(Rational(1));
    if (v != 0) r.emplace(m, v);
  }
  return r;
}

std::string formatClassical(const CommutativePoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    if (!first) os << " + ";
    first = false;
    if (m.isOne()) {
      os << c.get_str();
    } else if (c == 1) {
      os << m.toString();
    } else {
      os << "(" << c.get_str() << ") " << m.toString();
    }
  }
  return os.str();
}

std::string AlgebraElement::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  const QScalar minusOne(-1L);
  for (const auto& [m, c] : terms_) {
    std::string term;
    bool negative = false;
    if (c == minusOne) {
      negative = true;
      term = m.toString();
    } else if (c.isOne()) {
      term = m.toString();
    } else if (m.isOne()) {
      term = c.toString();
      if (term[0] == '-') {
        negative = true;
        term = (-c).toString();
      }
      if (terms_.size() > 1 && term.find(' ') != std::string::npos) term = "(" + term + ")";
    } else {
      term = "(" + c.toString() + ") " + m.toString();
    }
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

}  // namespace qaffine
