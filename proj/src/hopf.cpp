#include "qaffine/hopf.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace qaffine {

namespace {

enum class Letter { A, AStar, C, CStar };

const Monomial& letterMonomial(Letter l) {
  static const Monomial table[] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return table[static_cast<int>(l)];
}

// Generator images. Left: E|>a = -q c*, E|>c = a*, F|>a* = c, F|>c* = -q^-1 a.
// Right: c<|E = a, a*<|E = -q c*, a<|F = c, c*<|F = -q^-1 a*.
AlgebraElement generatorImage(Side side, HopfGen h, Letter l) {
  const Monomial a{1, 0, 0};
  const Monomial as{-1, 0, 0};
  const Monomial c{0, 1, 0};
  const Monomial cs{0, 0, 1};
  if (side == Side::Left) {
    if (h == HopfGen::E) {
      if (l == Letter::A) return AlgebraElement(cs, QScalar::q(1) * QScalar(-1L));
      if (l == Letter::C) return AlgebraElement(as);
      return {};
    }
    if (l == Letter::AStar) return AlgebraElement(c);
    if (l == Letter::CStar) return AlgebraElement(a, QScalar::q(-1) * QScalar(-1L));
    return {};
  }
  if (h == HopfGen::E) {
    if (l == Letter::C) return AlgebraElement(a);
    if (l == Letter::AStar) return AlgebraElement(cs, QScalar::q(1) * QScalar(-1L));
    return {};
  }
  if (l == Letter::A) return AlgebraElement(c);
  if (l == Letter::CStar) return AlgebraElement(as, QScalar::q(-1) * QScalar(-1L));
  return {};
}

int weight(Side side, const Monomial& m) {
  return side == Side::Left ? m.leftWeight() : m.rightWeight();
}

// Splits a PBW monomial into its first letter and the remaining PBW monomial.
std::pair<Letter, Monomial> peel(const Monomial& m) {
  Monomial rest = m;
  if (m.aExp > 0) {
    --rest.aExp;
    return {Letter::A, rest};
  }
  if (m.aExp < 0) {
    ++rest.aExp;
    return {Letter::AStar, rest};
  }
  if (m.cExp > 0) {
    --rest.cExp;
    return {Letter::C, rest};
  }
  --rest.cStarExp;
  return {Letter::CStar, rest};
}

class ActionCache {
 public:
  std::optional<AlgebraElement> find(Side side, HopfGen h, const Monomial& m) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& table = tables_[slot(side, h)];
    auto it = table.find(m);
    if (it == table.end()) return std::nullopt;
    return it->second;
  }
  void store(Side side, HopfGen h, const Monomial& m, const AlgebraElement& v) {
    std::lock_guard<std::mutex> lock(mu_);
    tables_[slot(side, h)].emplace(m, v);
  }
  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    for (auto& t : tables_) t.clear();
  }

 private:
  static int slot(Side side, HopfGen h) {
    return (side == Side::Left ? 0 : 2) + (h == HopfGen::E ? 0 : 1);
  }
  std::mutex mu_;
  std::map<Monomial, AlgebraElement, MonomialOrder> tables_[4];
};

ActionCache& cache() {
  static ActionCache instance;
  return instance;
}

// E or F on one monomial via the coproduct E -> E(x)K + K^-1(x)E (same for F):
//   h|>(g rest) = (h|>g)(K|>rest) + (K^-1|>g)(h|>rest)
//   (g rest)<|h = (g<|h)(rest<|K) + (g<|K^-1)(rest<|h)
AlgebraElement raiseLower(Side side, HopfGen h, const Monomial& m) {
  if (m.isOne()) return {};
  if (auto hit = cache().find(side, h, m)) return *hit;
  const auto [letter, rest] = peel(m);
  const Monomial& g = letterMonomial(letter);
  AlgebraElement result =
      generatorImage(side, h, letter) * AlgebraElement(rest, QScalar::s(weight(side, rest)));
  if (!rest.isOne()) {
    AlgebraElement tail = raiseLower(side, h, rest);
    if (!tail.isZero()) result += AlgebraElement(g, QScalar::s(-weight(side, g))) * tail;
  }
  cache().store(side, h, m, result);
  return result;
}

AlgebraElement raiseLower(Side side, HopfGen h, const AlgebraElement& f) {
  AlgebraElement r;
  for (const auto& [m, c] : f.terms()) {
    AlgebraElement img = raiseLower(side, h, m);
    if (!img.isZero()) r += c * img;
  }
  return r;
}

}  // namespace

Tangent daggerOf(Tangent t) {
  if (t == Tangent::Plus) return Tangent::Minus;
  if (t == Tangent::Minus) return Tangent::Plus;
  return Tangent::Z;
}

std::string name(Tangent t) {
  if (t == Tangent::Plus) return "+";
  if (t == Tangent::Minus) return "-";
  return "z";
}

AlgebraElement kPow(Side side, int j, const AlgebraElement& f) {
  if (j == 0) return f;
  return f.mapTerms([&](const Monomial& m, const QScalar& c) {
    return c.mulSPow(j * weight(side, m));
  });
}

AlgebraElement act(Side side, HopfGen h, const AlgebraElement& f) {
  switch (h) {
    case HopfGen::K:
      return kPow(side, 1, f);
    case HopfGen::Kinv:
      return kPow(side, -1, f);
    default:
      return raiseLower(side, h, f);
  }
}

AlgebraElement actL(HopfGen h, const AlgebraElement& f) { return act(Side::Left, h, f); }

AlgebraElement actL(const std::vector<HopfGen>& word, const AlgebraElement& f) {
  AlgebraElement r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = act(Side::Left, *it, r);
  return r;
}

AlgebraElement actR(const AlgebraElement& f, HopfGen h) { return act(Side::Right, h, f); }

AlgebraElement actR(const AlgebraElement& f, const std::vector<HopfGen>& word) {
  AlgebraElement r = f;
  for (HopfGen h : word) r = act(Side::Right, h, r);
  return r;
}

AlgebraElement X(Tangent t, const AlgebraElement& f, Side side) {
  switch (t) {
    case Tangent::Plus:
      // X_+ = s E K
      if (side == Side::Right) return QScalar::s(1) * kPow(side, 1, act(side, HopfGen::E, f));
      return QScalar::s(1) * act(side, HopfGen::E, kPow(side, 1, f));
    case Tangent::Minus:
      // X_- = s^-1 F K
      if (side == Side::Right) return QScalar::s(-1) * kPow(side, 1, act(side, HopfGen::F, f));
      return QScalar::s(-1) * act(side, HopfGen::F, kPow(side, 1, f));
    case Tangent::Z: {
      // X_z = (1 - K^4)/(1 - q^-2), diagonal on weight vectors
      const QScalar norm = (QScalar(1L) - QScalar::q(-2)).inv();
      return f.mapTerms([&](const Monomial& m, const QScalar& c) {
        const int w = weight(side, m);
        if (w == 0) return QScalar();
        return c * (QScalar(1L) - QScalar::s(4 * w)) * norm;
      });
    }
  }
  return {};
}

AlgebraElement sigma(Tangent t, const AlgebraElement& f, Side side, int power) {
  return kPow(side, twistPower(t) * power, f);
}

void clearActionCache() { cache().clear(); }

}  // namespace qaffine
