#include "qaffine/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <utility>

#include "qaffine/errors.hpp"

namespace qaffine {
namespace poly {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly add(const IntPoly& x, const IntPoly& y) {
  IntPoly r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  trim(r);
  return r;
}

IntPoly sub(const IntPoly& x, const IntPoly& y) {
  IntPoly r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& x, const IntPoly& y) {
  if (x.empty() || y.empty()) return {};
  IntPoly r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  trim(r);
  return r;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

IntPoly primitivePart(IntPoly p) {
  trim(p);
  if (p.empty()) return p;
  Integer c = content(p);
  if (p.back() < 0) c = -c;
  if (c != 1) {
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

// lc(y)^k * x mod y, computed one leading term at a time.
IntPoly pseudoRemainder(IntPoly x, const IntPoly& y) {
  const int dy = degree(y);
  const Integer& ly = y.back();
  while (degree(x) >= dy) {
    const int off = degree(x) - dy;
    const Integer lx = x.back();
    for (auto& v : x) v *= ly;
    for (int i = 0; i <= dy; ++i) x[i + off] -= lx * y[i];
    trim(x);
  }
  return x;
}

}  // namespace

IntPoly gcd(IntPoly x, IntPoly y) {
  x = primitivePart(std::move(x));
  y = primitivePart(std::move(y));
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    if (degree(y) == 0) return IntPoly{1};
    IntPoly r = pseudoRemainder(x, y);
    x = std::move(y);
    y = primitivePart(std::move(r));
  }
  return x;
}

IntPoly divExact(const IntPoly& x, const IntPoly& y) {
  if (y.empty()) throw DivisionByZero();
  if (x.empty()) return {};
  IntPoly r = x;
  const int dy = degree(y);
  IntPoly quot(std::max(0, degree(x) - dy + 1));
  while (degree(r) >= dy) {
    const int off = degree(r) - dy;
    Integer c;
    if (!mpz_divisible_p(r.back().get_mpz_t(), y.back().get_mpz_t())) {
      throw Error("inexact polynomial division");
    }
    mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), y.back().get_mpz_t());
    quot[off] = c;
    for (int i = 0; i <= dy; ++i) r[i + off] -= c * y[i];
    trim(r);
  }
  if (!r.empty()) throw Error("inexact polynomial division");
  trim(quot);
  return quot;
}

Rational evaluate(const IntPoly& p, const Rational& at) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + Rational(*it);
  return acc;
}

std::optional<IntPoly> sqrt(const IntPoly& p) {
  if (p.empty()) return IntPoly{};
  const int dp = degree(p);
  if (dp % 2 != 0 || p.back() < 0) return std::nullopt;
  const int d = dp / 2;
  IntPoly r(d + 1);
  if (!mpz_perfect_square_p(p.back().get_mpz_t())) return std::nullopt;
  mpz_sqrt(r[d].get_mpz_t(), p.back().get_mpz_t());
  const Integer twoLead = 2 * r[d];
  for (int k = d - 1; k >= 0; --k) {
    // coefficient of s^(d+k): 2 r_d r_k + sum over i + j = d + k, k < i, j < d
    Integer rest = 0;
    for (int i = k + 1; i < d; ++i) {
      const int j = d + k - i;
      if (j > k && j < d) rest += r[i] * r[j];
    }
    Integer num = p[d + k] - rest;
    if (!mpz_divisible_p(num.get_mpz_t(), twoLead.get_mpz_t())) return std::nullopt;
    mpz_divexact(r[k].get_mpz_t(), num.get_mpz_t(), twoLead.get_mpz_t());
  }
  if (mul(r, r) != p) return std::nullopt;
  return r;
}

}  // namespace poly

namespace {

// Moves factors of s out of p into the returned count.
int stripLowZeros(IntPoly& p) {
  std::size_t z = 0;
  while (z < p.size() && p[z] == 0) ++z;
  if (z > 0) p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(z));
  return static_cast<int>(z);
}

IntPoly shifted(const IntPoly& p, int by) {
  IntPoly r(static_cast<std::size_t>(by), Integer(0));
  r.insert(r.end(), p.begin(), p.end());
  return r;
}

std::string powerName(int e) {
  if (e == 0) return "";
  std::ostringstream os;
  if (e % 2 == 0) {
    os << "q";
    if (e != 2) os << "^" << e / 2;
  } else {
    os << "s";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// Renders sum c_i s^(i + shift), highest power first.
std::string formatLaurent(const IntPoly& p, int shift, int* termCount) {
  std::string out;
  int count = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    const Integer& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const std::string pw = powerName(i + shift);
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    std::string term;
    if (pw.empty()) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = pw;
    } else {
      term = mag.get_str() + " " + pw;
    }
    if (count == 0) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
    ++count;
  }
  if (termCount != nullptr) *termCount = count;
  return count == 0 ? "0" : out;
}

bool isBareFactor(const std::string& s) {
  return s.find_first_of(" /+") == std::string::npos && !s.empty() && s[0] != '-';
}

}  // namespace

QScalar::QScalar() : den_{1} {}

QScalar::QScalar(long v) : num_{}, den_{1} {
  if (v != 0) num_.emplace_back(v);
}

QScalar::QScalar(const Integer& v) : den_{1} {
  if (v != 0) num_.push_back(v);
}

QScalar::QScalar(const Rational& v) : num_{}, den_{1} {
  Rational r = v;
  r.canonicalize();
  if (r != 0) {
    num_.push_back(r.get_num());
    den_[0] = r.get_den();
  }
}

QScalar QScalar::s(int k) {
  QScalar r(1L);
  r.shift_ = k;
  return r;
}

QScalar QScalar::q(int k) { return s(2 * k); }

QScalar QScalar::fraction(IntPoly num, IntPoly den, int shift) {
  QScalar r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.shift_ = shift;
  r.canonicalize();
  return r;
}

void QScalar::canonicalize() {
  poly::trim(num_);
  poly::trim(den_);
  if (den_.empty()) throw DivisionByZero();
  if (num_.empty()) {
    den_ = {1};
    shift_ = 0;
    return;
  }
  shift_ += stripLowZeros(num_);
  shift_ -= stripLowZeros(den_);
  if (poly::degree(den_) > 0 && poly::degree(num_) > 0) {
    IntPoly g = poly::gcd(num_, den_);
    if (poly::degree(g) > 0) {
      num_ = poly::divExact(num_, g);
      den_ = poly::divExact(den_, g);
    }
  }
  Integer c = poly::content(num_);
  Integer cd = poly::content(den_);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (den_.back() < 0) c = -c;
  if (c != 1) {
    for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    for (auto& v : den_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
}

bool QScalar::isOne() const {
  return shift_ == 0 && num_.size() == 1 && num_[0] == 1 && isLaurent();
}

bool QScalar::isRationalConstant() const {
  return isZero() || (shift_ == 0 && num_.size() == 1 && den_.size() == 1);
}

std::optional<Rational> QScalar::asRational() const {
  if (!isRationalConstant()) return std::nullopt;
  if (isZero()) return Rational(0);
  Rational r(num_[0], den_[0]);
  r.canonicalize();
  return r;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto& v : r.num_) v = -v;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.isZero()) return *this;
  if (isZero()) return *this = o;
  const int base = std::min(shift_, o.shift_);
  if (isLaurent() && o.isLaurent()) {
    num_ = poly::add(shifted(num_, shift_ - base), shifted(o.num_, o.shift_ - base));
    shift_ = base;
    if (num_.empty()) {
      shift_ = 0;
      return *this;
    }
    shift_ += stripLowZeros(num_);
    return *this;
  }
  IntPoly n;
  IntPoly d;
  if (den_ == o.den_) {
    n = poly::add(shifted(num_, shift_ - base), shifted(o.num_, o.shift_ - base));
    d = den_;
  } else {
    n = poly::add(poly::mul(shifted(num_, shift_ - base), o.den_),
                  poly::mul(shifted(o.num_, o.shift_ - base), den_));
    d = poly::mul(den_, o.den_);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  shift_ = base;
  canonicalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (isZero()) return *this;
  if (o.isZero()) return *this = QScalar();
  shift_ += o.shift_;
  num_ = poly::mul(num_, o.num_);
  if (isLaurent() && o.isLaurent()) return *this;
  den_ = poly::mul(den_, o.den_);
  canonicalize();
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inv(); }

QScalar QScalar::mulSPow(int k) const {
  QScalar r = *this;
  if (!r.isZero()) r.shift_ += k;
  return r;
}

QScalar QScalar::inv() const {
  if (isZero()) throw DivisionByZero();
  QScalar r;
  r.num_ = den_;
  r.den_ = num_;
  r.shift_ = -shift_;
  if (r.den_.back() < 0) {
    for (auto& v : r.num_) v = -v;
    for (auto& v : r.den_) v = -v;
  }
  return r;
}

QScalar QScalar::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  QScalar result(1L);
  QScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rational QScalar::eval(const Rational& s0) const {
  if (isZero()) return 0;
  const Rational d = poly::evaluate(den_, s0);
  if (d == 0) throw PoleError("pole of " + toString() + " at s = " + s0.get_str());
  if (s0 == 0 && shift_ < 0) throw PoleError("pole of " + toString() + " at s = 0");
  Rational sp = 1;
  Rational base = shift_ >= 0 ? s0 : Rational(1) / s0;
  for (int i = 0; i < std::abs(shift_); ++i) sp *= base;
  Rational r = poly::evaluate(num_, s0) * sp / d;
  r.canonicalize();
  return r;
}

std::optional<QScalar> QScalar::sqrt() const {
  if (isZero()) return QScalar();
  if (shift_ % 2 != 0) return std::nullopt;
  // sqrt(N/D) = sqrt(N D) / D
  auto root = poly::sqrt(poly::mul(num_, den_));
  if (!root) return std::nullopt;
  return fraction(*root, den_, shift_ / 2);
}

std::size_t QScalar::hash() const {
  std::size_t h = std::hash<int>{}(shift_);
  auto mix = [&h](const IntPoly& p) {
    for (const auto& c : p) {
      h ^= std::hash<long>{}(mpz_get_si(c.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= p.size() * 0x85ebca6bULL;
  };
  mix(num_);
  mix(den_);
  return h;
}

std::string QScalar::toString() const {
  int terms = 0;
  std::string n = formatLaurent(num_, shift_, &terms);
  if (isLaurent() && (shift_ >= 0 || terms == 1)) return n;
  // Negative powers of s move into the denominator once there is a fraction
  // bar anyway, so [2] prints as (q^2 + 1)/q.
  const int lift = shift_ < 0 ? -shift_ : 0;
  if (lift > 0) n = formatLaurent(num_, shift_ + lift, &terms);
  int denTerms = 0;
  std::string d = formatLaurent(den_, lift, &denTerms);
  if (terms > 1) n = "(" + n + ")";
  if (denTerms > 1 || d.find(' ') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

bool QScalar::printsAsAtom() const { return isBareFactor(toString()); }

QScalar qint(int n) {
  if (n == 0) return QScalar();
  const int m = std::abs(n);
  // [m] = q^(m-1) + q^(m-3) + ... + q^(1-m), i.e. s-exponents 2(m-1) .. -2(m-1)
  IntPoly p(static_cast<std::size_t>(4 * (m - 1) + 1));
  for (int k = 0; k < m; ++k) p[static_cast<std::size_t>(4 * k)] = 1;
  QScalar r = QScalar::fraction(p, IntPoly{1}, -2 * (m - 1));
  return n < 0 ? -r : r;
}

}  // namespace qaffine
