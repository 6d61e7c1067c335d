#pragma once

// Left and right actions of U_q(su(2)) on S^3_q and the twisted derivations
// X_+, X_-, X_z built from them.

#include <array>
#include <string>
#include <vector>

#include "qaffine/algebra.hpp"

namespace qaffine {

enum class HopfGen { E, F, K, Kinv };
enum class Side { Left, Right };

/// Tangent directions; the numeric value doubles as a basis index.
enum class Tangent { Plus = 0, Minus = 1, Z = 2 };
inline constexpr std::array<Tangent, 3> kTangents{Tangent::Plus, Tangent::Minus, Tangent::Z};

inline int index(Tangent t) { return static_cast<int>(t); }
/// + <-> -, z fixed.
Tangent daggerOf(Tangent t);
/// Power of K in the twist: sigma_+ = sigma_- = K^2, sigma_z = K^4.
inline int twistPower(Tangent t) { return t == Tangent::Z ? 4 : 2; }
std::string name(Tangent t);

/// h |> f for a single generator.
AlgebraElement actL(HopfGen h, const AlgebraElement& f);
/// (h_1 h_2 ... h_k) |> f, i.e. h_k acts first.
AlgebraElement actL(const std::vector<HopfGen>& word, const AlgebraElement& f);
/// f <| h for a single generator.
AlgebraElement actR(const AlgebraElement& f, HopfGen h);
/// f <| (h_1 h_2 ... h_k), i.e. h_1 acts first.
AlgebraElement actR(const AlgebraElement& f, const std::vector<HopfGen>& word);

AlgebraElement act(Side side, HopfGen h, const AlgebraElement& f);

/// K^j on the given side; exact on weight vectors, j may be negative.
AlgebraElement kPow(Side side, int j, const AlgebraElement& f);

/// X_a |> f (left) or f <| Y_a (right).
AlgebraElement X(Tangent t, const AlgebraElement& f, Side side = Side::Left);
/// sigma_a^power applied on the given side.
AlgebraElement sigma(Tangent t, const AlgebraElement& f, Side side = Side::Left, int power = 1);

/// Drops the memoized E/F images of monomials.
void clearActionCache();

}  // namespace qaffine
