#pragma once

// Binary quartic forms g = a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4,
// their invariants and covariants, and the twisted GL2 action
//
//     (gamma . g)(x, y) = det(gamma)^-2 g((x, y) gamma^t).

#include <array>
#include <compare>
#include <string>

#include "selmer/arith.hpp"

namespace selmer {

struct BinaryQuartic {
  Rat a, b, c, d, e;

  static BinaryQuartic from_ints(long a, long b, long c, long d, long e);

  std::array<Rat, 5> coefficients() const { return {a, b, c, d, e}; }
  Rat evaluate(const Rat& x, const Rat& y) const;
  bool is_integral() const;
  bool is_zero() const;
  BinaryQuartic scaled(const Rat& factor) const;

  friend bool operator==(const BinaryQuartic&, const BinaryQuartic&) = default;
};

std::string to_string(const BinaryQuartic& g);

/// Binary sextic, coefficient i multiplies X^(6-i) Y^i.
struct BinarySextic {
  std::array<Rat, 7> coeffs;
  Rat evaluate(const Rat& x, const Rat& y) const;
  bool is_zero() const;
  friend bool operator==(const BinarySextic&, const BinarySextic&) = default;
};

struct InvariantPair {
  Rat I, J;

  /// max{|I|^3, J^2/4}
  Rat height() const;
  /// (4 I^3 - J^2) / 27, the discriminant of any form with these invariants.
  Rat discriminant() const;

  friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

Rat height(const InvariantPair& ij);
Rat disc_from_invariants(const Rat& I, const Rat& J);

/// 2x2 matrix [[m00, m01], [m10, m11]].
struct Mat2 {
  Rat m00, m01, m10, m11;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Rat det() const { return m00 * m11 - m01 * m10; }
  Mat2 operator*(const Mat2& o) const;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

InvariantPair invariants(const BinaryQuartic& g);

/// Discriminant of g, computed from its invariants.
Rat discriminant(const BinaryQuartic& g);
bool is_nondegenerate(const BinaryQuartic& g);

BinaryQuartic covariant_g4(const BinaryQuartic& g);
BinarySextic covariant_g6(const BinaryQuartic& g);

/// Twisted action. Composition is on the right:
/// act(g1, act(g2, g)) == act(g2 * g1, g).
/// Throws ArgumentError for singular gamma.
BinaryQuartic act(const Mat2& gamma, const BinaryQuartic& g);

/// theta^-1 g; I scales by theta^-2 and J by theta^-3.
BinaryQuartic twist_form(const Rat& theta, const BinaryQuartic& g);

enum class RealType { kType0, kType1, kType2Plus, kType2Minus };
std::string to_string(RealType t);

/// Real root pattern of a nondegenerate form: type0 has four real roots on
/// P^1(R), type1 two, type2+/type2- none (positive / negative definite).
/// Decided exactly by Sturm chains. Throws ArgumentError if disc(g) == 0.
RealType classify_real(const BinaryQuartic& g);

/// The quartic X^4 - (3/2) xi X^2 Y^2 - eta X Y^3 + (I/12 - 3 xi^2 / 4) Y^4
/// attached to the point (xi, eta) on y^2 = x^3 - (I/3) x - J/27, with the
/// coefficients exactly as they are usually displayed. Its invariants are
/// (I - 27 xi^2 / 4, J'), which differ from (I, J) unless xi = 0; see
/// q_of_point_normalized for the invariant-preserving variant.
/// Throws ArgumentError if the point is not on the curve.
BinaryQuartic q_of_point(const Rat& I, const Rat& J, const Rat& xi, const Rat& eta);

/// X^4 - (3/2) xi X^2 Y^2 - eta X Y^3 + (I/12 - 3 xi^2 / 16) Y^4, which has
/// invariants exactly (I, J) for every point on the curve.
BinaryQuartic q_of_point_normalized(const Rat& I, const Rat& J, const Rat& xi, const Rat& eta);

}  // namespace selmer
