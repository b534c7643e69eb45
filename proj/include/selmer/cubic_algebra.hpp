#pragma once

// The cubic algebra L = Q[eps] / (eps^3 - 3 I eps + J) attached to invariants
// (I, J), and the class z(g) in L^x of a binary quartic form.

#include <array>
#include <utility>
#include <vector>

#include "selmer/quartic.hpp"

namespace selmer {

class CubicAlgebraElement {
 public:
  CubicAlgebraElement(InvariantPair ij, std::array<Rat, 3> coeffs);

  const InvariantPair& invariants() const { return ij_; }
  /// c0 + c1 eps + c2 eps^2.
  const std::array<Rat, 3>& coefficients() const { return coeffs_; }

  CubicAlgebraElement operator*(const CubicAlgebraElement& o) const;
  CubicAlgebraElement operator+(const CubicAlgebraElement& o) const;

  /// Determinant of multiplication-by-this on the basis 1, eps, eps^2.
  Rat norm() const;
  Rat trace() const;
  bool is_unit() const { return norm() != 0; }

  /// Value of c0 + c1 t + c2 t^2 at a root t of the defining cubic.
  Rat component_at(const Rat& root) const;

  friend bool operator==(const CubicAlgebraElement&, const CubicAlgebraElement&) = default;

 private:
  InvariantPair ij_;
  std::array<Rat, 3> coeffs_;
};

/// G(x, y) = (4 eps g(x, y) + g4(x, y)) / 3 in L, where L is built from the
/// invariants of g. Throws NonUnitPointError when G(x, y) is not a unit.
CubicAlgebraElement z_invariant(const BinaryQuartic& g, const Rat& x, const Rat& y);

/// z_invariant at the first admissible point of a fixed spiral of small
/// integer pairs. Returns the element together with the point used.
/// Throws ArgumentError for degenerate g.
std::pair<CubicAlgebraElement, std::pair<Rat, Rat>> z_invariant_auto(const BinaryQuartic& g);

/// Small primitive integer pairs (x, y) in the order z_invariant_auto tries
/// them: by max(|x|, |y|), then lexicographically.
std::vector<std::pair<long, long>> spiral_points(long radius);

}  // namespace selmer
