#include "selmer/cubic_algebra.hpp"

#include <numeric>
#include <vector>

#include "selmer/errors.hpp"

namespace selmer {

CubicAlgebraElement::CubicAlgebraElement(InvariantPair ij, std::array<Rat, 3> coeffs)
    : ij_(std::move(ij)), coeffs_(std::move(coeffs)) {
  for (Rat& c : coeffs_) c.canonicalize();
}

CubicAlgebraElement CubicAlgebraElement::operator+(const CubicAlgebraElement& o) const {
  if (!(ij_ == o.ij_)) throw ArgumentError("cubic algebra elements from different algebras");
  return {ij_, {coeffs_[0] + o.coeffs_[0], coeffs_[1] + o.coeffs_[1], coeffs_[2] + o.coeffs_[2]}};
}

CubicAlgebraElement CubicAlgebraElement::operator*(const CubicAlgebraElement& o) const {
  if (!(ij_ == o.ij_)) throw ArgumentError("cubic algebra elements from different algebras");
  std::array<Rat, 5> prod;
  for (Rat& c : prod) c = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  // eps^3 = 3I eps - J, applied from the top down.
  const Rat three_i = 3 * ij_.I;
  for (int k = 4; k >= 3; --k) {
    prod[k - 2] += three_i * prod[k];
    prod[k - 3] -= ij_.J * prod[k];
    prod[k] = 0;
  }
  return {ij_, {prod[0], prod[1], prod[2]}};
}

Rat CubicAlgebraElement::norm() const {
  // Columns are this * 1, this * eps, this * eps^2.
  std::array<std::array<Rat, 3>, 3> m;
  CubicAlgebraElement basis(ij_, {Rat(1), Rat(0), Rat(0)});
  CubicAlgebraElement eps(ij_, {Rat(0), Rat(1), Rat(0)});
  for (int col = 0; col < 3; ++col) {
    CubicAlgebraElement image = *this * basis;
    for (int row = 0; row < 3; ++row) m[row][col] = image.coeffs_[row];
    basis = basis * eps;
  }
  Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  det.canonicalize();
  return det;
}

Rat CubicAlgebraElement::trace() const {
  // Tr(1) = 3, Tr(eps) = 0, Tr(eps^2) = 6I for eps^3 - 3I eps + J.
  Rat t = 3 * coeffs_[0] + 6 * ij_.I * coeffs_[2];
  t.canonicalize();
  return t;
}

Rat CubicAlgebraElement::component_at(const Rat& root) const {
  Rat cubic = root * root * root - 3 * ij_.I * root + ij_.J;
  if (cubic != 0) throw ArgumentError("component_at: not a root of the defining cubic");
  Rat v = coeffs_[0] + coeffs_[1] * root + coeffs_[2] * root * root;
  v.canonicalize();
  return v;
}

CubicAlgebraElement z_invariant(const BinaryQuartic& g, const Rat& x, const Rat& y) {
  InvariantPair ij = invariants(g);
  Rat gv = g.evaluate(x, y);
  Rat g4v = covariant_g4(g).evaluate(x, y);
  CubicAlgebraElement out(ij, {g4v / 3, 4 * gv / 3, Rat(0)});
  if (!out.is_unit()) throw NonUnitPointError("z_invariant: G(x, y) is not a unit; try another point");
  return out;
}

std::vector<std::pair<long, long>> spiral_points(long radius) {
  std::vector<std::pair<long, long>> out;
  for (long r = 1; r <= radius; ++r) {
    for (long x = -r; x <= r; ++x) {
      for (long y = -r; y <= r; ++y) {
        if (std::max(std::labs(x), std::labs(y)) != r) continue;
        if (std::gcd(x, y) != 1) continue;
        out.emplace_back(x, y);
      }
    }
  }
  return out;
}

std::pair<CubicAlgebraElement, std::pair<Rat, Rat>> z_invariant_auto(const BinaryQuartic& g) {
  if (!is_nondegenerate(g)) throw ArgumentError("z_invariant_auto: degenerate form");
  // The non-units lie on finitely many lines through the origin, so a modest
  // radius always succeeds for nondegenerate g.
  for (const auto& [x, y] : spiral_points(8)) {
    try {
      return {z_invariant(g, Rat(x), Rat(y)), {Rat(x), Rat(y)}};
    } catch (const NonUnitPointError&) {
    }
  }
  throw ResourceError("z_invariant_auto: no admissible point in search radius");
}

}  // namespace selmer
