#include "selmer/quartic.hpp"

#include <sstream>
#include <vector>

#include "selmer/errors.hpp"
#include "selmer/polynomial.hpp"

namespace selmer {

namespace {

// Homogeneous binary form as coefficients indexed by the power of y.
using HForm = std::vector<Rat>;

HForm multiply(const HForm& f, const HForm& g) {
  HForm out(f.size() + g.size() - 1, Rat(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

HForm power(const HForm& f, int k) {
  HForm out{Rat(1)};
  for (int i = 0; i < k; ++i) out = multiply(out, f);
  return out;
}

}  // namespace

BinaryQuartic BinaryQuartic::from_ints(long a, long b, long c, long d, long e) {
  return {Rat(a), Rat(b), Rat(c), Rat(d), Rat(e)};
}

Rat BinaryQuartic::evaluate(const Rat& x, const Rat& y) const {
  Rat x2 = x * x, y2 = y * y;
  return a * x2 * x2 + b * x2 * x * y + c * x2 * y2 + d * x * y2 * y + e * y2 * y2;
}

bool BinaryQuartic::is_integral() const {
  for (const Rat& v : coefficients()) {
    if (!is_integer(v)) return false;
  }
  return true;
}

bool BinaryQuartic::is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0 && e == 0; }

BinaryQuartic BinaryQuartic::scaled(const Rat& f) const {
  return {a * f, b * f, c * f, d * f, e * f};
}

std::string to_string(const BinaryQuartic& g) {
  std::ostringstream os;
  os << "(" << to_string(g.a) << ", " << to_string(g.b) << ", " << to_string(g.c) << ", "
     << to_string(g.d) << ", " << to_string(g.e) << ")";
  return os.str();
}

Rat BinarySextic::evaluate(const Rat& x, const Rat& y) const {
  Rat acc = 0, ypow = 1;
  std::array<Rat, 7> xpow;
  xpow[0] = 1;
  for (int i = 1; i < 7; ++i) xpow[i] = xpow[i - 1] * x;
  for (int i = 0; i < 7; ++i) {
    acc += coeffs[i] * xpow[6 - i] * ypow;
    ypow *= y;
  }
  return acc;
}

bool BinarySextic::is_zero() const {
  for (const Rat& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

Rat disc_from_invariants(const Rat& I, const Rat& J) {
  Rat out = (4 * I * I * I - J * J) / 27;
  out.canonicalize();
  return out;
}

Rat height(const InvariantPair& ij) {
  Rat cube = abs(Rat(ij.I * ij.I * ij.I));
  Rat half = ij.J * ij.J / 4;
  return cube > half ? cube : half;
}

Rat InvariantPair::height() const { return selmer::height(*this); }
Rat InvariantPair::discriminant() const { return disc_from_invariants(I, J); }

Mat2 Mat2::operator*(const Mat2& o) const {
  return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11, m10 * o.m00 + m11 * o.m10,
          m10 * o.m01 + m11 * o.m11};
}

InvariantPair invariants(const BinaryQuartic& g) {
  const auto& [a, b, c, d, e] = g;
  Rat I = 12 * a * e - 3 * b * d + c * c;
  Rat J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
  return {I, J};
}

Rat discriminant(const BinaryQuartic& g) {
  InvariantPair ij = invariants(g);
  return disc_from_invariants(ij.I, ij.J);
}

bool is_nondegenerate(const BinaryQuartic& g) { return discriminant(g) != 0; }

BinaryQuartic covariant_g4(const BinaryQuartic& g) {
  const auto& [a, b, c, d, e] = g;
  return {3 * b * b - 8 * a * c, 4 * (b * c - 6 * a * d), 2 * (2 * c * c - 24 * a * e - 3 * b * d),
          4 * (c * d - 6 * b * e), 3 * d * d - 8 * c * e};
}

BinarySextic covariant_g6(const BinaryQuartic& g) {
  const auto& [a, b, c, d, e] = g;
  BinarySextic s;
  s.coeffs[0] = b * b * b + 8 * a * a * d - 4 * a * b * c;
  s.coeffs[1] = 2 * (16 * a * a * e + 2 * a * b * d - 4 * a * c * c + b * b * c);
  s.coeffs[2] = 5 * (8 * a * b * e + b * b * d - 4 * a * c * d);
  s.coeffs[3] = 20 * (b * b * e - a * d * d);
  s.coeffs[4] = -5 * (8 * a * d * e + b * d * d - 4 * b * c * e);
  s.coeffs[5] = -2 * (16 * a * e * e + 2 * b * d * e - 4 * c * c * e + c * d * d);
  s.coeffs[6] = -(d * d * d + 8 * b * e * e - 4 * c * d * e);
  return s;
}

BinaryQuartic act(const Mat2& gamma, const BinaryQuartic& g) {
  Rat det = gamma.det();
  if (det == 0) throw ArgumentError("act: singular matrix");
  // (gamma v) = (m00 x + m01 y, m10 x + m11 y).
  HForm first{gamma.m00, gamma.m01};
  HForm second{gamma.m10, gamma.m11};
  auto coeffs = g.coefficients();
  HForm total(5, Rat(0));
  for (int i = 0; i < 5; ++i) {
    if (coeffs[i] == 0) continue;
    HForm term = multiply(power(first, 4 - i), power(second, i));
    for (int k = 0; k < 5; ++k) total[k] += coeffs[i] * term[k];
  }
  Rat scale = 1 / (det * det);
  for (Rat& v : total) {
    v *= scale;
    v.canonicalize();
  }
  return {total[0], total[1], total[2], total[3], total[4]};
}

BinaryQuartic twist_form(const Rat& theta, const BinaryQuartic& g) {
  if (theta == 0) throw ArgumentError("twist_form: theta must be nonzero");
  return g.scaled(1 / theta);
}

std::string to_string(RealType t) {
  switch (t) {
    case RealType::kType0: return "type0";
    case RealType::kType1: return "type1";
    case RealType::kType2Plus: return "type2+";
    case RealType::kType2Minus: return "type2-";
  }
  return "unknown";
}

RealType classify_real(const BinaryQuartic& g) {
  if (!is_nondegenerate(g)) throw ArgumentError("classify_real: degenerate form");
  poly::RatPoly f{g.e, g.d, g.c, g.b, g.a};
  int roots = poly::count_real_roots(f);
  if (g.a == 0) ++roots;  // root at infinity
  if (roots == 4) return RealType::kType0;
  if (roots == 2) return RealType::kType1;
  if (roots != 0) throw std::logic_error("classify_real: odd real root count");
  return g.a > 0 ? RealType::kType2Plus : RealType::kType2Minus;
}

namespace {

void require_on_curve(const Rat& I, const Rat& J, const Rat& xi, const Rat& eta) {
  Rat rhs = xi * xi * xi - I * xi / 3 - J / 27;
  if (eta * eta != rhs) throw ArgumentError("point is not on y^2 = x^3 - (I/3) x - J/27");
}

}  // namespace

BinaryQuartic q_of_point(const Rat& I, const Rat& J, const Rat& xi, const Rat& eta) {
  require_on_curve(I, J, xi, eta);
  Rat c = Rat(-3, 2) * xi;
  Rat e = I / 12 - Rat(3, 4) * xi * xi;
  c.canonicalize();
  e.canonicalize();
  return {Rat(1), Rat(0), c, Rat(-eta), e};
}

BinaryQuartic q_of_point_normalized(const Rat& I, const Rat& J, const Rat& xi, const Rat& eta) {
  require_on_curve(I, J, xi, eta);
  Rat c = Rat(-3, 2) * xi;
  Rat e = I / 12 - Rat(3, 16) * xi * xi;
  c.canonicalize();
  e.canonicalize();
  return {Rat(1), Rat(0), c, Rat(-eta), e};
}

}  // namespace selmer
