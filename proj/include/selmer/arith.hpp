#pragma once

// Exact integer/rational arithmetic and p-adic primitives.
//
// Int and Rat are GMP's mpz_class / mpq_class. Rat values produced by this
// library are always canonical (reduced, positive denominator).

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>

namespace selmer {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws ArgumentError when den == 0.
Rat make_rat(const Int& num, const Int& den = 1);

/// Parses "n" or "n/d" (decimal). Throws ArgumentError on malformed input.
Rat parse_rat(const std::string& text);
Int parse_int(const std::string& text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Fixed-point decimal rendering of x truncated toward zero, `digits` places.
std::string to_decimal(const Rat& x, unsigned digits);

bool is_integer(const Rat& x);
Int abs(const Int& x);
Rat abs(const Rat& x);
Int pow(const Int& base, unsigned long exp);
Rat pow(const Rat& base, long exp);

bool is_prime(const Int& n);

/// p-adic valuation; +infinity for zero.
class Valuation {
 public:
  explicit Valuation(long k) : value_(k), infinite_(false) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error for the infinite valuation.
  long value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

/// Largest k with p^k | n. Throws ArgumentError if p is not prime.
Valuation valuation(const Int& n, const Int& p);
/// v_p(num) - v_p(den); x must be nonzero.
long valuation(const Rat& x, const Int& p);

/// Strips every factor of p from a nonzero n, returning (k, n / p^k).
std::pair<long, Int> split_valuation(const Int& n, const Int& p);

/// Legendre symbol (a/p) for an odd prime p.
int legendre_symbol(const Int& a, const Int& p);

/// Smaller of the two square roots of a mod p in [0, p), or none.
std::optional<Int> sqrt_mod(const Int& a, const Int& p);

/// True iff x is a square in Q_p. x must be nonzero.
bool is_square_in_qp(const Rat& x, const Int& p);

/// r with r^2 = a (mod p^k) when a is a unit square; otherwise none.
/// For odd p the root lifts sqrt_mod(a, p); for p = 2 the least positive
/// odd root is returned. Throws ArgumentError for non-units.
std::optional<Int> hensel_lift_sqrt(const Int& a, const Int& p, unsigned k);

/// Non-negative residue of a modulo m (m > 0).
Int mod(const Int& a, const Int& m);

/// Element of Q_p known to a finite relative precision: p^valuation * unit,
/// with the unit determined modulo p^precision.
class PadicApprox {
 public:
  /// Approximation of a rational number; precision >= 1.
  static PadicApprox from_rat(const Rat& x, const Int& p, unsigned precision);

  const Int& prime() const { return prime_; }
  bool is_zero() const { return zero_; }
  long valuation() const { return valuation_; }
  const Int& unit() const { return unit_; }
  unsigned precision() const { return precision_; }

  PadicApprox operator*(const PadicApprox& other) const;

  /// Whether the element is a square in Q_p. Returns none when the
  /// precision is too low to decide (p = 2 needs three unit digits).
  std::optional<bool> is_square() const;

 private:
  PadicApprox(Int p, long v, Int unit, unsigned precision, bool zero);

  Int prime_;
  long valuation_;
  Int unit_;
  unsigned precision_;
  bool zero_;
};

}  // namespace selmer
