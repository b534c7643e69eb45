#pragma once

// Small dense univariate polynomial helpers. Coefficient i multiplies t^i.

#include <cstdint>
#include <vector>

#include "selmer/arith.hpp"

namespace selmer::poly {

using RatPoly = std::vector<Rat>;
using IntPoly = std::vector<Int>;

/// Drops trailing zero coefficients; the zero polynomial becomes empty.
void trim(RatPoly& f);
void trim(IntPoly& f);

/// Degree, with -1 for the zero polynomial.
long degree(const RatPoly& f);
long degree(const IntPoly& f);

Rat evaluate(const RatPoly& f, const Rat& t);
Int evaluate(const IntPoly& f, const Int& t);

RatPoly derivative(const RatPoly& f);
IntPoly derivative(const IntPoly& f);

/// Remainder of f by a nonzero g.
RatPoly remainder(const RatPoly& f, const RatPoly& g);
/// Exact quotient of f by a nonzero g (remainder discarded).
RatPoly quotient(const RatPoly& f, const RatPoly& g);
/// Monic gcd (empty if both are zero).
RatPoly gcd(RatPoly f, RatPoly g);

/// Number of distinct real roots of a nonzero polynomial (Sturm chain).
int count_real_roots(const RatPoly& f);

/// Coefficients of s -> f(shift + scale * s).
IntPoly taylor_shift(const IntPoly& f, const Int& shift, const Int& scale);

/// Distinct roots of f in F_p by trying every residue.
int count_roots_mod_p_exhaustive(const IntPoly& f, std::uint64_t p);
/// Distinct roots of f in F_p as deg gcd(f mod p, t^p - t).
int count_roots_mod_p_gcd(const IntPoly& f, std::uint64_t p);

/// Number of distinct roots in Z_p of a squarefree integer polynomial whose
/// leading coefficient is a p-adic unit (so every Q_p-root is integral).
int count_roots_zp(const IntPoly& f, const Int& p);

}  // namespace selmer::poly
