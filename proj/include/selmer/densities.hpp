#pragma once

// Ramification profiles of multiquadratic fields, the local factors L_v,
// the mu_p density table and the bounds built from them.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "selmer/solubility.hpp"

namespace selmer {

/// K = Q(sqrt(D_1), ..., sqrt(D_k)).
class MultiquadraticField {
 public:
  /// Generators must be nonzero; they are reduced to squarefree parts.
  static MultiquadraticField from_generators(const std::vector<Int>& generators);

  const std::vector<Int>& generators() const { return generators_; }
  /// Squarefree representatives of ker(Q^x/Q^x2 -> K^x/K^x2).
  const TwistClassSet& classes() const { return classes_; }
  bool is_trivial() const { return classes_.size() == 1; }
  bool is_real() const;
  /// Primes dividing some generator.
  std::vector<Int> ramified_candidates() const;

 private:
  std::vector<Int> generators_;
  TwistClassSet classes_;
};

enum class ProfileKind {
  TotallySplit,
  UnramifiedQuadratic,
  RamifiedQuadratic,
  Biquadratic,
  Coarse2,
  Coarse3,
};

std::string to_string(ProfileKind k);

struct RamificationProfile {
  ProfileKind kind = ProfileKind::TotallySplit;
  /// [K_w : Q_p], the size of the image of the classes in Q_p^x / Q_p^x2.
  int local_degree = 1;
  friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;
};

std::string to_string(const RamificationProfile& r);

/// Class of a nonzero rational in Q_p^x / Q_p^x2 as a small integer key:
/// odd p: 2 (v mod 2) + [unit is a nonresidue]; p = 2: 8 (v mod 2) + (unit mod 8).
int square_class_key(const Rat& x, const Int& p);

RamificationProfile ramification_profile(const MultiquadraticField& K, const Int& p);

/// The local factor for the given profile at p. Throws ArgumentError when
/// the profile does not fit p (fine profiles need p >= 5, coarse ones p = 2, 3).
Rat L_p(const RamificationProfile& profile, const Int& p);
Rat L_p(ProfileKind kind, const Int& p);

Rat L_infinity(const MultiquadraticField& K);

/// Density of phi = i for the profile at p >= 5. i > 2 gives 0.
Rat mu_density(ProfileKind kind, const Int& p, int i);

/// L_p - (mu_0 + mu_1 / 2 + mu_2 / 4) / (1 - p^-10), with
/// mu_0 = (1 - p^-10) - mu_1 - mu_2.
Rat mass_identity_check(ProfileKind kind, const Int& p);

struct DensityReport {
  std::vector<Int> generators;
  unsigned long truncation = 0;
  Rat L_infinity;
  /// Primes whose factor differs from 1, with profile and factor.
  std::map<Int, std::pair<RamificationProfile, Rat>> factors;
  /// Certified lower bound for the product over unramified p > truncation.
  Rat tail_lower;
  Rat lower;
  Rat upper;
};

/// Certified bounds for 4 prod_v L_v (lower, coarse factors at 2 and 3
/// included) and 4 prod_{v not dividing 6} L_v (upper). Exact for p up to
/// the truncation point and for every prime dividing a generator; the
/// remaining primes are unramified or split, and their product lies in
/// [P/(P+1), 1] by unramified_tail_certificate.
DensityReport a_bounds(const MultiquadraticField& K, unsigned long truncation = 10000);

/// [1 + lower/2, 1 + upper/2]: the average size of the intersection of the
/// twisted 2-Selmer groups lies in this interval.
std::pair<Rat, Rat> average_intersection_interval(const DensityReport& r);

/// (lower / 4)^2 / 15 for K = Q(sqrt(D)).
Rat positive_proportion_lower(const Int& D, unsigned long truncation = 10000);

struct OmegaCheck {
  bool holds;
  long count;
  Rat product;
  Rat bound;
};

/// prod_{p | D, p >= 5} L_p(ramified) <= (23/24)^#{p | D : p >= 5}.
OmegaCheck omega_bound_check(const Int& D);

/// 0 <= 1 - L_p(unramified) <= 1/p^2 for every p >= 5, proved by checking
/// that two integer polynomials have nonnegative coefficients after the
/// substitution p = 5 + s.
bool unramified_tail_certificate();

/// {inf} together with the primes dividing 2 D (4A^3 + 27B^2).
std::vector<Place> dependence_support(const Int& A, const Int& B, const Int& D);

}  // namespace selmer
