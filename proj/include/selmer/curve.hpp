#pragma once

// Short Weierstrass curves y^2 = x^3 + A x + B: family membership, heights,
// minimal models at p >= 5 and the reduction-type table for p >= 5.

#include <string>
#include <vector>

#include "selmer/quartic.hpp"

namespace selmer {

struct CurveModel {
  Int A, B;

  /// 4 A^3 + 27 B^2.
  Int discriminant() const { return 4 * A * A * A + 27 * B * B; }
  bool is_nonsingular() const { return discriminant() != 0; }
  friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

/// Nonsingular and gcd(A^3, B^2) is 12th-power free (gcd(0, m) = |m|).
bool epsilon_member(const Int& A, const Int& B);

/// (I, J) = (-3A, -27B).
InvariantPair ij_of_curve(const Int& A, const Int& B);

/// max{4|A|^3, 27 B^2}.
Int naive_height(const Int& A, const Int& B);
/// (27/4) naive_height.
Rat bs_height(const Int& A, const Int& B);

/// Divides (A, B) by (p^4, p^6) while both divisibilities hold.
/// Requires p >= 5 prime and a nonsingular curve.
CurveModel minimalize_at_p(const Int& A, const Int& B, const Int& p);

/// v_p(A) >= 4 implies v_p(B) < 6.
bool is_minimal_at_p(const Int& A, const Int& B, const Int& p);

enum class Kodaira { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };
enum class Subtype { None, Split, Nonsplit, Partial, Complete };

std::string to_string(Kodaira k);
std::string to_string(Subtype s);

struct LocalReductionData {
  Kodaira kodaira = Kodaira::I0;
  /// n for I_n and I_n^*, otherwise 0.
  long n = 0;
  Subtype subtype = Subtype::None;
  long tamagawa = 1;

  /// "I0", "I3", "I2*", "IV*", ...
  std::string type_name() const;
  friend bool operator==(const LocalReductionData&, const LocalReductionData&) = default;
};

/// Every reduction-table row whose condition holds for (A, B) at p. For a
/// minimal nonsingular model exactly one row matches.
std::vector<LocalReductionData> matching_rows(const Int& A, const Int& B, const Int& p);

/// The unique matching row. Throws UnsupportedPrimeError for p < 5,
/// ArgumentError for singular or non-minimal models, and std::logic_error if
/// the table fails to give exactly one row.
LocalReductionData kodaira_type(const Int& A, const Int& B, const Int& p);

/// v_p(4A^3 + 27B^2) <= 1.
bool good_or_I1(const Int& A, const Int& B, const Int& p);

/// Number of distinct roots in F_p of T^3 + a T + b. Exhaustive for
/// p < 10^4, gcd with T^p - T otherwise.
int count_cubic_roots_mod_p(const Int& a, const Int& b, const Int& p);

}  // namespace selmer
