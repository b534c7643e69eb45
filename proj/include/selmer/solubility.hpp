#pragma once

// Local solubility of z^2 = theta g(x, y) over R and Q_p.

#include <string>
#include <vector>

#include "selmer/quartic.hpp"

namespace selmer {

/// A place of Q: infinity or a prime.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Throws ArgumentError if p is not prime.
  static Place prime(const Int& p);

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error at infinity.
  const Int& p() const;
  std::string to_string() const;

  friend bool operator==(const Place&, const Place&) = default;
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place() = default;
  bool infinite_ = true;
  Int p_ = 0;
};

/// A finite subgroup of Q^x / Q^x2, stored as its sorted squarefree
/// representatives. Always contains 1.
class TwistClassSet {
 public:
  /// The subgroup generated by the given nonzero integers.
  static TwistClassSet generated_by(const std::vector<Int>& generators);
  static TwistClassSet trivial() { return generated_by({}); }

  const std::vector<Int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Int& theta) const;
  /// Product of the representatives' absolute values.
  Int product() const;

 private:
  std::vector<Int> elements_;
};

/// g attains a nonnegative value on R^2 minus the origin.
bool r_soluble(const BinaryQuartic& g);

/// z^2 = g(x, y) has a solution over Q_p with (x, y) != 0. g must be
/// integral and nondegenerate. Decided by residue-class descent on the two
/// affine charts (t, 1), t in Z_p and (1, p s), s in Z_p; each class is
/// closed by a unit-dominance test or by Hensel's lemma. Throws
/// ResourceError if the descent exceeds 2 v_p(disc) + 40 levels, which does
/// not happen for squarefree forms.
bool qp_soluble(const BinaryQuartic& g, const Int& p);

/// theta g is soluble at the place for every theta in S.
bool s_soluble(const BinaryQuartic& g, const Place& place, const TwistClassSet& S);

/// Primes dividing 2 disc(g) prod(theta); at every other prime each theta g
/// is soluble.
std::vector<Int> critical_primes(const BinaryQuartic& g, const TwistClassSet& S);

/// s_soluble at infinity and at every critical prime.
bool locally_s_soluble(const BinaryQuartic& g, const TwistClassSet& S);
bool locally_soluble(const BinaryQuartic& g);

/// #E(Q_p) / 2E(Q_p) for E: y^2 = x^3 + A x + B.
Int local_kummer_size(const Int& A, const Int& B, const Int& p);

}  // namespace selmer
