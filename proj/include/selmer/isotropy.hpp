#pragma once

// The hyperbolic quadratic space F_p^(2n), Q(x) = sum_i x_(2i) x_(2i+1),
// and its maximal isotropic subspaces.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "selmer/arith.hpp"

namespace selmer {

using FpVector = std::vector<std::uint32_t>;

/// Deterministic RNG wrapper; uniform_below uses rejection so streams do
/// not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent per-block seeds.
std::uint64_t splitmix64(std::uint64_t x);

class QuadraticSpaceFp {
 public:
  /// p prime below 2^16, n >= 1.
  QuadraticSpaceFp(std::uint32_t p, int n);

  std::uint32_t p() const { return p_; }
  int n() const { return n_; }
  int dim() const { return 2 * n_; }

  std::uint32_t Q(const FpVector& x) const;
  /// B(x, y) = Q(x + y) - Q(x) - Q(y).
  std::uint32_t B(const FpVector& x, const FpVector& y) const;

 private:
  std::uint32_t p_;
  int n_;
};

/// A subspace of F_p^m stored in reduced row echelon form, so equal
/// subspaces compare equal.
class SubspaceFp {
 public:
  /// Span of the given vectors (need not be independent).
  static SubspaceFp span(std::uint32_t p, int ambient_dim, const std::vector<FpVector>& vectors);

  std::uint32_t p() const { return p_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<FpVector>& rows() const { return rows_; }
  bool contains(const FpVector& v) const;

  friend bool operator==(const SubspaceFp&, const SubspaceFp&) = default;
  friend bool operator<(const SubspaceFp& a, const SubspaceFp& b) { return a.rows_ < b.rows_; }

 private:
  std::uint32_t p_ = 2;
  int ambient_ = 0;
  std::vector<FpVector> rows_;
};

/// Span of the coordinate vectors e_0, e_2, ..., e_(2n-2).
SubspaceFp standard_lagrangian(const QuadraticSpaceFp& V);
/// Span of e_1, e_3, ..., e_(2n-1).
SubspaceFp complementary_lagrangian(const QuadraticSpaceFp& V);

/// dim W == n and Q vanishes on W. Throws ArgumentError on ambient mismatch.
bool is_maximal_isotropic(const QuadraticSpaceFp& V, const SubspaceFp& W);

/// prod_{i=0}^{n-1} (p^i + 1).
Int count_maximal_isotropics(std::uint32_t p, int n);

/// Number of n-dimensional subspaces of F_p^(2n), the work measure for
/// enumerate_maximal_isotropics.
Int enumeration_work(std::uint32_t p, int n);

/// Every maximal isotropic subspace, sorted, by enumerating all RREF
/// matrices of rank n and filtering. Throws ResourceError above 10^7 units.
std::vector<SubspaceFp> enumerate_maximal_isotropics(const QuadraticSpaceFp& V);

/// The same set, built by depth-first extension of isotropic flags.
std::vector<SubspaceFp> enumerate_maximal_isotropics_dfs(const QuadraticSpaceFp& V);

/// Uniform random maximal isotropic subspace by flag extension.
SubspaceFp sample_maximal_isotropic(const QuadraticSpaceFp& V, Rng& rng);
SubspaceFp sample_maximal_isotropic(const QuadraticSpaceFp& V, std::uint64_t seed);

SubspaceFp intersect(const SubspaceFp& W, const SubspaceFp& Z);
int intersection_dim(const SubspaceFp& W, const SubspaceFp& Z);

/// Monte Carlo estimate of a probability.
struct Estimate {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double value() const { return trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials); }
  /// Binomial standard error sqrt(q (1 - q) / trials).
  double standard_error() const;
};

/// Empirical distribution of dim(W cap Z), W the standard Lagrangian and Z
/// sampled. Index r holds the count for r = 0..n. Trials are split into
/// blocks with seeds splitmix64(seed + block), so results do not depend on
/// the thread count.
std::vector<Estimate> pair_distribution(std::uint32_t p, int n, std::uint64_t trials, std::uint64_t seed,
                                        unsigned threads = 0);

/// Exact distribution of dim(W cap Z) by enumeration.
std::vector<Rat> exact_pair_distribution(std::uint32_t p, int n);

/// Empirical Prob(W cap Z1 cap Z2 != 0).
Estimate triple_nontrivial_estimate(std::uint32_t p, int n, std::uint64_t trials, std::uint64_t seed,
                                    unsigned threads = 0);

/// Exact Prob(W cap Z1 cap Z2 != 0) by enumeration.
Rat exact_triple_nontrivial(std::uint32_t p, int n);

/// Exact Prob(v in Z) for a fixed nonzero isotropic v, by enumeration.
Rat exact_vector_membership(std::uint32_t p, int n);

/// p^(-r(r-3)/2).
Rat pair_bound(std::uint32_t p, int r);
/// (p^a - 1) / prod_{i=0}^{n-2} (p^i + 1).
Rat subspace_meeting_bound(std::uint32_t p, int n, int a);
/// p^(-(n-1)(n-2)/2) sum_{r=1}^{n} p^(-r(r-5)/2).
Rat triple_bound(std::uint32_t p, int n);

}  // namespace selmer
