#pragma once

// Desk-scale 2-descent bookkeeping: integral quartics with prescribed
// invariants inside a coefficient box, grouped into orbits by unimodular
// moves, and counts of the locally (S-)soluble orbits.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "selmer/solubility.hpp"

namespace selmer {

using IntForm = std::array<std::int64_t, 5>;

BinaryQuartic to_quartic(const IntForm& f);

/// All (a, b, c, d, e) with |coefficients| <= bound and invariants (I, J).
/// Forms with a = b = 0 are degenerate and skipped. Sorted.
std::vector<IntForm> enumerate_forms(const Int& I, const Int& J, std::int64_t bound, unsigned threads = 0);

/// Plain five-fold loop over the box, for cross-checking.
std::vector<IntForm> enumerate_forms_naive(const Int& I, const Int& J, std::int64_t bound);

/// a == 0 or g(x, 1) has a rational root.
bool has_rational_linear_factor(const IntForm& f);

/// g(x + t y, y).
IntForm translate_x(const IntForm& f, std::int64_t t);
/// g(x, y + t x).
IntForm translate_y(const IntForm& f, std::int64_t t);
/// g(y, x).
IntForm swap_xy(const IntForm& f);
/// g(x, -y).
IntForm negate_y(const IntForm& f);

struct FormOrbit {
  IntForm representative;
  std::vector<IntForm> members;
  bool has_linear_factor = false;
  bool locally_soluble = false;
  bool locally_s_soluble = false;
};

struct BucketResult {
  std::vector<FormOrbit> orbits;
  /// The move search hit its node budget; the partition may be finer.
  bool budget_exhausted = false;
  std::size_t nodes_explored = 0;
};

/// Groups forms by connecting them through the moves above, allowing
/// intermediate forms with coefficients up to working_bound. Merging is
/// sound (merged forms are GL2(Z)-equivalent); orbits may be split. Only the
/// linear-factor flag is filled in.
BucketResult bucket_orbits(const std::vector<IntForm>& forms, std::int64_t working_bound,
                           std::size_t move_budget);

/// Lexicographically least by (|a|, ..., |e|, a, ..., e).
bool canonical_less(const IntForm& x, const IntForm& y);

struct SelmerEstimate {
  Int A, B;
  std::vector<Int> S;
  std::int64_t bound = 0;
  std::int64_t working_bound = 0;
  std::size_t forms_found = 0;
  std::vector<FormOrbit> orbits;
  /// Locally soluble orbits, all linear-factor orbits counted as one class.
  long sel2_lower = 0;
  /// Locally S-soluble orbits, counted the same way.
  long intersection_lower = 0;
  /// Classes certified to be distinct: the identity class plus one
  /// non-identity class if any exists. A non-identity class forces
  /// #Sel2 >= 2 because the class of forms with a linear factor is the
  /// identity.
  long certified_sel2_lower = 0;
  long certified_intersection_lower = 0;
  bool identity_present = false;
  bool budget_exhausted = false;
  /// Bucket counts separate Z-orbits, not Q-classes; they are not certified.
  bool q_class_count_certified = false;
};

struct DescentOptions {
  std::int64_t bound = 20;
  /// Defaults to 2 * bound.
  std::int64_t working_bound = 0;
  std::size_t move_budget = 2'000'000;
  unsigned threads = 0;
};

/// Enumerates forms with invariants (16 I(E), 64 J(E)) = (-48 A, -1728 B),
/// buckets them and counts soluble orbits.
SelmerEstimate selmer_intersection_report(const Int& A, const Int& B, const TwistClassSet& S,
                                          const DescentOptions& options);

struct ExamplePointCheck {
  std::string description;
  Int A, B, D, x, y;
  bool holds;
};

/// The worked rational points: (0, -1) on y^2 = x^3 + x + 1, (-1, 1) on
/// -y^2 = x^3 + x + 1, (0, 1) on y^2 = x^3 - 3x + 1, (1, 1) on
/// -y^2 = x^3 - 3x + 1.
std::vector<ExamplePointCheck> verify_example_points();

/// File cache of descent reports, keyed by (A, B, S, bound, working bound,
/// budget) and a format version. Writes go to a temporary file that is then
/// renamed into place.
class DescentCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit DescentCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// $SELMER_CACHE_DIR if set, otherwise .selmer-cache in the working directory.
  static DescentCache from_environment();

  std::optional<SelmerEstimate> load(const Int& A, const Int& B, const TwistClassSet& S,
                                     const DescentOptions& options) const;
  void store(const SelmerEstimate& estimate, const DescentOptions& options) const;
  std::filesystem::path path_for(const Int& A, const Int& B, const std::vector<Int>& S,
                                 const DescentOptions& options) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace selmer
