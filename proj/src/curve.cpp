#include "selmer/curve.hpp"

#include "selmer/errors.hpp"
#include "selmer/factor.hpp"
#include "selmer/polynomial.hpp"

namespace selmer {

namespace {

constexpr long kInf = 1L << 40;

long v_or_inf(const Int& x, const Int& p) {
  Valuation v = valuation(x, p);
  return v.is_infinite() ? kInf : v.value();
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// x / p^k is a nonzero square in F_p; x must have valuation exactly k.
bool residue_square(const Int& x, const Int& p, long k) {
  Int unit = x / pow(p, static_cast<unsigned long>(k));
  return legendre_symbol(unit, p) == 1;
}

}  // namespace

bool epsilon_member(const Int& A, const Int& B) {
  if (4 * A * A * A + 27 * B * B == 0) return false;
  Int g = gcd(Int(A * A * A), Int(B * B));
  if (g == 1) return true;
  for (const auto& [p, e] : factorize(g)) {
    if (e >= 12) return false;
  }
  return true;
}

InvariantPair ij_of_curve(const Int& A, const Int& B) { return {Rat(-3 * A), Rat(-27 * B)}; }

Int naive_height(const Int& A, const Int& B) {
  Int x = 4 * abs(Int(A * A * A));
  Int y = 27 * B * B;
  return x > y ? x : y;
}

Rat bs_height(const Int& A, const Int& B) { return Rat(27, 4) * Rat(naive_height(A, B)); }

namespace {

void require_p_at_least_5(const Int& p) {
  if (!is_prime(p)) throw ArgumentError("p must be prime");
  if (p < 5) throw UnsupportedPrimeError("reduction data is only supported for p >= 5");
}

}  // namespace

CurveModel minimalize_at_p(const Int& A, const Int& B, const Int& p) {
  require_p_at_least_5(p);
  if (4 * A * A * A + 27 * B * B == 0) throw ArgumentError("minimalize_at_p: singular curve");
  Int p4 = pow(p, 4), p6 = pow(p, 6);
  CurveModel m{A, B};
  while (mpz_divisible_p(m.A.get_mpz_t(), p4.get_mpz_t()) &&
         mpz_divisible_p(m.B.get_mpz_t(), p6.get_mpz_t())) {
    m.A /= p4;
    m.B /= p6;
  }
  return m;
}

bool is_minimal_at_p(const Int& A, const Int& B, const Int& p) {
  return !(v_or_inf(A, p) >= 4 && v_or_inf(B, p) >= 6);
}

std::string to_string(Kodaira k) {
  switch (k) {
    case Kodaira::I0: return "I0";
    case Kodaira::In: return "In";
    case Kodaira::II: return "II";
    case Kodaira::III: return "III";
    case Kodaira::IV: return "IV";
    case Kodaira::I0star: return "I0*";
    case Kodaira::Instar: return "In*";
    case Kodaira::IVstar: return "IV*";
    case Kodaira::IIIstar: return "III*";
    case Kodaira::IIstar: return "II*";
  }
  return "?";
}

std::string to_string(Subtype s) {
  switch (s) {
    case Subtype::None: return "none";
    case Subtype::Split: return "split";
    case Subtype::Nonsplit: return "nonsplit";
    case Subtype::Partial: return "partial";
    case Subtype::Complete: return "complete";
  }
  return "?";
}

std::string LocalReductionData::type_name() const {
  if (kodaira == Kodaira::In) return "I" + std::to_string(n);
  if (kodaira == Kodaira::Instar) return "I" + std::to_string(n) + "*";
  return to_string(kodaira);
}

int count_cubic_roots_mod_p(const Int& a, const Int& b, const Int& p) {
  poly::IntPoly f{b, a, Int(0), Int(1)};
  if (p < 10000) return poly::count_roots_mod_p_exhaustive(f, p.get_ui());
  if (!p.fits_ulong_p()) throw ArgumentError("count_cubic_roots_mod_p: prime too large");
  return poly::count_roots_mod_p_gcd(f, p.get_ui());
}

std::vector<LocalReductionData> matching_rows(const Int& A, const Int& B, const Int& p) {
  require_p_at_least_5(p);
  const Int disc = 4 * A * A * A + 27 * B * B;
  if (disc == 0) throw ArgumentError("singular curve");
  const long va = v_or_inf(A, p), vb = v_or_inf(B, p), vd = v_or_inf(disc, p);
  std::vector<LocalReductionData> rows;
  auto add = [&](Kodaira k, long n, Subtype s, long c) { rows.push_back({k, n, s, c}); };

  if (vd == 0) add(Kodaira::I0, 0, Subtype::None, 1);

  if (va == 0 && vb == 0 && vd >= 1) {
    long n = vd;
    if (residue_square(Int(6 * B), p, 0)) {
      add(Kodaira::In, n, Subtype::Split, n);
    } else {
      add(Kodaira::In, n, Subtype::Nonsplit, n % 2 == 0 ? 2 : 1);
    }
  }

  if (va >= 1 && vb == 1) add(Kodaira::II, 0, Subtype::None, 1);
  if (va == 1 && vb >= 2) add(Kodaira::III, 0, Subtype::None, 2);

  if (va >= 2 && vb == 2) {
    if (residue_square(B, p, 2)) {
      add(Kodaira::IV, 0, Subtype::Split, 3);
    } else {
      add(Kodaira::IV, 0, Subtype::Nonsplit, 1);
    }
  }

  if (va >= 2 && vb >= 3 && vd == 6) {
    Int p2 = p * p;
    int roots = count_cubic_roots_mod_p(Int(A / p2), Int(B / (p2 * p)), p);
    if (roots == 0) add(Kodaira::I0star, 0, Subtype::Nonsplit, 1);
    if (roots == 1) add(Kodaira::I0star, 0, Subtype::Partial, 2);
    if (roots == 3) add(Kodaira::I0star, 0, Subtype::Complete, 4);
  }

  if (va == 2 && vb == 3 && vd > 6) {
    long n = vd - 6;
    bool split = n % 2 == 0 ? residue_square(Int(-disc), p, 6 + n)
                            : residue_square(Int(6 * B * disc), p, 9 + n);
    add(Kodaira::Instar, n, split ? Subtype::Split : Subtype::Nonsplit, split ? 4 : 2);
  }

  if (va >= 3 && vb == 4) {
    if (residue_square(B, p, 4)) {
      add(Kodaira::IVstar, 0, Subtype::Split, 3);
    } else {
      add(Kodaira::IVstar, 0, Subtype::Nonsplit, 1);
    }
  }

  if (va == 3 && vb >= 5) add(Kodaira::IIIstar, 0, Subtype::None, 2);
  if (va >= 4 && vb == 5) add(Kodaira::IIstar, 0, Subtype::None, 1);
  return rows;
}

LocalReductionData kodaira_type(const Int& A, const Int& B, const Int& p) {
  require_p_at_least_5(p);
  if (!is_minimal_at_p(A, B, p)) throw ArgumentError("kodaira_type: model is not minimal at p");
  auto rows = matching_rows(A, B, p);
  if (rows.size() != 1) {
    throw std::logic_error("kodaira_type: " + std::to_string(rows.size()) + " table rows match (A, B) = (" +
                           to_string(A) + ", " + to_string(B) + ") at p = " + to_string(p));
  }
  return rows.front();
}

bool good_or_I1(const Int& A, const Int& B, const Int& p) {
  Int disc = 4 * A * A * A + 27 * B * B;
  if (disc == 0) throw ArgumentError("good_or_I1: singular curve");
  return v_or_inf(disc, p) <= 1;
}

}  // namespace selmer
