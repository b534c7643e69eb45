#include "selmer/densities.hpp"

#include <algorithm>
#include <set>

#include "selmer/errors.hpp"
#include "selmer/factor.hpp"
#include "selmer/polynomial.hpp"

namespace selmer {

MultiquadraticField MultiquadraticField::from_generators(const std::vector<Int>& generators) {
  MultiquadraticField K;
  for (const Int& g : generators) {
    if (g == 0) throw ArgumentError("field generator must be nonzero");
    K.generators_.push_back(squarefree_part(g));
  }
  K.classes_ = TwistClassSet::generated_by(K.generators_);
  return K;
}

bool MultiquadraticField::is_real() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Int& g) { return g > 0; });
}

std::vector<Int> MultiquadraticField::ramified_candidates() const {
  std::set<Int> out;
  for (const Int& g : generators_) {
    for (const Int& p : prime_divisors(g)) out.insert(p);
  }
  return {out.begin(), out.end()};
}

std::string to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::TotallySplit: return "totally_split";
    case ProfileKind::UnramifiedQuadratic: return "unramified_quadratic";
    case ProfileKind::RamifiedQuadratic: return "ramified_quadratic";
    case ProfileKind::Biquadratic: return "biquadratic";
    case ProfileKind::Coarse2: return "coarse_nonsplit_2";
    case ProfileKind::Coarse3: return "coarse_nonsplit_3";
  }
  return "?";
}

std::string to_string(const RamificationProfile& r) {
  std::string s = to_string(r.kind);
  if (r.kind == ProfileKind::Coarse2 || r.kind == ProfileKind::Coarse3) {
    s += "(" + std::to_string(r.local_degree) + ")";
  }
  return s;
}

int square_class_key(const Rat& x, const Int& p) {
  if (x == 0) throw ArgumentError("square_class_key: zero");
  long v = valuation(x, p);
  Int num = x.get_num(), den = x.get_den();
  num = split_valuation(num, p).second;
  den = split_valuation(den, p).second;
  // unit part num/den ~ num * den modulo squares.
  Int unit = num * den;
  int parity = static_cast<int>(((v % 2) + 2) % 2);
  if (p == 2) return 8 * parity + static_cast<int>(mod(unit, Int(8)).get_si());
  return 2 * parity + (legendre_symbol(unit, p) == 1 ? 0 : 1);
}

RamificationProfile ramification_profile(const MultiquadraticField& K, const Int& p) {
  if (!is_prime(p)) throw ArgumentError("ramification_profile: p must be prime");
  std::set<int> image;
  for (const Int& theta : K.classes().elements()) image.insert(square_class_key(Rat(theta), p));
  RamificationProfile out;
  out.local_degree = static_cast<int>(image.size());
  if (image.size() == 1) return out;
  if (p == 2) {
    out.kind = ProfileKind::Coarse2;
    return out;
  }
  if (p == 3) {
    out.kind = ProfileKind::Coarse3;
    return out;
  }
  if (image.size() == 4) {
    out.kind = ProfileKind::Biquadratic;
    return out;
  }
  // Size 2: the nontrivial class is the key != 0.
  int nontrivial = *image.rbegin();
  out.kind = nontrivial >= 2 ? ProfileKind::RamifiedQuadratic : ProfileKind::UnramifiedQuadratic;
  return out;
}

namespace {

Int ipow(const Int& p, unsigned long e) { return pow(p, e); }

void require_fine_prime(const Int& p) {
  if (!is_prime(p) || p < 5) throw ArgumentError("fine local factors require a prime p >= 5");
}

Rat L_ramified(const Int& p) {
  Int num = (p - 1) * (ipow(p, 4) - ipow(p, 3) + p * p - p + 1) *
            (46 * ipow(p, 5) + 62 * ipow(p, 4) + 79 * ipow(p, 3) + 84 * p * p + 84 * p + 48);
  return make_rat(num, 48 * (ipow(p, 10) - 1));
}

Int unramified_numerator(const Int& p) {
  return 16 * ipow(p, 11) + 16 * ipow(p, 10) - 8 * ipow(p, 9) + 8 * ipow(p, 8) - 8 * ipow(p, 7) -
         10 * ipow(p, 6) - 4 * ipow(p, 5) + 7 * ipow(p, 4) - ipow(p, 3) - 8 * p * p - 24 * p - 1;
}

Rat L_unramified(const Int& p) {
  return make_rat(unramified_numerator(p), 16 * (ipow(p, 10) - 1) * (p + 1));
}

Rat L_biquadratic(const Int& p) {
  Int num = (p - 1) * (ipow(p, 4) - ipow(p, 3) + p * p - p + 1) *
            (5 * ipow(p, 5) + 15 * ipow(p, 4) + 13 * ipow(p, 3) + 9 * p * p + 13 * p + 8);
  return make_rat(num, 8 * (ipow(p, 10) - 1));
}

}  // namespace

Rat L_p(ProfileKind kind, const Int& p) {
  switch (kind) {
    case ProfileKind::TotallySplit:
      if (!is_prime(p)) throw ArgumentError("L_p: p must be prime");
      return Rat(1);
    case ProfileKind::RamifiedQuadratic: require_fine_prime(p); return L_ramified(p);
    case ProfileKind::UnramifiedQuadratic: require_fine_prime(p); return L_unramified(p);
    case ProfileKind::Biquadratic: require_fine_prime(p); return L_biquadratic(p);
    case ProfileKind::Coarse2:
    case ProfileKind::Coarse3:
      throw ArgumentError("L_p: coarse profiles need the local degree");
  }
  throw ArgumentError("L_p: unknown profile");
}

Rat L_p(const RamificationProfile& profile, const Int& p) {
  if (profile.kind == ProfileKind::Coarse2) {
    if (p != 2) throw ArgumentError("L_p: coarse_nonsplit_2 only applies at p = 2");
    if (profile.local_degree < 2) throw ArgumentError("L_p: coarse profile must be nonsplit");
    return make_rat(1, ipow(Int(2), 2 + static_cast<unsigned long>(profile.local_degree)));
  }
  if (profile.kind == ProfileKind::Coarse3) {
    if (p != 3) throw ArgumentError("L_p: coarse_nonsplit_3 only applies at p = 3");
    return make_rat(1, 4);
  }
  return L_p(profile.kind, p);
}

Rat L_infinity(const MultiquadraticField& K) { return K.is_real() ? make_rat(1, 2) : make_rat(9, 20); }

Rat mu_density(ProfileKind kind, const Int& p, int i) {
  require_fine_prime(p);
  if (i < 1) throw ArgumentError("mu_density: i must be >= 1");
  if (i > 2) return Rat(0);
  const Int p5 = ipow(p, 5), p7 = ipow(p, 7), p9 = ipow(p, 9);
  switch (kind) {
    case ProfileKind::UnramifiedQuadratic:
      if (i == 1) {
        return make_rat((p - 1) * (p7 + ipow(p, 6) + p5 + ipow(p, 3) + p + 1), p9 * (p + 1));
      }
      return make_rat((p - 1) * (p * p - p + 1), 6 * p7 * (p + 1));
    case ProfileKind::RamifiedQuadratic:
      if (i == 1) return make_rat((p - 1) * (p5 + 1) * (ipow(p, 3) + p * p + 1), 2 * p9);
      return make_rat((p - 1) * (p5 + 1) * (2 * p * p - 2 * p - 1), 12 * p7 * (p + 1));
    case ProfileKind::Biquadratic:
      if (i == 1) return make_rat((p5 + 1) * (p - 1) * (p * p + 3 * p + 1), 2 * p7 * (p + 1));
      return make_rat((p5 + 1) * (p - 1) * (ipow(p, 4) - ipow(p, 3) + p * p + 6 * p + 6),
                      6 * p9 * (p + 1));
    default:
      throw ArgumentError("mu_density: profile must be unramified, ramified or biquadratic");
  }
}

Rat mass_identity_check(ProfileKind kind, const Int& p) {
  Rat mu1 = mu_density(kind, p, 1);
  Rat mu2 = mu_density(kind, p, 2);
  Rat scale = 1 - make_rat(1, ipow(p, 10));
  Rat mu0 = scale - mu1 - mu2;
  Rat diff = L_p(kind, p) - (mu0 + mu1 / 2 + mu2 / 4) / scale;
  diff.canonicalize();
  return diff;
}

DensityReport a_bounds(const MultiquadraticField& K, unsigned long truncation) {
  if (K.is_trivial()) throw ArgumentError("a_bounds: K must be a nontrivial extension");
  if (truncation < 5) throw ArgumentError("a_bounds: truncation point must be at least 5");
  DensityReport r;
  r.generators = K.generators();
  r.truncation = truncation;
  r.L_infinity = L_infinity(K);

  std::set<Int> primes;
  for (std::uint64_t p : primes_up_to(truncation)) primes.insert(Int(static_cast<unsigned long>(p)));
  for (const Int& p : K.ramified_candidates()) primes.insert(p);

  Rat coarse = 1, fine = 1;
  for (const Int& p : primes) {
    RamificationProfile prof = ramification_profile(K, p);
    if (prof.kind == ProfileKind::TotallySplit) continue;
    Rat f = L_p(prof, p);
    r.factors.emplace(p, std::make_pair(prof, f));
    if (p < 5) {
      coarse *= f;
    } else {
      fine *= f;
    }
  }
  // prod_{p > P} (1 - 1/p^2) >= prod_{n > P} (1 - 1/n^2) = P / (P + 1).
  r.tail_lower = make_rat(Int(truncation), Int(truncation + 1));
  r.upper = 4 * r.L_infinity * fine;
  r.lower = 4 * r.L_infinity * coarse * fine * r.tail_lower;
  r.upper.canonicalize();
  r.lower.canonicalize();
  return r;
}

std::pair<Rat, Rat> average_intersection_interval(const DensityReport& r) {
  return {1 + r.lower / 2, 1 + r.upper / 2};
}

Rat positive_proportion_lower(const Int& D, unsigned long truncation) {
  DensityReport r = a_bounds(MultiquadraticField::from_generators({D}), truncation);
  Rat delta = r.lower / 4;
  Rat out = delta * delta / 15;
  out.canonicalize();
  return out;
}

OmegaCheck omega_bound_check(const Int& D) {
  if (D == 0) throw ArgumentError("omega_bound_check: D must be nonzero");
  OmegaCheck out{true, 0, Rat(1), Rat(1)};
  for (const Int& p : prime_divisors(D)) {
    if (p < 5) continue;
    ++out.count;
    out.product *= L_p(ProfileKind::RamifiedQuadratic, p);
    out.bound *= make_rat(23, 24);
  }
  out.holds = out.product <= out.bound;
  return out;
}

bool unramified_tail_certificate() {
  // Polynomials in p, coefficient i multiplies p^i.
  auto mul = [](const poly::IntPoly& f, const poly::IntPoly& g) {
    poly::IntPoly out(f.size() + g.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    }
    return out;
  };
  auto sub = [](poly::IntPoly f, const poly::IntPoly& g) {
    if (f.size() < g.size()) f.resize(g.size(), Int(0));
    for (std::size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
    return f;
  };
  poly::IntPoly numerator{-1, -24, -8, -1, 7, -4, -10, -8, 8, -8, 16, 16};
  poly::IntPoly p10_minus_1(11, Int(0));
  p10_minus_1[0] = -1;
  p10_minus_1[10] = 1;
  poly::IntPoly denominator = mul(mul(p10_minus_1, {Int(1), Int(1)}), {Int(16)});
  poly::IntPoly gap = sub(denominator, numerator);                  // (1 - L) * den
  poly::IntPoly margin = sub(denominator, mul(gap, {0, 0, 1}));      // den - p^2 (1 - L) den
  for (const poly::IntPoly& f : {gap, margin}) {
    for (const Int& c : poly::taylor_shift(f, Int(5), Int(1))) {
      if (c < 0) return false;
    }
  }
  return true;
}

std::vector<Place> dependence_support(const Int& A, const Int& B, const Int& D) {
  if (D == 0 || squarefree_part(D) == 1) throw ArgumentError("dependence_support: D must be a nontrivial twist");
  Int disc = 4 * A * A * A + 27 * B * B;
  if (disc == 0) throw ArgumentError("dependence_support: singular curve");
  std::vector<Place> out{Place::infinity()};
  for (const Int& p : prime_divisors(Int(2 * D * disc))) out.push_back(Place::prime(p));
  return out;
}

}  // namespace selmer
