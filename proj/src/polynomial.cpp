#include "selmer/polynomial.hpp"

#include "selmer/errors.hpp"

namespace selmer::poly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;

int sign(const Rat& x) { return sgn(x); }

void trim_mod(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % p);
    b = static_cast<u64>(static_cast<u128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

// Remainder of a modulo a monic-normalisable nonzero g, over F_p.
ModPoly rem_mod(ModPoly a, const ModPoly& g, u64 p) {
  trim_mod(a);
  u64 inv_lead = pow_mod(g.back(), p - 2, p);
  while (a.size() >= g.size()) {
    u64 factor = static_cast<u64>(static_cast<u128>(a.back()) * inv_lead % p);
    std::size_t shift = a.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      u64 sub = static_cast<u64>(static_cast<u128>(factor) * g[i] % p);
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    trim_mod(a);
  }
  return a;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& g, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<u64>((out[i + j] + static_cast<u128>(a[i]) * b[j]) % p);
    }
  }
  return rem_mod(out, g, p);
}

ModPoly reduce_mod(const IntPoly& f, u64 p) {
  ModPoly out;
  out.reserve(f.size());
  for (const Int& c : f) out.push_back(mod(c, Int(p)).get_ui());
  trim_mod(out);
  return out;
}

}  // namespace

void trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const RatPoly& f) {
  RatPoly g = f;
  trim(g);
  return static_cast<long>(g.size()) - 1;
}

long degree(const IntPoly& f) {
  IntPoly g = f;
  trim(g);
  return static_cast<long>(g.size()) - 1;
}

Rat evaluate(const RatPoly& f, const Rat& t) {
  Rat acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Int evaluate(const IntPoly& f, const Int& t) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RatPoly derivative(const RatPoly& f) {
  RatPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
  trim(out);
  return out;
}

IntPoly derivative(const IntPoly& f) {
  IntPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
  trim(out);
  return out;
}

namespace {

std::pair<RatPoly, RatPoly> divmod(RatPoly f, RatPoly g) {
  trim(f);
  trim(g);
  if (g.empty()) throw ArgumentError("polynomial division by zero");
  RatPoly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, Rat(0));
  while (f.size() >= g.size() && !f.empty()) {
    Rat factor = f.back() / g.back();
    std::size_t shift = f.size() - g.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= factor * g[i];
    f.pop_back();
    trim(f);
  }
  trim(q);
  return {q, f};
}

}  // namespace

RatPoly remainder(const RatPoly& f, const RatPoly& g) { return divmod(f, g).second; }
RatPoly quotient(const RatPoly& f, const RatPoly& g) { return divmod(f, g).first; }

RatPoly gcd(RatPoly f, RatPoly g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    RatPoly r = remainder(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    Rat lead = f.back();
    for (Rat& c : f) c /= lead;
  }
  return f;
}

int count_real_roots(const RatPoly& f_in) {
  RatPoly f = f_in;
  trim(f);
  if (f.empty()) throw ArgumentError("count_real_roots: zero polynomial");
  if (f.size() == 1) return 0;
  RatPoly squarefree = quotient(f, gcd(f, derivative(f)));

  std::vector<RatPoly> chain{squarefree, derivative(squarefree)};
  while (chain.back().size() > 1) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rat& c : r) c = -c;
    chain.push_back(std::move(r));
  }

  auto changes = [&](bool at_plus_infinity) {
    int count = 0;
    int last = 0;
    for (const RatPoly& p : chain) {
      int s = sign(p.back());
      if (!at_plus_infinity && (p.size() - 1) % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

IntPoly taylor_shift(const IntPoly& f, const Int& shift, const Int& scale) {
  IntPoly g = f;
  const std::size_t n = g.size();
  // Ruffini-Horner: g(u) = f(shift + u).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) g[j - 1] += shift * g[j];
  }
  Int power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    g[i] *= power;
    power *= scale;
  }
  return g;
}

int count_roots_mod_p_exhaustive(const IntPoly& f, std::uint64_t p) {
  ModPoly g = reduce_mod(f, p);
  if (g.empty()) throw ArgumentError("polynomial vanishes identically mod p");
  int count = 0;
  for (u64 t = 0; t < p; ++t) {
    u64 acc = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      acc = static_cast<u64>((static_cast<u128>(acc) * t + *it) % p);
    }
    if (acc == 0) ++count;
  }
  return count;
}

int count_roots_mod_p_gcd(const IntPoly& f, std::uint64_t p) {
  ModPoly g = reduce_mod(f, p);
  if (g.empty()) throw ArgumentError("polynomial vanishes identically mod p");
  if (g.size() == 1) return 0;

  // t^p mod g by square-and-multiply.
  ModPoly result{1};
  ModPoly base = rem_mod(ModPoly{0, 1}, g, p);
  for (u64 e = p; e > 0; e >>= 1) {
    if (e & 1) result = mulmod(result, base, g, p);
    base = mulmod(base, base, g, p);
  }
  result.resize(std::max<std::size_t>(result.size(), 2), 0);
  result[1] = (result[1] + p - 1) % p;
  trim_mod(result);

  ModPoly a = g, b = result;
  while (!b.empty()) {
    ModPoly r = rem_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

namespace {

long val_or(const Int& x, const Int& p, long infinite) {
  Valuation v = valuation(x, p);
  return v.is_infinite() ? infinite : v.value();
}

int roots_in_class(const IntPoly& f, const IntPoly& df, const Int& p, const Int& t0, unsigned n,
                   const Int& pn, unsigned depth) {
  if (depth > 400) throw ResourceError("count_roots_zp: descent too deep (polynomial not squarefree?)");
  constexpr long kInf = 1L << 40;
  IntPoly h = taylor_shift(f, t0, pn);
  long vc = val_or(h[0], p, kInf);
  long m = kInf;
  for (std::size_t i = 1; i < h.size(); ++i) m = std::min(m, val_or(h[i], p, kInf));
  if (vc < m) return 0;

  long vd = val_or(evaluate(df, t0), p, kInf);
  if (vd < kInf && vc > 2 * vd && static_cast<long>(n) > vd && vc - vd >= static_cast<long>(n)) return 1;

  int total = 0;
  Int next = pn * p;
  for (Int k = 0; k < p; ++k) total += roots_in_class(f, df, p, t0 + k * pn, n + 1, next, depth + 1);
  return total;
}

}  // namespace

int count_roots_zp(const IntPoly& f_in, const Int& p) {
  IntPoly f = f_in;
  trim(f);
  if (f.empty()) throw ArgumentError("count_roots_zp: zero polynomial");
  if (mod(f.back(), p) == 0) throw ArgumentError("count_roots_zp: leading coefficient must be a unit");
  return roots_in_class(f, derivative(f), p, Int(0), 0, Int(1), 0);
}

}  // namespace selmer::poly
