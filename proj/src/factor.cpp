#include "selmer/factor.hpp"

#include <algorithm>

#include "selmer/errors.hpp"

namespace selmer {

namespace {

constexpr unsigned long kTrialLimit = 10000;

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho; n composite, odd, not a perfect power of a
// small prime. Returns a nontrivial factor.
Int pollard_brent(const Int& n) {
  for (unsigned long seed = 1;; ++seed) {
    Int y = seed + 1, c = seed, m = 64, g = 1, r = 1, q = 1, x, ys;
    auto step = [&](const Int& v) { return mod(v * v + c, n); };
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = step(y);
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (Int i = 0; i < std::min(m, Int(r - k)); ++i) {
          y = step(y);
          q = mod(q * abs(Int(x - y)), n);
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(Int(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    factor_into(root, out);
    factor_into(root, out);
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factorize(const Int& n) {
  if (n == 0) throw ArgumentError("factorize: zero");
  std::map<Int, unsigned> out;
  Int m = abs(n);
  for (unsigned long p = 2; p <= kTrialLimit && Int(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Int(p)];
      m /= p;
    }
  }
  factor_into(m, out);
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t count = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int squarefree_part(const Int& n) {
  Int out = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2 == 1) out *= p;
  }
  return out;
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace selmer
