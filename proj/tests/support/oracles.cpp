#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

namespace {

using selmer::BinaryQuartic;

std::int64_t to_i64(const Rat& x) { return x.get_num().get_si(); }

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t reduce(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Square class of a nonzero residue v mod p^k: true/false when decided,
// none when v = 0 mod p^k or too few unit digits are known.
std::optional<bool> decide(std::int64_t v, long p, int k) {
  if (v == 0) return std::nullopt;
  int w = 0;
  while (v % p == 0) {
    v /= p;
    ++w;
  }
  if (w % 2 == 1) return false;
  int digits = k - w;
  if (p == 2) {
    if (digits < 3) return std::nullopt;
    return v % 8 == 1;
  }
  std::int64_t r = v % p;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return true;
  }
  return false;
}

}  // namespace

int default_depth(long p) {
  int k = 0;
  std::int64_t pk = 1;
  while (pk * p <= 200000) {
    pk *= p;
    ++k;
  }
  return std::max(k, 6);
}

std::optional<bool> qp_soluble_bruteforce(const BinaryQuartic& g, long p, int max_k) {
  std::int64_t a = to_i64(g.a), b = to_i64(g.b), c = to_i64(g.c), d = to_i64(g.d), e = to_i64(g.e);
  std::int64_t pk = 1;
  for (int k = 1; k <= max_k; ++k) {
    pk *= p;
    std::int64_t A = reduce(a, pk), B = reduce(b, pk), C = reduce(c, pk), D = reduce(d, pk), E = reduce(e, pk);
    bool open = false;
    // Chart (t, 1): a t^4 + b t^3 + c t^2 + d t + e.
    for (std::int64_t t = 0; t < pk; ++t) {
      std::int64_t v = A;
      v = (mulmod(v, t, pk) + B) % pk;
      v = (mulmod(v, t, pk) + C) % pk;
      v = (mulmod(v, t, pk) + D) % pk;
      v = (mulmod(v, t, pk) + E) % pk;
      auto r = decide(v, p, k);
      if (r == true) return true;
      if (!r) open = true;
    }
    // Chart (1, u) with p | u: a + b u + c u^2 + d u^3 + e u^4.
    for (std::int64_t u = 0; u < pk; u += p) {
      std::int64_t v = E;
      v = (mulmod(v, u, pk) + D) % pk;
      v = (mulmod(v, u, pk) + C) % pk;
      v = (mulmod(v, u, pk) + B) % pk;
      v = (mulmod(v, u, pk) + A) % pk;
      auto r = decide(v, p, k);
      if (r == true) return true;
      if (!r) open = true;
    }
    if (!open) return false;
  }
  return std::nullopt;
}

std::optional<int> real_roots_numeric(const BinaryQuartic& g) {
  using cld = std::complex<long double>;
  std::vector<long double> coeffs;  // highest degree first, of g(t, 1)
  int at_infinity = 0;
  std::array<Rat, 5> cs = g.coefficients();
  std::size_t start = 0;
  while (start < 5 && cs[start] == 0) {
    ++start;
    at_infinity = 1;
  }
  // A double root at infinity means g is degenerate.
  if (start > 1) return std::nullopt;
  for (std::size_t i = start; i < 5; ++i) coeffs.push_back(cs[i].get_d() / cs[start].get_d());
  int n = static_cast<int>(coeffs.size()) - 1;

  auto eval = [&](cld z) {
    cld v = 0;
    for (long double x : coeffs) v = v * z + x;
    return v;
  };
  std::vector<cld> roots(n);
  cld seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) roots[i] = std::pow(seed, i);
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      cld den = 1;
      for (int j = 0; j < n; ++j) {
        if (j != i) den *= roots[i] - roots[j];
      }
      cld step = eval(roots[i]) / den;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }

  auto sign_at = [&](long double t) {
    Rat x(static_cast<double>(t));
    return sgn(g.evaluate(x, 1));
  };
  std::vector<long double> reals;
  for (const cld& z : roots) {
    long double scale = 1 + std::abs(z);
    if (std::abs(z.imag()) < 1e-9L * scale) {
      reals.push_back(z.real());
    } else if (std::abs(z.imag()) < 1e-5L * scale) {
      return std::nullopt;
    }
  }
  std::sort(reals.begin(), reals.end());
  const long double delta = 1e-7L;
  for (std::size_t i = 0; i < reals.size(); ++i) {
    if (i > 0 && reals[i] - reals[i - 1] < 4 * delta) return std::nullopt;
    if (sign_at(reals[i] - delta) * sign_at(reals[i] + delta) >= 0) return std::nullopt;
  }
  return static_cast<int>(reals.size()) + at_infinity;
}

std::optional<selmer::RealType> classify_real_numeric(const BinaryQuartic& g) {
  auto roots = real_roots_numeric(g);
  if (!roots) return std::nullopt;
  switch (*roots) {
    case 4:
      return selmer::RealType::kType0;
    case 2:
      return selmer::RealType::kType1;
    case 0:
      return g.a > 0 ? selmer::RealType::kType2Plus : selmer::RealType::kType2Minus;
    default:
      return std::nullopt;
  }
}

BinaryQuartic random_form(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  return BinaryQuartic::from_ints(dist(rng), dist(rng), dist(rng), dist(rng), dist(rng));
}

BinaryQuartic random_nondegenerate_form(std::mt19937_64& rng, long bound) {
  for (;;) {
    BinaryQuartic g = random_form(rng, bound);
    if (selmer::is_nondegenerate(g)) return g;
  }
}

selmer::Mat2 random_unimodular(std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<long> shift(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  selmer::Mat2 m = selmer::Mat2::identity();
  for (int i = 0; i < steps; ++i) {
    selmer::Mat2 step = selmer::Mat2::identity();
    switch (kind(rng)) {
      case 0:
        step.m01 = shift(rng);
        break;
      case 1:
        step.m10 = shift(rng);
        break;
      default:
        step = {0, 1, 1, 0};
    }
    m = m * step;
  }
  return m;
}

BinaryQuartic act_by_expansion(const selmer::Mat2& gm, const BinaryQuartic& g) {
  // Polynomials in (x, y) of degree k stored as k+1 coefficients of x^(k-i) y^i.
  using P = std::vector<Rat>;
  auto mul = [](const P& u, const P& v) {
    P out(u.size() + v.size() - 1, Rat(0));
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
    }
    return out;
  };
  P X{gm.m00, gm.m01}, Y{gm.m10, gm.m11};
  std::array<Rat, 5> cs = g.coefficients();
  P total(5, Rat(0));
  for (int i = 0; i <= 4; ++i) {
    P term{cs[i]};
    for (int k = 0; k < 4 - i; ++k) term = mul(term, X);
    for (int k = 0; k < i; ++k) term = mul(term, Y);
    for (int k = 0; k < 5; ++k) total[k] += term[k];
  }
  Rat det = gm.m00 * gm.m11 - gm.m01 * gm.m10;
  Rat s = 1 / (det * det);
  return {total[0] * s, total[1] * s, total[2] * s, total[3] * s, total[4] * s};
}

bool is_rational_square(const Rat& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_num().get_mpz_t()) && mpz_perfect_square_p(x.get_den().get_mpz_t());
}

}  // namespace oracle
