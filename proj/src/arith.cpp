#include "selmer/arith.hpp"

#include <algorithm>
#include <cctype>

#include "selmer/errors.hpp"

namespace selmer {

namespace {

void require_prime(const Int& p) {
  if (!is_prime(p)) throw ArgumentError("expected a prime, got " + p.get_str());
}

void require_odd_prime(const Int& p) {
  require_prime(p);
  if (p == 2) throw ArgumentError("expected an odd prime, got 2");
}

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw ArgumentError("not invertible modulo " + m.get_str());
  }
  return r;
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ArgumentError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int parse_int(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (!valid_integer_text(s)) throw ArgumentError("malformed integer '" + text + "'");
  return Int(s, 10);
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal(const Rat& x, unsigned digits) {
  Int scale = pow(Int(10), digits);
  Int scaled = abs(Int(x.get_num())) * scale / x.get_den();
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  if (x < 0) out.insert(0, "-");
  return out;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }
Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat pow(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw ArgumentError("zero to a negative power");
    return pow(Rat(1) / base, -exp);
  }
  auto e = static_cast<unsigned long>(exp);
  return make_rat(pow(Int(base.get_num()), e), pow(Int(base.get_den()), e));
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long Valuation::value() const {
  if (infinite_) throw std::logic_error("valuation is infinite");
  return value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

std::pair<long, Int> split_valuation(const Int& n, const Int& p) {
  if (n == 0) throw ArgumentError("split_valuation of zero");
  Int rest;
  long k = static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
  return {k, rest};
}

Valuation valuation(const Int& n, const Int& p) {
  require_prime(p);
  if (n == 0) return Valuation::infinity();
  return Valuation(split_valuation(n, p).first);
}

long valuation(const Rat& x, const Int& p) {
  require_prime(p);
  if (x == 0) throw ArgumentError("valuation of zero rational");
  return split_valuation(x.get_num(), p).first - split_valuation(x.get_den(), p).first;
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

int legendre_symbol(const Int& a, const Int& p) {
  require_odd_prime(p);
  return mpz_legendre(mod(a, p).get_mpz_t(), p.get_mpz_t());
}

std::optional<Int> sqrt_mod(const Int& a, const Int& p) {
  require_odd_prime(p);
  Int x = mod(a, p);
  if (x == 0) return Int(0);
  if (mpz_legendre(x.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;

  // Tonelli-Shanks.
  Int q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

  Int c, r, t, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = mod(tt * tt, p);
      ++i;
    }
    Int b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
    r = mod(r * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    m = i;
  }
  Int other = p - r;
  return std::min(r, other);
}

bool is_square_in_qp(const Rat& x, const Int& p) {
  require_prime(p);
  if (x == 0) throw ArgumentError("is_square_in_qp: zero argument");
  auto [vn, un] = split_valuation(x.get_num(), p);
  auto [vd, ud] = split_valuation(x.get_den(), p);
  if ((vn - vd) % 2 != 0) return false;
  Int unit = un * ud;  // same square class as un / ud
  if (p == 2) return mod(unit, 8) == 1;
  return legendre_symbol(unit, p) == 1;
}

std::optional<Int> hensel_lift_sqrt(const Int& a, const Int& p, unsigned k) {
  require_prime(p);
  if (k == 0) throw ArgumentError("hensel_lift_sqrt: k must be positive");
  if (mod(a, p) == 0) throw ArgumentError("hensel_lift_sqrt: argument is not a unit");
  Int modulus = pow(p, k);

  if (p == 2) {
    if (k == 1) return Int(1);
    if (k == 2) return mod(a, 4) == 1 ? std::optional<Int>(Int(1)) : std::nullopt;
    if (mod(a, 8) != 1) return std::nullopt;
    Int r = 1;
    for (unsigned j = 3; j < k; ++j) {
      Int next = pow(Int(2), j + 1);
      if (mod(r * r - a, next) != 0) r += pow(Int(2), j - 1);
    }
    // r, -r, r + 2^(k-1), -r + 2^(k-1) are all the roots; return the least.
    Int half = modulus / 2;
    Int best = mod(r, modulus);
    for (const Int& cand : {mod(-r, modulus), mod(r + half, modulus), mod(-r + half, modulus)}) {
      best = std::min(best, cand);
    }
    return best;
  }

  auto root = sqrt_mod(a, p);
  if (!root) return std::nullopt;
  Int r = *root;
  Int current = p;
  while (current < modulus) {
    current = std::min(Int(current * current), modulus);
    Int fx = r * r - a;
    r = mod(r - fx * inverse_mod(mod(2 * r, current), current), current);
  }
  return r;
}

PadicApprox::PadicApprox(Int p, long v, Int unit, unsigned precision, bool zero)
    : prime_(std::move(p)), valuation_(v), unit_(std::move(unit)), precision_(precision), zero_(zero) {}

PadicApprox PadicApprox::from_rat(const Rat& x, const Int& p, unsigned precision) {
  require_prime(p);
  if (precision == 0) throw ArgumentError("PadicApprox: precision must be positive");
  if (x == 0) return PadicApprox(p, 0, Int(0), precision, true);
  auto [vn, un] = split_valuation(x.get_num(), p);
  auto [vd, ud] = split_valuation(x.get_den(), p);
  Int modulus = pow(p, precision);
  Int unit = mod(un * inverse_mod(mod(ud, modulus), modulus), modulus);
  return PadicApprox(p, vn - vd, unit, precision, false);
}

PadicApprox PadicApprox::operator*(const PadicApprox& other) const {
  if (prime_ != other.prime_) throw ArgumentError("PadicApprox: mismatched primes");
  unsigned prec = std::min(precision_, other.precision_);
  if (zero_ || other.zero_) return PadicApprox(prime_, 0, Int(0), prec, true);
  Int modulus = pow(prime_, prec);
  return PadicApprox(prime_, valuation_ + other.valuation_, mod(unit_ * other.unit_, modulus), prec, false);
}

std::optional<bool> PadicApprox::is_square() const {
  if (zero_) return true;
  if (valuation_ % 2 != 0) return false;
  if (prime_ == 2) {
    if (precision_ < 3) return std::nullopt;
    return mod(unit_, 8) == 1;
  }
  return legendre_symbol(unit_, prime_) == 1;
}

}  // namespace selmer
