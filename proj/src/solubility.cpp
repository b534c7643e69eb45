#include "selmer/solubility.hpp"

#include <algorithm>
#include <set>

#include "selmer/errors.hpp"
#include "selmer/factor.hpp"
#include "selmer/polynomial.hpp"

namespace selmer {

Place Place::prime(const Int& p) {
  if (!is_prime(p)) throw ArgumentError("Place::prime: " + selmer::to_string(p) + " is not prime");
  Place out;
  out.infinite_ = false;
  out.p_ = p;
  return out;
}

const Int& Place::p() const {
  if (infinite_) throw std::logic_error("Place::p at infinity");
  return p_;
}

std::string Place::to_string() const { return infinite_ ? "inf" : selmer::to_string(p_); }

bool operator<(const Place& a, const Place& b) {
  if (a.infinite_ != b.infinite_) return a.infinite_;
  return a.p_ < b.p_;
}

TwistClassSet TwistClassSet::generated_by(const std::vector<Int>& generators) {
  std::set<Int> group{Int(1)};
  for (const Int& gen : generators) {
    if (gen == 0) throw ArgumentError("twist class generator must be nonzero");
    Int g = squarefree_part(gen);
    std::set<Int> next = group;
    for (const Int& h : group) next.insert(squarefree_part(Int(g * h)));
    group = std::move(next);
  }
  TwistClassSet out;
  out.elements_.assign(group.begin(), group.end());
  return out;
}

bool TwistClassSet::contains(const Int& theta) const {
  if (theta == 0) return false;
  return std::binary_search(elements_.begin(), elements_.end(), squarefree_part(theta));
}

Int TwistClassSet::product() const {
  Int out = 1;
  for (const Int& t : elements_) out *= abs(t);
  return out;
}

bool r_soluble(const BinaryQuartic& g) {
  if (g.is_zero()) return true;
  if (g.a == 0) return true;  // g(1, 0) = 0
  poly::RatPoly f{g.e, g.d, g.c, g.b, g.a};
  if (poly::count_real_roots(f) > 0) return true;
  return g.a > 0;
}

namespace {

constexpr long kInf = 1L << 40;

long val_or_inf(const Int& x, const Int& p) {
  Valuation v = valuation(x, p);
  return v.is_infinite() ? kInf : v.value();
}

bool int_is_square_qp(const Int& c, const Int& p) { return is_square_in_qp(Rat(c), p); }

struct ChartSearch {
  poly::IntPoly f;
  poly::IntPoly df;
  Int p;
  bool odd;
  long content_val;
  long depth_cap;

  // Whether f(t) is a Q_p-square for some t in t0 + p^n Z_p.
  bool soluble_class(const Int& t0, long n, const Int& pn) const {
    if (n > depth_cap) throw ResourceError("qp_soluble: descent depth guard exceeded");
    poly::IntPoly h = poly::taylor_shift(f, t0, pn);
    const Int& c = h[0];
    if (c == 0) return true;
    long vc = val_or_inf(c, p);
    long m = kInf;
    for (std::size_t i = 1; i < h.size(); ++i) m = std::min(m, val_or_inf(h[i], p));

    if (vc < m) {
      // f = c (1 + O(p^(m - vc))) on the whole class.
      if (odd) return int_is_square_qp(c, p);
      if (vc % 2 == 1) return false;
      if (m - vc >= 3) return int_is_square_qp(c, p);
    }

    long vd = val_or_inf(poly::evaluate(df, t0), p);
    if (vd < kInf && vc > 2 * vd && vc - vd >= n) return true;  // Hensel: a root lies in the class

    return soluble_children(t0, n, pn);
  }

  bool soluble_children(const Int& t0, long n, const Int& pn) const {
    Int next = pn * p;
    // Children t0 + k p^n for k in [0, p). A cheap value test decides most
    // children at odd p without a Taylor shift: on t + p^(n+1) Z_p every
    // higher coefficient has valuation >= n + 1 + content_val.
    std::vector<Int> pending;
    for (Int k = 0; k < p; ++k) {
      Int t = t0 + k * pn;
      if (odd) {
        Int c = poly::evaluate(f, t);
        if (c == 0) return true;
        long vc = val_or_inf(c, p);
        if (vc < n + 1 + content_val) {
          if (int_is_square_qp(c, p)) return true;
          continue;
        }
      }
      pending.push_back(t);
    }
    for (const Int& t : pending) {
      if (soluble_class(t, n + 1, next)) return true;
    }
    return false;
  }
};

bool chart_soluble(poly::IntPoly f, const Int& p, long depth_cap) {
  poly::trim(f);
  if (f.empty()) return true;
  ChartSearch search;
  search.content_val = kInf;
  for (const Int& c : f) search.content_val = std::min(search.content_val, val_or_inf(c, p));
  search.df = poly::derivative(f);
  search.f = std::move(f);
  search.p = p;
  search.odd = p != 2;
  search.depth_cap = depth_cap;
  return search.soluble_class(Int(0), 0, Int(1));
}

Int to_int(const Rat& x) { return x.get_num(); }

void require_integral_nondegenerate(const BinaryQuartic& g) {
  if (!g.is_integral()) throw ArgumentError("form must be integral");
  if (!is_nondegenerate(g)) throw ArgumentError("form must be nondegenerate");
}

}  // namespace

bool qp_soluble(const BinaryQuartic& g, const Int& p) {
  if (!is_prime(p)) throw ArgumentError("qp_soluble: p must be prime");
  require_integral_nondegenerate(g);
  Rat disc = discriminant(g);
  long depth_cap = 2 * valuation(disc, p) + 40;

  Int a = to_int(g.a), b = to_int(g.b), c = to_int(g.c), d = to_int(g.d), e = to_int(g.e);
  // Chart (t, 1).
  if (chart_soluble({e, d, c, b, a}, p, depth_cap)) return true;
  // Chart (1, p s).
  Int p2 = p * p;
  return chart_soluble({a, b * p, c * p2, d * p2 * p, e * p2 * p2}, p, depth_cap);
}

bool s_soluble(const BinaryQuartic& g, const Place& place, const TwistClassSet& S) {
  for (const Int& theta : S.elements()) {
    BinaryQuartic tg = g.scaled(Rat(theta));
    bool ok = place.is_infinite() ? r_soluble(tg) : qp_soluble(tg, place.p());
    if (!ok) return false;
  }
  return true;
}

std::vector<Int> critical_primes(const BinaryQuartic& g, const TwistClassSet& S) {
  require_integral_nondegenerate(g);
  Int n = 2 * abs(to_int(discriminant(g))) * S.product();
  return prime_divisors(n);
}

bool locally_s_soluble(const BinaryQuartic& g, const TwistClassSet& S) {
  if (!s_soluble(g, Place::infinity(), S)) return false;
  for (const Int& p : critical_primes(g, S)) {
    if (!s_soluble(g, Place::prime(p), S)) return false;
  }
  return true;
}

bool locally_soluble(const BinaryQuartic& g) { return locally_s_soluble(g, TwistClassSet::trivial()); }

Int local_kummer_size(const Int& A, const Int& B, const Int& p) {
  if (!is_prime(p)) throw ArgumentError("local_kummer_size: p must be prime");
  if (4 * A * A * A + 27 * B * B == 0) throw ArgumentError("local_kummer_size: singular curve");
  int roots = poly::count_roots_zp({B, A, Int(0), Int(1)}, p);
  Int torsion = roots + 1;
  return p == 2 ? Int(2 * torsion) : torsion;
}

}  // namespace selmer
