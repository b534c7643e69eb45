#include "selmer/isotropy.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <set>
#include <thread>

#include "selmer/errors.hpp"

namespace selmer {

namespace {

using u64 = std::uint64_t;

constexpr u64 kEnumerationGuard = 10'000'000;
constexpr u64 kBlockSize = 4096;

u64 inverse_mod(u64 a, u64 p) {
  u64 result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(std::vector<FpVector>& m, u64 p, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    u64 inv = inverse_mod(m[row][col], p);
    for (auto& x : m[row]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      u64 factor = m[r][col];
      for (int c = 0; c < cols; ++c) {
        m[r][c] = static_cast<std::uint32_t>((m[r][c] + (p - factor) * m[row][c]) % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

int rank_of(std::vector<FpVector> m, u64 p, int cols) { return static_cast<int>(rref(m, p, cols).size()); }

// Basis of {x : m x = 0}.
std::vector<FpVector> nullspace(std::vector<FpVector> m, u64 p, int cols) {
  std::vector<int> pivots = rref(m, p, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = static_cast<std::uint32_t>((p - m[r][free]) % p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void require_same_ambient(const SubspaceFp& a, const SubspaceFp& b) {
  if (a.p() != b.p() || a.ambient_dim() != b.ambient_dim()) {
    throw ArgumentError("subspaces live in different ambient spaces");
  }
}

// Linear functional x -> B(w, x) as a coefficient vector.
FpVector polar_functional(const FpVector& w) {
  FpVector f(w.size());
  for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
    f[i] = w[i + 1];
    f[i + 1] = w[i];
  }
  return f;
}

template <typename Fn>
void run_blocks(u64 trials, unsigned threads, Fn&& block_fn) {
  u64 blocks = (trials + kBlockSize - 1) / kBlockSize;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, std::max<u64>(blocks, 1)));
  std::atomic<u64> next{0};
  auto worker = [&]() {
    for (u64 b = next++; b < blocks; b = next++) {
      u64 count = std::min(kBlockSize, trials - b * kBlockSize);
      block_fn(b, count);
    }
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

u64 block_seed(u64 seed, u64 block) { return splitmix64(seed + block); }

}  // namespace

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("uniform_below: bound must be positive");
  u64 limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    u64 x = engine_();
    if (x < limit) return x % bound;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

QuadraticSpaceFp::QuadraticSpaceFp(std::uint32_t p, int n) : p_(p), n_(n) {
  if (p >= (1u << 16) || !is_prime(Int(p))) throw ArgumentError("QuadraticSpaceFp: p must be a prime below 2^16");
  if (n < 1) throw ArgumentError("QuadraticSpaceFp: n must be positive");
}

std::uint32_t QuadraticSpaceFp::Q(const FpVector& x) const {
  if (static_cast<int>(x.size()) != dim()) throw ArgumentError("Q: dimension mismatch");
  u64 acc = 0;
  for (int i = 0; i < n_; ++i) acc = (acc + static_cast<u64>(x[2 * i]) * x[2 * i + 1]) % p_;
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t QuadraticSpaceFp::B(const FpVector& x, const FpVector& y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim()) {
    throw ArgumentError("B: dimension mismatch");
  }
  u64 acc = 0;
  for (int i = 0; i < n_; ++i) {
    acc = (acc + static_cast<u64>(x[2 * i]) * y[2 * i + 1] + static_cast<u64>(x[2 * i + 1]) * y[2 * i]) % p_;
  }
  return static_cast<std::uint32_t>(acc);
}

SubspaceFp SubspaceFp::span(std::uint32_t p, int ambient_dim, const std::vector<FpVector>& vectors) {
  SubspaceFp s;
  s.p_ = p;
  s.ambient_ = ambient_dim;
  s.rows_ = vectors;
  for (auto& v : s.rows_) {
    if (static_cast<int>(v.size()) != ambient_dim) throw ArgumentError("span: vector has wrong length");
    for (auto& x : v) x %= p;
  }
  rref(s.rows_, p, ambient_dim);
  return s;
}

bool SubspaceFp::contains(const FpVector& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw ArgumentError("contains: vector has wrong length");
  std::vector<FpVector> m = rows_;
  m.push_back(v);
  return rank_of(std::move(m), p_, ambient_) == dim();
}

SubspaceFp standard_lagrangian(const QuadraticSpaceFp& V) {
  std::vector<FpVector> basis;
  for (int i = 0; i < V.n(); ++i) {
    FpVector v(V.dim(), 0);
    v[2 * i] = 1;
    basis.push_back(v);
  }
  return SubspaceFp::span(V.p(), V.dim(), basis);
}

SubspaceFp complementary_lagrangian(const QuadraticSpaceFp& V) {
  std::vector<FpVector> basis;
  for (int i = 0; i < V.n(); ++i) {
    FpVector v(V.dim(), 0);
    v[2 * i + 1] = 1;
    basis.push_back(v);
  }
  return SubspaceFp::span(V.p(), V.dim(), basis);
}

bool is_maximal_isotropic(const QuadraticSpaceFp& V, const SubspaceFp& W) {
  if (W.p() != V.p() || W.ambient_dim() != V.dim()) throw ArgumentError("is_maximal_isotropic: ambient mismatch");
  if (W.dim() != V.n()) return false;
  const auto& rows = W.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (V.Q(rows[i]) != 0) return false;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (V.B(rows[i], rows[j]) != 0) return false;
    }
  }
  return true;
}

Int count_maximal_isotropics(std::uint32_t p, int n) {
  Int out = 1;
  for (int i = 0; i < n; ++i) out *= pow(Int(p), static_cast<unsigned long>(i)) + 1;
  return out;
}

Int enumeration_work(std::uint32_t p, int n) {
  Rat out = 1;
  for (int i = 0; i < n; ++i) {
    out *= Rat(pow(Int(p), static_cast<unsigned long>(2 * n - i)) - 1) /
           Rat(pow(Int(p), static_cast<unsigned long>(i + 1)) - 1);
  }
  out.canonicalize();
  return out.get_num();
}

std::vector<SubspaceFp> enumerate_maximal_isotropics(const QuadraticSpaceFp& V) {
  const int n = V.n(), m = V.dim();
  const u64 p = V.p();
  if (enumeration_work(V.p(), n) > Int(static_cast<unsigned long>(kEnumerationGuard))) {
    throw ResourceError("enumerate_maximal_isotropics: more than 10^7 candidate subspaces");
  }
  std::vector<SubspaceFp> out;
  // Pivot columns as a bitmask with n bits set.
  for (u64 mask = 0; mask < (u64{1} << m); ++mask) {
    if (std::popcount(mask) != n) continue;
    std::vector<int> pivots;
    for (int c = 0; c < m; ++c) {
      if (mask >> c & 1) pivots.push_back(c);
    }
    std::vector<std::pair<int, int>> free_slots;
    for (int r = 0; r < n; ++r) {
      for (int c = pivots[r] + 1; c < m; ++c) {
        if (!(mask >> c & 1)) free_slots.emplace_back(r, c);
      }
    }
    std::vector<FpVector> rows(n, FpVector(m, 0));
    for (int r = 0; r < n; ++r) rows[r][pivots[r]] = 1;
    std::vector<std::uint32_t> digits(free_slots.size(), 0);
    for (;;) {
      for (std::size_t k = 0; k < free_slots.size(); ++k) rows[free_slots[k].first][free_slots[k].second] = digits[k];
      bool isotropic = true;
      for (int i = 0; i < n && isotropic; ++i) {
        if (V.Q(rows[i]) != 0) isotropic = false;
        for (int j = i + 1; j < n && isotropic; ++j) {
          if (V.B(rows[i], rows[j]) != 0) isotropic = false;
        }
      }
      if (isotropic) out.push_back(SubspaceFp::span(V.p(), m, rows));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubspaceFp> enumerate_maximal_isotropics_dfs(const QuadraticSpaceFp& V) {
  const int m = V.dim();
  const u64 p = V.p();
  if (std::pow(static_cast<double>(p), m) > static_cast<double>(kEnumerationGuard)) {
    throw ResourceError("enumerate_maximal_isotropics_dfs: ambient space too large");
  }
  // Normalized nonzero isotropic vectors (first nonzero coordinate 1).
  std::vector<FpVector> isotropic;
  FpVector v(m, 0);
  for (;;) {
    int k = 0;
    while (k < m && ++v[k] == p) v[k++] = 0;
    if (k == m) break;
    auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (*lead == 1 && V.Q(v) == 0) isotropic.push_back(v);
  }

  std::set<SubspaceFp> visited, maximal;
  std::vector<SubspaceFp> stack{SubspaceFp::span(V.p(), m, {})};
  while (!stack.empty()) {
    SubspaceFp W = stack.back();
    stack.pop_back();
    if (W.dim() == V.n()) {
      maximal.insert(W);
      continue;
    }
    for (const FpVector& x : isotropic) {
      bool orthogonal = std::all_of(W.rows().begin(), W.rows().end(),
                                    [&](const FpVector& w) { return V.B(w, x) == 0; });
      if (!orthogonal || W.contains(x)) continue;
      std::vector<FpVector> basis = W.rows();
      basis.push_back(x);
      SubspaceFp next = SubspaceFp::span(V.p(), m, basis);
      if (visited.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return {maximal.begin(), maximal.end()};
}

SubspaceFp sample_maximal_isotropic(const QuadraticSpaceFp& V, Rng& rng) {
  const int m = V.dim();
  const u64 p = V.p();
  std::vector<FpVector> basis;
  SubspaceFp W = SubspaceFp::span(V.p(), m, {});
  while (W.dim() < V.n()) {
    std::vector<FpVector> functionals;
    for (const FpVector& w : W.rows()) functionals.push_back(polar_functional(w));
    std::vector<FpVector> perp = functionals.empty() ? std::vector<FpVector>{} : nullspace(functionals, p, m);
    if (functionals.empty()) {
      for (int i = 0; i < m; ++i) {
        FpVector e(m, 0);
        e[i] = 1;
        perp.push_back(e);
      }
    }
    for (;;) {
      FpVector x(m, 0);
      for (const FpVector& b : perp) {
        u64 c = rng.uniform_below(p);
        if (c == 0) continue;
        for (int i = 0; i < m; ++i) x[i] = static_cast<std::uint32_t>((x[i] + c * b[i]) % p);
      }
      if (V.Q(x) != 0 || W.contains(x)) continue;
      basis.push_back(x);
      W = SubspaceFp::span(V.p(), m, basis);
      break;
    }
  }
  return W;
}

SubspaceFp sample_maximal_isotropic(const QuadraticSpaceFp& V, std::uint64_t seed) {
  Rng rng(seed);
  return sample_maximal_isotropic(V, rng);
}

int intersection_dim(const SubspaceFp& W, const SubspaceFp& Z) {
  require_same_ambient(W, Z);
  std::vector<FpVector> all = W.rows();
  all.insert(all.end(), Z.rows().begin(), Z.rows().end());
  return W.dim() + Z.dim() - rank_of(std::move(all), W.p(), W.ambient_dim());
}

SubspaceFp intersect(const SubspaceFp& W, const SubspaceFp& Z) {
  require_same_ambient(W, Z);
  const u64 p = W.p();
  const int m = W.ambient_dim();
  if (W.dim() == 0 || Z.dim() == 0) return SubspaceFp::span(W.p(), m, {});
  // Z = {x : u . x = 0 for u in ann(Z)}.
  std::vector<FpVector> ann = nullspace(Z.rows(), p, m);
  if (ann.empty()) return W;
  // Coefficients c with sum_i c_i W_i in Z: (u_j . W_i) c = 0.
  std::vector<FpVector> system(ann.size(), FpVector(W.dim(), 0));
  for (std::size_t j = 0; j < ann.size(); ++j) {
    for (int i = 0; i < W.dim(); ++i) {
      u64 dot = 0;
      for (int k = 0; k < m; ++k) dot = (dot + static_cast<u64>(ann[j][k]) * W.rows()[i][k]) % p;
      system[j][i] = static_cast<std::uint32_t>(dot);
    }
  }
  std::vector<FpVector> out;
  for (const FpVector& c : nullspace(system, p, W.dim())) {
    FpVector x(m, 0);
    for (int i = 0; i < W.dim(); ++i) {
      for (int k = 0; k < m; ++k) x[k] = static_cast<std::uint32_t>((x[k] + static_cast<u64>(c[i]) * W.rows()[i][k]) % p);
    }
    out.push_back(std::move(x));
  }
  return SubspaceFp::span(W.p(), m, out);
}

double Estimate::standard_error() const {
  if (trials == 0) return 0.0;
  double q = value();
  return std::sqrt(q * (1 - q) / static_cast<double>(trials));
}

std::vector<Estimate> pair_distribution(std::uint32_t p, int n, std::uint64_t trials, std::uint64_t seed,
                                        unsigned threads) {
  if (trials == 0) throw ArgumentError("pair_distribution: trials must be positive");
  QuadraticSpaceFp V(p, n);
  SubspaceFp W = standard_lagrangian(V);
  u64 blocks = (trials + kBlockSize - 1) / kBlockSize;
  std::vector<std::vector<u64>> per_block(blocks, std::vector<u64>(n + 1, 0));
  run_blocks(trials, threads, [&](u64 b, u64 count) {
    Rng rng(block_seed(seed, b));
    for (u64 t = 0; t < count; ++t) ++per_block[b][intersection_dim(W, sample_maximal_isotropic(V, rng))];
  });
  std::vector<Estimate> out(n + 1);
  for (int r = 0; r <= n; ++r) {
    out[r].trials = trials;
    for (const auto& counts : per_block) out[r].hits += counts[r];
  }
  return out;
}

std::vector<Rat> exact_pair_distribution(std::uint32_t p, int n) {
  QuadraticSpaceFp V(p, n);
  SubspaceFp W = standard_lagrangian(V);
  auto all = enumerate_maximal_isotropics(V);
  std::vector<Int> counts(n + 1, 0);
  for (const auto& Z : all) ++counts[intersection_dim(W, Z)];
  std::vector<Rat> out;
  for (const Int& c : counts) out.push_back(make_rat(c, Int(static_cast<unsigned long>(all.size()))));
  return out;
}

Estimate triple_nontrivial_estimate(std::uint32_t p, int n, std::uint64_t trials, std::uint64_t seed,
                                    unsigned threads) {
  if (trials == 0) throw ArgumentError("triple_nontrivial_estimate: trials must be positive");
  QuadraticSpaceFp V(p, n);
  SubspaceFp W = standard_lagrangian(V);
  u64 blocks = (trials + kBlockSize - 1) / kBlockSize;
  std::vector<u64> per_block(blocks, 0);
  run_blocks(trials, threads, [&](u64 b, u64 count) {
    Rng rng(block_seed(seed, b));
    for (u64 t = 0; t < count; ++t) {
      SubspaceFp Z1 = sample_maximal_isotropic(V, rng);
      SubspaceFp Z2 = sample_maximal_isotropic(V, rng);
      if (intersection_dim(intersect(W, Z1), Z2) > 0) ++per_block[b];
    }
  });
  Estimate out;
  out.trials = trials;
  for (u64 h : per_block) out.hits += h;
  return out;
}

Rat exact_triple_nontrivial(std::uint32_t p, int n) {
  QuadraticSpaceFp V(p, n);
  SubspaceFp W = standard_lagrangian(V);
  auto all = enumerate_maximal_isotropics(V);
  Int hits = 0;
  for (const auto& Z1 : all) {
    SubspaceFp X = intersect(W, Z1);
    if (X.dim() == 0) continue;
    for (const auto& Z2 : all) {
      if (intersection_dim(X, Z2) > 0) ++hits;
    }
  }
  Int total = Int(static_cast<unsigned long>(all.size()));
  return make_rat(hits, total * total);
}

Rat exact_vector_membership(std::uint32_t p, int n) {
  QuadraticSpaceFp V(p, n);
  FpVector v(V.dim(), 0);
  v[0] = 1;
  auto all = enumerate_maximal_isotropics(V);
  long hits = std::count_if(all.begin(), all.end(), [&](const SubspaceFp& Z) { return Z.contains(v); });
  return make_rat(Int(hits), Int(static_cast<unsigned long>(all.size())));
}

Rat pair_bound(std::uint32_t p, int r) { return pow(Rat(p), -static_cast<long>(r) * (r - 3) / 2); }

Rat subspace_meeting_bound(std::uint32_t p, int n, int a) {
  Int den = 1;
  for (int i = 0; i <= n - 2; ++i) den *= pow(Int(p), static_cast<unsigned long>(i)) + 1;
  return make_rat(pow(Int(p), static_cast<unsigned long>(a)) - 1, den);
}

Rat triple_bound(std::uint32_t p, int n) {
  Rat sum = 0;
  for (int r = 1; r <= n; ++r) sum += pow(Rat(p), -static_cast<long>(r) * (r - 5) / 2);
  Rat out = pow(Rat(p), -static_cast<long>(n - 1) * (n - 2) / 2) * sum;
  out.canonicalize();
  return out;
}

}  // namespace selmer
