#include "selmer/descent.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "selmer/errors.hpp"
#include "selmer/factor.hpp"
#include "selmer/json_io.hpp"

namespace selmer {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 to_i64(const Int& x, const char* what) {
  if (!x.fits_slong_p()) throw ArgumentError(std::string(what) + " does not fit in 64 bits");
  return x.get_si();
}

struct FormHash {
  std::size_t operator()(const IntForm& f) const {
    std::uint64_t h = 0;
    for (i64 x : f) h = splitmix(h ^ static_cast<std::uint64_t>(x));
    return static_cast<std::size_t>(h);
  }
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
};

i64 max_abs(const IntForm& f) {
  i64 m = 0;
  for (i64 x : f) m = std::max(m, x < 0 ? -x : x);
  return m;
}

bool invariants_match(const IntForm& f, i128 I, i128 J) {
  const i128 a = f[0], b = f[1], c = f[2], d = f[3], e = f[4];
  if (12 * a * e - 3 * b * d + c * c != I) return false;
  return 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c == J;
}

void enumerate_a_range(i128 I, i128 J, i64 bound, i64 a, std::vector<IntForm>& out) {
  if (a == 0) {
    // I = c^2 - 3bd and J = 9bcd - 27 e b^2 - 2c^3 with b != 0.
    for (i64 b = -bound; b <= bound; ++b) {
      if (b == 0) continue;
      for (i64 c = -bound; c <= bound; ++c) {
        i128 num_d = static_cast<i128>(c) * c - I;
        if (num_d % (3 * b) != 0) continue;
        i128 d = num_d / (3 * b);
        if (d < -bound || d > bound) continue;
        i128 num_e = 9 * static_cast<i128>(b) * c * d - 2 * static_cast<i128>(c) * c * c - J;
        i128 den_e = 27 * static_cast<i128>(b) * b;
        if (num_e % den_e != 0) continue;
        i128 e = num_e / den_e;
        if (e < -bound || e > bound) continue;
        out.push_back({0, b, c, static_cast<i64>(d), static_cast<i64>(e)});
      }
    }
    return;
  }
  const i128 twelve_a = 12 * static_cast<i128>(a);
  for (i64 b = -bound; b <= bound; ++b) {
    for (i64 c = -bound; c <= bound; ++c) {
      const i128 base = I - static_cast<i128>(c) * c;
      for (i64 d = -bound; d <= bound; ++d) {
        i128 num = base + 3 * static_cast<i128>(b) * d;
        if (num % twelve_a != 0) continue;
        i128 e = num / twelve_a;
        if (e < -bound || e > bound) continue;
        IntForm f{a, b, c, d, static_cast<i64>(e)};
        if (invariants_match(f, I, J)) out.push_back(f);
      }
    }
  }
}

}  // namespace

BinaryQuartic to_quartic(const IntForm& f) {
  return BinaryQuartic{Rat(static_cast<long>(f[0])), Rat(static_cast<long>(f[1])), Rat(static_cast<long>(f[2])),
                       Rat(static_cast<long>(f[3])), Rat(static_cast<long>(f[4]))};
}

std::vector<IntForm> enumerate_forms(const Int& I_in, const Int& J_in, std::int64_t bound, unsigned threads) {
  if (bound < 0) throw ArgumentError("enumerate_forms: bound must be nonnegative");
  if (bound > 100000) throw ResourceError("enumerate_forms: bound too large");
  const i128 I = to_i64(I_in, "I"), J = to_i64(J_in, "J");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<IntForm>> parts(threads);
  auto worker = [&](unsigned t) {
    for (i64 a = -bound + static_cast<i64>(t); a <= bound; a += threads) enumerate_a_range(I, J, bound, a, parts[t]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::vector<IntForm> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntForm> enumerate_forms_naive(const Int& I_in, const Int& J_in, std::int64_t bound) {
  const i128 I = to_i64(I_in, "I"), J = to_i64(J_in, "J");
  std::vector<IntForm> out;
  for (i64 a = -bound; a <= bound; ++a)
    for (i64 b = -bound; b <= bound; ++b)
      for (i64 c = -bound; c <= bound; ++c)
        for (i64 d = -bound; d <= bound; ++d)
          for (i64 e = -bound; e <= bound; ++e) {
            if (a == 0 && b == 0) continue;
            IntForm f{a, b, c, d, e};
            if (invariants_match(f, I, J)) out.push_back(f);
          }
  return out;
}

bool has_rational_linear_factor(const IntForm& f) {
  if (f[0] == 0 || f[4] == 0) return true;
  const Int a(static_cast<long>(f[0])), b(static_cast<long>(f[1])), c(static_cast<long>(f[2])),
      d(static_cast<long>(f[3])), e(static_cast<long>(f[4]));
  // Rational root x = r / s with r | e and s | a.
  for (const Int& r : divisors(e)) {
    for (const Int& s : divisors(a)) {
      for (int sign : {1, -1}) {
        Int x = sign * r;
        Int x2 = x * x, s2 = s * s;
        if (a * x2 * x2 + b * x2 * x * s + c * x2 * s2 + d * x * s2 * s + e * s2 * s2 == 0) return true;
      }
    }
  }
  return false;
}

IntForm translate_x(const IntForm& f, std::int64_t t) {
  const auto [a, b, c, d, e] = f;
  return {a, 4 * a * t + b, 6 * a * t * t + 3 * b * t + c, 4 * a * t * t * t + 3 * b * t * t + 2 * c * t + d,
          a * t * t * t * t + b * t * t * t + c * t * t + d * t + e};
}

IntForm swap_xy(const IntForm& f) { return {f[4], f[3], f[2], f[1], f[0]}; }

IntForm translate_y(const IntForm& f, std::int64_t t) { return swap_xy(translate_x(swap_xy(f), t)); }

IntForm negate_y(const IntForm& f) { return {f[0], -f[1], f[2], -f[3], f[4]}; }

bool canonical_less(const IntForm& x, const IntForm& y) {
  auto key = [](const IntForm& f) {
    std::array<i64, 10> k;
    for (int i = 0; i < 5; ++i) {
      k[i] = f[i] < 0 ? -f[i] : f[i];
      k[5 + i] = f[i];
    }
    return k;
  };
  return key(x) < key(y);
}

BucketResult bucket_orbits(const std::vector<IntForm>& forms, std::int64_t working_bound, std::size_t move_budget) {
  BucketResult result;
  std::unordered_map<IntForm, std::size_t, FormHash> index;
  std::vector<std::size_t> parent;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto node = [&](const IntForm& f) -> std::pair<std::size_t, bool> {
    auto [it, inserted] = index.try_emplace(f, parent.size());
    if (inserted) parent.push_back(parent.size());
    return {it->second, inserted};
  };

  std::deque<IntForm> queue;
  for (const IntForm& f : forms) {
    if (node(f).second) queue.push_back(f);
  }
  while (!queue.empty()) {
    IntForm f = queue.front();
    queue.pop_front();
    std::size_t id = index.at(f);
    for (const IntForm& g : {translate_x(f, 1), translate_x(f, -1), translate_y(f, 1), translate_y(f, -1),
                             swap_xy(f), negate_y(f)}) {
      if (max_abs(g) > working_bound) continue;
      auto found = index.find(g);
      std::size_t gid;
      if (found == index.end()) {
        if (parent.size() >= move_budget) {
          result.budget_exhausted = true;
          continue;
        }
        gid = node(g).first;
        queue.push_back(g);
      } else {
        gid = found->second;
      }
      std::size_t ra = find(id), rb = find(gid);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  result.nodes_explored = parent.size();

  std::unordered_map<std::size_t, std::size_t> orbit_of_root;
  for (const IntForm& f : forms) {
    std::size_t root = find(index.at(f));
    auto [it, inserted] = orbit_of_root.try_emplace(root, result.orbits.size());
    if (inserted) result.orbits.emplace_back();
    FormOrbit& orbit = result.orbits[it->second];
    if (std::find(orbit.members.begin(), orbit.members.end(), f) == orbit.members.end()) orbit.members.push_back(f);
  }
  for (FormOrbit& orbit : result.orbits) {
    std::sort(orbit.members.begin(), orbit.members.end(), canonical_less);
    orbit.representative = orbit.members.front();
    orbit.has_linear_factor = has_rational_linear_factor(orbit.representative);
    for (const IntForm& m : orbit.members) {
      if (has_rational_linear_factor(m) != orbit.has_linear_factor) {
        throw std::logic_error("bucket_orbits: linear-factor flag differs inside an orbit");
      }
    }
  }
  std::sort(result.orbits.begin(), result.orbits.end(),
            [](const FormOrbit& x, const FormOrbit& y) { return canonical_less(x.representative, y.representative); });
  return result;
}

SelmerEstimate selmer_intersection_report(const Int& A, const Int& B, const TwistClassSet& S,
                                          const DescentOptions& options) {
  if (4 * A * A * A + 27 * B * B == 0) throw ArgumentError("selmer_intersection_report: singular curve");
  SelmerEstimate est;
  est.A = A;
  est.B = B;
  est.S = S.elements();
  est.bound = options.bound;
  est.working_bound = options.working_bound > 0 ? options.working_bound : 2 * options.bound;
  if (est.working_bound < est.bound) throw ArgumentError("working bound must be at least the coefficient bound");

  const Int I = -48 * A, J = -1728 * B;
  std::vector<IntForm> forms = enumerate_forms(I, J, options.bound, options.threads);
  est.forms_found = forms.size();
  BucketResult buckets = bucket_orbits(forms, est.working_bound, options.move_budget);
  est.budget_exhausted = buckets.budget_exhausted;

  bool nonidentity_soluble = false, nonidentity_s_soluble = false;
  for (FormOrbit& orbit : buckets.orbits) {
    if (orbit.has_linear_factor) {
      orbit.locally_soluble = orbit.locally_s_soluble = true;
      est.identity_present = true;
      continue;
    }
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      BinaryQuartic g = to_quartic(orbit.members[i]);
      bool sol = locally_soluble(g);
      bool s_sol = sol && locally_s_soluble(g, S);
      if (i == 0) {
        orbit.locally_soluble = sol;
        orbit.locally_s_soluble = s_sol;
      } else if (sol != orbit.locally_soluble || s_sol != orbit.locally_s_soluble) {
        throw std::logic_error("selmer_intersection_report: solubility differs inside an orbit");
      }
    }
    if (orbit.locally_soluble) {
      ++est.sel2_lower;
      nonidentity_soluble = true;
    }
    if (orbit.locally_s_soluble) {
      ++est.intersection_lower;
      nonidentity_s_soluble = true;
    }
  }
  if (est.identity_present) {
    ++est.sel2_lower;
    ++est.intersection_lower;
  }
  est.certified_sel2_lower = (est.identity_present ? 1 : 0) + (nonidentity_soluble ? 1 : 0);
  est.certified_intersection_lower = (est.identity_present ? 1 : 0) + (nonidentity_s_soluble ? 1 : 0);
  est.orbits = std::move(buckets.orbits);
  return est;
}

std::vector<ExamplePointCheck> verify_example_points() {
  struct Case {
    const char* text;
    long A, B, D, x, y;
  };
  const Case cases[] = {
      {"(0,-1) on y^2 = x^3 + x + 1", 1, 1, 1, 0, -1},
      {"(-1,1) on -y^2 = x^3 + x + 1", 1, 1, -1, -1, 1},
      {"(0,1) on y^2 = x^3 - 3x + 1", -3, 1, 1, 0, 1},
      {"(1,1) on -y^2 = x^3 - 3x + 1", -3, 1, -1, 1, 1},
  };
  std::vector<ExamplePointCheck> out;
  for (const Case& c : cases) {
    Int x(c.x), y(c.y);
    bool holds = Int(c.D) * y * y == x * x * x + Int(c.A) * x + Int(c.B);
    out.push_back({c.text, Int(c.A), Int(c.B), Int(c.D), x, y, holds});
  }
  return out;
}

DescentCache DescentCache::from_environment() {
  if (const char* dir = std::getenv("SELMER_CACHE_DIR"); dir != nullptr && *dir != '\0') return DescentCache(dir);
  return DescentCache(".selmer-cache");
}

std::filesystem::path DescentCache::path_for(const Int& A, const Int& B, const std::vector<Int>& S,
                                             const DescentOptions& options) const {
  std::ostringstream name;
  std::int64_t wb = options.working_bound > 0 ? options.working_bound : 2 * options.bound;
  name << "descent-v" << kFormatVersion << "_A" << A.get_str() << "_B" << B.get_str() << "_S";
  for (std::size_t i = 0; i < S.size(); ++i) name << (i ? "," : "") << S[i].get_str();
  name << "_b" << options.bound << "_w" << wb << "_m" << options.move_budget << ".json";
  return dir_ / name.str();
}

std::optional<SelmerEstimate> DescentCache::load(const Int& A, const Int& B, const TwistClassSet& S,
                                                 const DescentOptions& options) const {
  std::filesystem::path path = path_for(A, B, S.elements(), options);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.value("format_version", -1) != kFormatVersion) return std::nullopt;
    SelmerEstimate est = selmer_estimate_from_json(doc.at("estimate"));
    if (est.A != A || est.B != B || est.S != S.elements() || est.bound != options.bound) return std::nullopt;
    return est;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void DescentCache::store(const SelmerEstimate& estimate, const DescentOptions& options) const {
  std::filesystem::create_directories(dir_);
  std::filesystem::path path = path_for(estimate.A, estimate.B, estimate.S, options);
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) throw ResourceError("cannot write cache file " + tmp.string());
    nlohmann::json doc{{"format_version", kFormatVersion}, {"estimate", to_json(estimate)}};
    out << doc.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace selmer
