#include "selmer/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>

#include "selmer/cubic_algebra.hpp"
#include "selmer/curve.hpp"
#include "selmer/densities.hpp"
#include "selmer/descent.hpp"
#include "selmer/errors.hpp"
#include "selmer/factor.hpp"
#include "selmer/isotropy.hpp"
#include "selmer/json_io.hpp"
#include "selmer/solubility.hpp"

namespace selmer {

namespace {

using nlohmann::json;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  for (const auto& s : split_commas(text)) out.push_back(parse_int(s));
  return out;
}

BinaryQuartic parse_form(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 5) throw ArgumentError("--form expects five comma-separated coefficients");
  return {parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]), parse_rat(parts[3]), parse_rat(parts[4])};
}

json header(const std::string& command, json config, std::optional<std::uint64_t> seed) {
  return json{{"version", kVersion},
              {"command", command},
              {"config", std::move(config)},
              {"seed", seed ? json(*seed) : json(nullptr)}};
}

void emit(std::ostream& out, json doc) { out << doc.dump(2) << "\n"; }

std::string strs(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

json strings(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(to_string(x));
  return out;
}

struct Options {
  // invariants
  std::string form, curve;
  // solubility
  std::string twist_gens, place;
  // tate
  std::string A, B, p;
  // densities
  std::string D, gens;
  unsigned long truncation = 10000;
  bool check_omega = false;
  // identity-suite
  unsigned long pmax = 997;
  // isotropy
  std::uint32_t iso_p = 2;
  int iso_n = 1;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  bool exact = true;
  unsigned threads = 0;
  // descent
  std::int64_t bound = 20;
  std::int64_t working_bound = 0;
  std::size_t move_budget = 2'000'000;
  bool no_cache = false;
  // trend
  std::string height = "10000";
};

int cmd_invariants(const Options& o, std::ostream& out) {
  if (o.form.empty() == o.curve.empty()) throw ArgumentError("give exactly one of --form or --curve");
  if (!o.form.empty()) {
    BinaryQuartic g = parse_form(o.form);
    InvariantPair ij = invariants(g);
    json doc = header("invariants", {{"form", o.form}}, std::nullopt);
    doc["form"] = to_json(g);
    doc["I"] = to_string(ij.I);
    doc["J"] = to_string(ij.J);
    doc["discriminant"] = to_string(ij.discriminant());
    doc["height"] = to_string(ij.height());
    doc["g4"] = to_json(covariant_g4(g));
    json g6 = json::array();
    for (const Rat& c : covariant_g6(g).coeffs) g6.push_back(to_string(c));
    doc["g6"] = g6;
    if (is_nondegenerate(g)) {
      doc["real_type"] = to_string(classify_real(g));
      auto [z, point] = z_invariant_auto(g);
      doc["z_norm"] = to_string(z.norm());
      doc["z_point"] = json::array({to_string(point.first), to_string(point.second)});
    }
    emit(out, doc);
    return kExitOk;
  }
  auto ab = parse_int_list(o.curve);
  if (ab.size() != 2) throw ArgumentError("--curve expects A,B");
  InvariantPair ij = ij_of_curve(ab[0], ab[1]);
  json doc = header("invariants", {{"curve", o.curve}}, std::nullopt);
  doc["A"] = to_string(ab[0]);
  doc["B"] = to_string(ab[1]);
  doc["I"] = to_string(ij.I);
  doc["J"] = to_string(ij.J);
  doc["discriminant"] = to_string(ij.discriminant());
  doc["naive_height"] = to_string(naive_height(ab[0], ab[1]));
  doc["bs_height"] = to_string(bs_height(ab[0], ab[1]));
  doc["epsilon_member"] = epsilon_member(ab[0], ab[1]);
  emit(out, doc);
  return kExitOk;
}

int cmd_solubility(const Options& o, std::ostream& out) {
  if (o.form.empty()) throw ArgumentError("--form is required");
  BinaryQuartic g = parse_form(o.form);
  TwistClassSet S = TwistClassSet::generated_by(o.twist_gens.empty() ? std::vector<Int>{} : parse_int_list(o.twist_gens));
  json doc = header("solubility", {{"form", o.form}, {"S_generators", o.twist_gens}, {"place", o.place}}, std::nullopt);
  doc["S"] = strings(S.elements());
  if (!o.place.empty()) {
    Place place = o.place == "inf" ? Place::infinity() : Place::prime(parse_int(o.place));
    doc["place"] = place.to_string();
    doc["S_soluble"] = s_soluble(g, place, S);
    emit(out, doc);
    return kExitOk;
  }
  json places = json::object();
  places["inf"] = s_soluble(g, Place::infinity(), S);
  for (const Int& p : critical_primes(g, S)) places[to_string(p)] = s_soluble(g, Place::prime(p), S);
  doc["critical_places"] = places;
  doc["locally_S_soluble"] = locally_s_soluble(g, S);
  emit(out, doc);
  return kExitOk;
}

int cmd_tate(const Options& o, std::ostream& out) {
  Int A = parse_int(o.A), B = parse_int(o.B), p = parse_int(o.p);
  CurveModel m = minimalize_at_p(A, B, p);
  LocalReductionData r = kodaira_type(m.A, m.B, p);
  json doc = header("tate", {{"A", o.A}, {"B", o.B}, {"p", o.p}}, std::nullopt);
  doc["minimal_model"] = {{"A", to_string(m.A)}, {"B", to_string(m.B)}};
  doc["discriminant_valuation"] = valuation(m.discriminant(), p).value();
  doc["reduction"] = to_json(r);
  emit(out, doc);
  return kExitOk;
}

int cmd_densities(const Options& o, std::ostream& out) {
  if (o.D.empty() == o.gens.empty()) throw ArgumentError("give exactly one of --D or --gens");
  std::vector<Int> gens = o.D.empty() ? parse_int_list(o.gens) : std::vector<Int>{parse_int(o.D)};
  MultiquadraticField K = MultiquadraticField::from_generators(gens);
  if (K.is_trivial()) throw ArgumentError("the field must be a nontrivial extension (D != 1 modulo squares)");
  DensityReport r = a_bounds(K, o.truncation);
  json config{{"generators", strs(gens)}, {"P", o.truncation}, {"check_omega", o.check_omega}};
  json doc = header("densities", config, std::nullopt);
  doc["report"] = to_json(r);
  auto [lo, hi] = average_intersection_interval(r);
  doc["average_intersection_interval"] = {rat_with_decimal(lo), rat_with_decimal(hi)};
  doc["tail_certificate"] = unramified_tail_certificate();
  if (K.generators().size() == 1) {
    Rat delta = r.lower / 4;
    doc["positive_proportion_lower"] = rat_with_decimal(delta * delta / 15, 20);
  }
  if (o.check_omega) {
    if (K.generators().size() != 1) throw ArgumentError("--check-omega needs a single generator");
    OmegaCheck c = omega_bound_check(K.generators()[0]);
    doc["omega_check"] = {{"holds", c.holds},
                          {"count", c.count},
                          {"product", rat_with_decimal(c.product)},
                          {"bound", rat_with_decimal(c.bound)}};
  }
  emit(out, doc);
  return kExitOk;
}

int cmd_identity_suite(const Options& o, std::ostream& out) {
  if (o.pmax < 5) throw ArgumentError("--pmax must be at least 5");
  json doc = header("identity-suite", {{"pmax", o.pmax}}, std::nullopt);
  json profiles = json::object();
  bool all_ok = true;
  for (ProfileKind kind : {ProfileKind::RamifiedQuadratic, ProfileKind::UnramifiedQuadratic, ProfileKind::Biquadratic}) {
    long checked = 0, failures = 0;
    json first_failure = nullptr;
    for (std::uint64_t p : primes_up_to(o.pmax)) {
      if (p < 5) continue;
      ++checked;
      Rat diff = mass_identity_check(kind, Int(static_cast<unsigned long>(p)));
      if (diff != 0) {
        if (failures == 0) first_failure = {{"p", p}, {"difference", rat_with_decimal(diff)}};
        ++failures;
      }
    }
    all_ok = all_ok && failures == 0;
    profiles[to_string(kind)] = {{"primes_checked", checked}, {"failures", failures}, {"first_failure", first_failure}};
  }
  doc["profiles"] = profiles;
  doc["pass"] = all_ok;
  emit(out, doc);
  return all_ok ? kExitOk : kExitVerification;
}

int cmd_isotropy(const Options& o, std::ostream& out) {
  QuadraticSpaceFp V(o.iso_p, o.iso_n);
  auto empirical = pair_distribution(o.iso_p, o.iso_n, o.trials, o.seed, o.threads);
  std::vector<Rat> exact;
  bool have_exact = o.exact && enumeration_work(o.iso_p, o.iso_n) <= Int(1'000'000);
  if (have_exact) exact = exact_pair_distribution(o.iso_p, o.iso_n);
  out << "# version=" << kVersion << " command=isotropy p=" << o.iso_p << " n=" << o.iso_n
      << " trials=" << o.trials << " seed=" << o.seed << "\n";
  out << "p,n,r,empirical,bound,stderr,exact_if_available\n";
  for (int r = 0; r <= o.iso_n; ++r) {
    std::ostringstream row;
    row << o.iso_p << "," << o.iso_n << "," << r << "," << std::setprecision(8) << empirical[r].value() << ","
        << to_string(pair_bound(o.iso_p, r)) << "," << std::setprecision(8) << empirical[r].standard_error() << ","
        << (have_exact ? to_string(exact[r]) : "");
    out << row.str() << "\n";
  }
  return kExitOk;
}

TwistClassSet twist_set_from(const Options& o) {
  std::vector<Int> gens;
  if (!o.D.empty()) gens.push_back(parse_int(o.D));
  if (!o.twist_gens.empty()) {
    for (const Int& g : parse_int_list(o.twist_gens)) gens.push_back(g);
  }
  return TwistClassSet::generated_by(gens);
}

int cmd_descent(const Options& o, std::ostream& out) {
  Int A = parse_int(o.A), B = parse_int(o.B);
  TwistClassSet S = twist_set_from(o);
  DescentOptions opts{o.bound, o.working_bound, o.move_budget, o.threads};
  std::optional<SelmerEstimate> est;
  DescentCache cache = DescentCache::from_environment();
  if (!o.no_cache) est = cache.load(A, B, S, opts);
  if (!est) {
    est = selmer_intersection_report(A, B, S, opts);
    if (!o.no_cache) cache.store(*est, opts);
  }
  json config{{"A", o.A}, {"B", o.B}, {"S", strs(S.elements())}, {"bound", o.bound},
              {"working_bound", est->working_bound}, {"move_budget", o.move_budget}};
  json doc = header("descent", config, std::nullopt);
  doc["estimate"] = to_json(*est);
  emit(out, doc);
  return kExitOk;
}

int cmd_verify_examples(std::ostream& out) {
  json doc = header("verify-examples", json::object(), std::nullopt);
  json checks = json::array();
  bool all = true;
  for (const auto& c : verify_example_points()) {
    checks.push_back({{"check", c.description}, {"holds", c.holds}});
    all = all && c.holds;
  }
  doc["checks"] = checks;
  doc["pass"] = all;
  emit(out, doc);
  return all ? kExitOk : kExitVerification;
}

int cmd_trend(const Options& o, std::ostream& out) {
  Int H = parse_int(o.height);
  Int D = o.D.empty() ? Int(-1) : parse_int(o.D);
  TwistClassSet S = TwistClassSet::generated_by({D});
  DescentOptions opts{o.bound, o.working_bound, o.move_budget, o.threads};
  long curves = 0, sum_intersection = 0, sum_witness_term = 0, sum_certified = 0;
  for (Int A = 0; 4 * A * A * A <= H; ++A) {
    for (int sign : {1, -1}) {
      if (A == 0 && sign == -1) continue;
      Int a = sign * A;
      for (Int B = 0; 27 * B * B <= H; ++B) {
        for (int bs : {1, -1}) {
          if (B == 0 && bs == -1) continue;
          Int b = bs * B;
          if (!epsilon_member(a, b)) continue;
          SelmerEstimate est = selmer_intersection_report(a, b, S, opts);
          ++curves;
          sum_intersection += est.intersection_lower;
          sum_witness_term += 1 + 2 * (est.intersection_lower - 1);
          sum_certified += est.certified_intersection_lower;
        }
      }
    }
  }
  if (curves == 0) throw ArgumentError("no curves below the height bound");
  DensityReport r = a_bounds(MultiquadraticField::from_generators({D}), o.truncation);
  auto [lo, hi] = average_intersection_interval(r);
  json config{{"height", o.height}, {"D", to_string(D)}, {"bound", o.bound}, {"P", o.truncation}};
  json doc = header("trend", config, std::nullopt);
  doc["curves"] = curves;
  doc["mean_intersection_lower"] = rat_with_decimal(make_rat(sum_intersection, curves), 6);
  doc["mean_one_plus_two_witnesses"] = rat_with_decimal(make_rat(sum_witness_term, curves), 6);
  doc["mean_certified_intersection_lower"] = rat_with_decimal(make_rat(sum_certified, curves), 6);
  doc["predicted_average_interval"] = {rat_with_decimal(lo, 6), rat_with_decimal(hi, 6)};
  doc["note"] = "qualitative comparison only; small coefficient boxes undercount Selmer classes";
  emit(out, doc);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for binary quartics, local solubility, local densities and isotropic subspaces", "selmer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "TOML file with option values; subcommand options go in a [subcommand] table");
  Options o;

  auto* inv = app.add_subcommand("invariants", "Invariants and covariants of a form, or I, J of a curve");
  inv->add_option("--form", o.form, "a,b,c,d,e");
  inv->add_option("--curve", o.curve, "A,B");

  auto* sol = app.add_subcommand("solubility", "Local (S-)solubility of z^2 = theta g(x, y)");
  sol->add_option("--form", o.form, "a,b,c,d,e (integral)")->required();
  sol->add_option("--S", o.twist_gens, "generators of S, comma-separated");
  sol->add_option("--place", o.place, "a prime or 'inf'; default: every critical place");

  auto* tate = app.add_subcommand("tate", "Reduction type at a prime p >= 5");
  tate->add_option("A", o.A)->required();
  tate->add_option("B", o.B)->required();
  tate->add_option("p", o.p)->required();

  auto* dens = app.add_subcommand("densities", "Local factors and certified bounds for a multiquadratic field");
  dens->add_option("--D", o.D, "squarefree D for Q(sqrt D)");
  dens->add_option("--gens", o.gens, "generators D1,D2,...");
  dens->add_option("--P", o.truncation, "exact product up to this prime")->capture_default_str();
  dens->add_flag("--check-omega", o.check_omega, "check the (23/24)^omega bound");

  auto* ids = app.add_subcommand("identity-suite", "Mass identity across profiles and primes");
  ids->add_option("--pmax", o.pmax)->capture_default_str();

  auto* iso = app.add_subcommand("isotropy", "Monte Carlo intersection dimensions of maximal isotropics (CSV)");
  iso->add_option("p", o.iso_p)->required();
  iso->add_option("n", o.iso_n)->required();
  iso->add_option("trials", o.trials)->capture_default_str();
  iso->add_option("--seed", o.seed)->capture_default_str();
  iso->add_option("--threads", o.threads, "0 = hardware concurrency");
  iso->add_flag("!--no-exact", o.exact, "skip the exact enumeration column");

  auto* desc = app.add_subcommand("descent", "Orbit counts of soluble quartics for y^2 = x^3 + A x + B");
  desc->add_option("A", o.A)->required();
  desc->add_option("B", o.B)->required();
  desc->add_option("--D", o.D, "twist D; S = <D>");
  desc->add_option("--S", o.twist_gens, "additional generators of S");
  desc->add_option("--bound", o.bound)->capture_default_str();
  desc->add_option("--working-bound", o.working_bound, "default 2 * bound");
  desc->add_option("--move-budget", o.move_budget)->capture_default_str();
  desc->add_option("--threads", o.threads, "0 = hardware concurrency");
  desc->add_flag("--no-cache", o.no_cache, "ignore and do not write the cache");

  app.add_subcommand("verify-examples", "Exact checks of the worked rational points");

  auto* trend = app.add_subcommand("trend", "Mean intersection counts over curves of bounded height");
  trend->add_option("--height", o.height)->capture_default_str();
  trend->add_option("--D", o.D, "twist D (default -1)");
  trend->add_option("--bound", o.bound)->capture_default_str();
  trend->add_option("--P", o.truncation)->capture_default_str();
  trend->add_option("--threads", o.threads);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(o, out);
    if (sol->parsed()) return cmd_solubility(o, out);
    if (tate->parsed()) return cmd_tate(o, out);
    if (dens->parsed()) return cmd_densities(o, out);
    if (ids->parsed()) return cmd_identity_suite(o, out);
    if (iso->parsed()) return cmd_isotropy(o, out);
    if (desc->parsed()) return cmd_descent(o, out);
    if (trend->parsed()) return cmd_trend(o, out);
    return cmd_verify_examples(out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  }
}

}  // namespace selmer
