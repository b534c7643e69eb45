#include "selmer/json_io.hpp"

#include "selmer/errors.hpp"

namespace selmer {

using nlohmann::json;

json to_json(const Rat& x) { return to_string(x); }
json to_json(const Int& x) { return to_string(x); }

json rat_with_decimal(const Rat& x, unsigned digits) {
  return json{{"exact", to_string(x)}, {"decimal", to_decimal(x, digits)}};
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ArgumentError("expected a rational string");
}

Int int_from_json(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long>());
  throw ArgumentError("expected an integer string");
}

json to_json(const BinaryQuartic& g) {
  json out = json::array();
  for (const Rat& c : g.coefficients()) out.push_back(to_string(c));
  return out;
}

BinaryQuartic quartic_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5) throw ArgumentError("a quartic is an array of five coefficients");
  return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]), rat_from_json(j[3]), rat_from_json(j[4])};
}

json to_json(const InvariantPair& ij) { return json{{"I", to_string(ij.I)}, {"J", to_string(ij.J)}}; }

json to_json(const LocalReductionData& r) {
  return json{{"type", r.type_name()}, {"n", r.n}, {"subtype", to_string(r.subtype)}, {"tamagawa", r.tamagawa}};
}

json to_json(const DensityReport& r) {
  json gens = json::array();
  for (const Int& g : r.generators) gens.push_back(to_string(g));
  json profiles = json::object();
  json factors = json::object();
  factors["inf"] = to_string(r.L_infinity);
  for (const auto& [p, entry] : r.factors) {
    profiles[to_string(p)] = to_string(entry.first);
    factors[to_string(p)] = to_string(entry.second);
  }
  return json{{"generators", gens},
              {"truncation", r.truncation},
              {"profile_by_prime", profiles},
              {"L_by_place", factors},
              {"tail_lower", to_string(r.tail_lower)},
              {"lower", to_string(r.lower)},
              {"upper", to_string(r.upper)},
              {"lower_decimal", to_decimal(r.lower, 12)},
              {"upper_decimal", to_decimal(r.upper, 12)}};
}

json to_json(const IntForm& f) { return json::array({f[0], f[1], f[2], f[3], f[4]}); }

namespace {

IntForm int_form_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5) throw ArgumentError("a form is an array of five integers");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(), j[3].get<std::int64_t>(),
          j[4].get<std::int64_t>()};
}

}  // namespace

json to_json(const SelmerEstimate& e) {
  json S = json::array();
  for (const Int& t : e.S) S.push_back(to_string(t));
  json orbits = json::array();
  for (const FormOrbit& o : e.orbits) {
    json members = json::array();
    for (const IntForm& m : o.members) members.push_back(to_json(m));
    orbits.push_back(json{{"representative", to_json(o.representative)},
                          {"members", members},
                          {"has_linear_factor", o.has_linear_factor},
                          {"locally_soluble", o.locally_soluble},
                          {"locally_S_soluble", o.locally_s_soluble}});
  }
  return json{{"curve", json{{"A", to_string(e.A)}, {"B", to_string(e.B)}}},
              {"S", S},
              {"bound", e.bound},
              {"working_bound", e.working_bound},
              {"forms_found", e.forms_found},
              {"sel2_lower", e.sel2_lower},
              {"intersection_lower", e.intersection_lower},
              {"certified_sel2_lower", e.certified_sel2_lower},
              {"certified_intersection_lower", e.certified_intersection_lower},
              {"identity_present", e.identity_present},
              {"budget_exhausted", e.budget_exhausted},
              {"q_class_count_certified", e.q_class_count_certified},
              {"orbits", orbits}};
}

SelmerEstimate selmer_estimate_from_json(const json& j) {
  SelmerEstimate e;
  e.A = int_from_json(j.at("curve").at("A"));
  e.B = int_from_json(j.at("curve").at("B"));
  for (const json& t : j.at("S")) e.S.push_back(int_from_json(t));
  e.bound = j.at("bound").get<std::int64_t>();
  e.working_bound = j.at("working_bound").get<std::int64_t>();
  e.forms_found = j.at("forms_found").get<std::size_t>();
  e.sel2_lower = j.at("sel2_lower").get<long>();
  e.intersection_lower = j.at("intersection_lower").get<long>();
  e.certified_sel2_lower = j.at("certified_sel2_lower").get<long>();
  e.certified_intersection_lower = j.at("certified_intersection_lower").get<long>();
  e.identity_present = j.at("identity_present").get<bool>();
  e.budget_exhausted = j.at("budget_exhausted").get<bool>();
  e.q_class_count_certified = j.at("q_class_count_certified").get<bool>();
  for (const json& o : j.at("orbits")) {
    FormOrbit orbit;
    orbit.representative = int_form_from_json(o.at("representative"));
    for (const json& m : o.at("members")) orbit.members.push_back(int_form_from_json(m));
    orbit.has_linear_factor = o.at("has_linear_factor").get<bool>();
    orbit.locally_soluble = o.at("locally_soluble").get<bool>();
    orbit.locally_s_soluble = o.at("locally_S_soluble").get<bool>();
    e.orbits.push_back(std::move(orbit));
  }
  return e;
}

}  // namespace selmer
