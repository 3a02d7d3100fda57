#include "pdtool/json_io.hpp"

#include <climits>

namespace pdtool {

namespace {

[[noreturn]] void bad(const std::string& what) { throw PreconditionError("malformed JSON: " + what); }

int int_param(const Json& params, std::size_t i, const std::string& name) {
  if (!params.is_array() || params.size() <= i || !params[i].is_number_integer())
    bad(name + " needs an integer parameter");
  return params[i].get<int>();
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("integer string '" + j.get<std::string>() + "'");
    return v;
  }
  bad("expected an integer or a decimal string");
}

}  // namespace

FamilyDescriptor family_from_json(const Json& j) {
  if (j.is_string()) return FamilyDescriptor::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) bad("family needs a name");
  const std::string name = j["name"];
  const Json params = j.value("params", Json::array());
  if (name == "Cyclic") return FamilyDescriptor::cyclic(int_param(params, 0, name));
  if (name == "Dihedral") return FamilyDescriptor::dihedral(int_param(params, 0, name));
  if (name == "GeneralisedQuaternion") return FamilyDescriptor::quaternion(int_param(params, 0, name));
  if (name == "Symmetric") return FamilyDescriptor::symmetric(int_param(params, 0, name));
  if (name == "Alternating") return FamilyDescriptor::alternating(int_param(params, 0, name));
  if (name == "SL(2,3)" || name == "SL23") return FamilyDescriptor::sl23();
  if (name == "DirectProduct") {
    if (!params.is_array() || params.size() != 2) bad("DirectProduct needs two factors");
    return FamilyDescriptor::product(family_from_json(params[0]), family_from_json(params[1]));
  }
  bad("unknown family '" + name + "'");
}

Json family_to_json(const FamilyDescriptor& f) {
  using K = FamilyDescriptor::Kind;
  switch (f.kind) {
    case K::Cyclic: return {{"name", "Cyclic"}, {"params", f.params}};
    case K::Dihedral: return {{"name", "Dihedral"}, {"params", f.params}};
    case K::GeneralisedQuaternion: return {{"name", "GeneralisedQuaternion"}, {"params", f.params}};
    case K::Symmetric: return {{"name", "Symmetric"}, {"params", f.params}};
    case K::Alternating: return {{"name", "Alternating"}, {"params", f.params}};
    case K::SL23: return {{"name", "SL(2,3)"}, {"params", Json::array()}};
    case K::DirectProduct:
      return {{"name", "DirectProduct"}, {"params", {family_to_json(f.factors.at(0)), family_to_json(f.factors.at(1))}}};
  }
  return nullptr;
}

GroupPtr group_from_json(const Json& j, const Limits& limits) {
  if (j.is_object() && j.contains("family")) return from_family(family_from_json(j["family"]), limits);
  if (j.is_object() && j.contains("permutations")) {
    const Json& p = j["permutations"];
    if (!p.is_object() || !p.contains("degree") || !p.contains("generators") || !p["generators"].is_array())
      bad("permutations need degree and generators");
    const int degree = p["degree"].get<int>();
    std::vector<Permutation> gens;
    for (const auto& g : p["generators"]) {
      if (!g.is_array()) bad("each generator must be an image list");
      Permutation perm;
      for (const auto& x : g) {
        if (!x.is_number_integer() || x.get<long long>() < 0) bad("permutation images must be nonnegative integers");
        perm.push_back(x.get<std::uint32_t>());
      }
      if (static_cast<int>(perm.size()) != degree)
        throw PreconditionError("generator of length " + std::to_string(perm.size()) + " on degree " +
                                std::to_string(degree));
      gens.push_back(std::move(perm));
    }
    return from_permutations(gens, limits);
  }
  bad("group needs a \"family\" or \"permutations\" key");
}

Json group_to_json(const FiniteGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.origin().generators) gens.push_back(p);
  Json name = g.origin().family.empty() ? Json(nullptr) : Json(g.origin().family);
  return {{"order", g.order()},
          {"name", name},
          {"permutations", {{"degree", g.origin().degree}, {"generators", gens}}}};
}

Json group_summary_to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"name", g.origin().family.empty() ? Json(nullptr) : Json(g.origin().family)}};
}

Json matrix_to_json(const IntMatrix& m) {
  Json t = Json::array();
  for (const auto& x : m.triplets()) t.push_back({x.row, x.col, x.value.get_str()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"triplets", t}};
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols")) bad("matrix needs rows and cols");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  std::vector<Triplet> t;
  for (const auto& x : j.value("triplets", Json::array())) {
    if (!x.is_array() || x.size() != 3) bad("triplet must be [row, col, value]");
    const auto r = x[0].get<std::size_t>(), c = x[1].get<std::size_t>();
    if (r >= rows || c >= cols) bad("triplet index out of range");
    t.push_back({r, c, integer_from_json(x[2])});
  }
  return IntMatrix::from_triplets(rows, cols, std::move(t));
}

Json invariants_to_json(const AbelianInvariants& a) {
  Json t = Json::array();
  for (const auto& v : a.torsion) t.push_back(integer_to_json(v));
  return {{"free_rank", a.free_rank}, {"torsion", t}};
}

AbelianInvariants invariants_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("free_rank")) bad("invariants need free_rank");
  std::vector<Integer> orders;
  for (const auto& v : j.value("torsion", Json::array())) orders.push_back(integer_from_json(v));
  return AbelianInvariants::from_orders(j["free_rank"].get<std::size_t>(), std::move(orders));
}

Json profile_to_json(const DimensionProfile& p) {
  Json comps = Json::array();
  for (const auto& c : p.components) comps.push_back({{"d_G", c.d_G ? Json(*c.d_G) : Json(nullptr)}, {"d_e", c.d_e}});
  return {{"components", comps}, {"one_connected", p.fixed_inclusion_1_connected}};
}

DimensionProfile profile_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array()) bad("profile needs components");
  DimensionProfile p;
  for (const auto& c : j["components"]) {
    if (!c.is_object() || !c.contains("d_e") || !c["d_e"].is_number_integer()) bad("component needs integer d_e");
    DimensionComponent comp;
    comp.d_e = c["d_e"].get<int>();
    if (c.contains("d_G") && !c["d_G"].is_null()) {
      if (!c["d_G"].is_number_integer()) bad("d_G must be an integer or null");
      comp.d_G = c["d_G"].get<int>();
    }
    p.components.push_back(comp);
  }
  p.fixed_inclusion_1_connected = j.value("one_connected", false);
  p.validate();
  return p;
}

Json bound_to_json(const ConnectivityBound& b) {
  if (b.is_unbounded()) return "unbounded";
  return b.value();
}

Json report_to_json(const PeriodicityReport& r) {
  Json witness = {{"state", to_string(r.via_cohomology.state)}};
  if (r.via_cohomology.state == CohomologyWitness::State::Found) witness["degree"] = r.via_cohomology.degree;
  return {{"group", group_summary_to_json(*r.group)},
          {"via_abelian", r.via_abelian},
          {"via_sylow", r.via_sylow},
          {"via_cohomology", witness},
          {"period", r.period ? Json(*r.period) : Json(nullptr)},
          {"search_bound", r.search_bound}};
}

Json swan_to_json(const SwanClassification& c) {
  return {{"group", group_summary_to_json(*c.group)},
          {"dimension", c.dimension},
          {"oriented_count", c.oriented_count},
          {"unoriented_count", c.unoriented_count},
          {"k_invariants", c.k_invariants},
          {"modulus", c.group->order()},
          {"special_case", to_string(c.special_case)}};
}

Json trace_to_json(const DerivationTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json inputs = Json::object();
    for (const auto& [k, v] : s.inputs) inputs[k] = v == LLONG_MAX ? Json("unbounded") : Json(v);
    steps.push_back({{"rule", s.rule},
                     {"source", s.source},
                     {"component", s.component ? Json(*s.component) : Json(nullptr)},
                     {"inputs", inputs},
                     {"kind", s.is_constraint ? "constraint on n" : "connectivity"},
                     {"output", bound_to_json(s.output)}});
  }
  Json result = nullptr;
  if (t.result) result = {{"k", bound_to_json(*t.result)}, {"meaning", t.result->meaning()}};
  return {{"steps", steps}, {"result", result}};
}

}  // namespace pdtool
