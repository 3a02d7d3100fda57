#include "pdtool/cli.hpp"

#include <CLI11.hpp>
#include <climits>
#include <fstream>
#include <map>
#include <sstream>

#include "pdtool/json_io.hpp"

namespace pdtool::cli {

namespace {

struct Options {
  std::string family;
  std::string group_json;
  std::string format = "text";
  std::string route = "reduced";
  std::string components;
  std::string rule;
  std::string args;
  int degree = -1;
  int dim = -1;
  int degree_bound = 8;
  bool one_connected = false;
  bool strict = false;
  bool verbose = false;
};

class Inapplicable : public std::runtime_error {
 public:
  Inapplicable(const std::string& why, Json result) : std::runtime_error(why), result(std::move(result)) {}
  Json result;
};

Route parse_route(const std::string& s) {
  if (s == "reduced") return Route::Reduced;
  if (s == "bar") return Route::Bar;
  if (s == "periodic") return Route::Periodic;
  throw PreconditionError("unknown route '" + s + "' (expected reduced, bar or periodic)");
}

GroupPtr load_group(const Options& o, const Limits& limits) {
  if (!o.family.empty() && !o.group_json.empty()) throw PreconditionError("give either --family or --group-json, not both");
  if (!o.family.empty()) return from_family(FamilyDescriptor::parse(o.family), limits);
  if (o.group_json.empty()) throw PreconditionError("this command needs a group (--family NAME or --group-json FILE)");
  std::string text;
  if (o.group_json.front() == '{') {
    text = o.group_json;  // inline JSON
  } else {
    std::ifstream in(o.group_json);
    if (!in) throw PreconditionError("cannot read group file '" + o.group_json + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(std::string("group JSON does not parse: ") + e.what());
  }
  return group_from_json(j, limits);
}

std::string group_name(const FiniteGroup& g) {
  return g.origin().family.empty() ? "G (order " + std::to_string(g.order()) + ")" : g.origin().family;
}

DimensionProfile load_profile(const Options& o) {
  if (o.components.empty()) throw PreconditionError("this command needs --components dG:dE[,dG:dE...]");
  DimensionProfile p;
  std::stringstream ss(o.components);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw PreconditionError("component '" + item + "' is not of the form dG:dE");
    const std::string g = item.substr(0, colon), e = item.substr(colon + 1);
    DimensionComponent c;
    try {
      std::size_t used = 0;
      c.d_e = std::stoi(e, &used);
      if (used != e.size()) throw std::invalid_argument(e);
      if (g != "none" && g != "null" && g != "empty") {
        c.d_G = std::stoi(g, &used);
        if (used != g.size()) throw std::invalid_argument(g);
      }
    } catch (const std::logic_error&) {
      throw PreconditionError("component '" + item + "' is not of the form dG:dE (use none:dE for empty fixed points)");
    }
    p.components.push_back(c);
  }
  p.fixed_inclusion_1_connected = o.one_connected;
  p.validate();
  return p;
}

std::vector<ConnectivityBound> parse_args(const std::string& text) {
  std::vector<ConnectivityBound> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "unbounded" || item == "inf") {
      v.push_back(ConnectivityBound::unbounded());
      continue;
    }
    try {
      std::size_t used = 0;
      const long long x = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if (x < ConnectivityBound::kNone) throw PreconditionError("argument " + item + " is below -2");
      v.push_back(ConnectivityBound::of(x));
    } catch (const std::logic_error&) {
      throw PreconditionError("argument '" + item + "' is not an integer");
    }
  }
  return v;
}

struct Rule {
  std::vector<std::string> params;
  std::string description;
};

const std::map<std::string, Rule>& rules() {
  static const std::map<std::string, Rule> r = {
      {"blakers-massey", {{"n", "m"}, "n + m"}},
      {"mapping-space", {{"c_e", "d_e", "c_G", "d_G"}, "min(c_e - d_e, c_G - d_G); pass only c_e,d_e for a free pair"}},
      {"join-unit", {{"k"}, "2k + 1, k >= 0"}},
      {"join-stabilisation", {{"k", "d"}, "2k + 1 - d"}},
      {"semifree-freudenthal", {{"c_e", "c_G"}, "(2 c_e + 1, min(2 c_G + 1, c_e))"}},
      {"stabilisation-map", {{"c_e", "d_e", "c_G", "d_G"}, "min(2 c_e + 1 - d_e, min(2 c_G + 1, c_e) - d_G)"}},
      {"destabilisation", {{"k"}, "k - 1, k >= 2"}},
      {"automorphism-comparison", {{"r"}, "r - 1, r >= 1"}},
      {"klein-embedding", {{"k", "d", "r"}, "k <= d - 3 and r >= 2k - d + 2"}},
      {"cell-lifting", {{"k", "conn_g", "conn_f"}, "k <= conn_g + conn_f and conn_f >= 2"}},
  };
  return r;
}

int as_dimension(const ConnectivityBound& b, const std::string& name) {
  if (b.is_unbounded() || b.value() < 0 || b.value() > INT_MAX)
    throw PreconditionError(name + " must be a nonnegative dimension");
  return static_cast<int>(b.value());
}

Json bound_result(const ConnectivityBound& b) { return {{"value", bound_to_json(b)}, {"meaning", b.meaning()}}; }

Json evaluate_rule(const std::string& name, const std::vector<ConnectivityBound>& a) {
  const auto it = rules().find(name);
  if (it == rules().end()) throw PreconditionError("unknown rule '" + name + "' (run 'pdtool bounds' for the list)");
  const auto& params = it->second.params;
  const bool free_mapping = name == "mapping-space" && a.size() == 2;
  if (a.size() != params.size() && !free_mapping)
    throw PreconditionError("rule " + name + " takes " + std::to_string(params.size()) + " arguments (" +
                            it->second.description + ")");
  Json inputs = Json::object();
  for (std::size_t i = 0; i < a.size(); ++i) inputs[params[i]] = bound_to_json(a[i]);
  Json result;
  if (name == "blakers-massey") result = bound_result(blakers_massey(a[0], a[1]));
  if (name == "mapping-space")
    result = free_mapping ? bound_result(mapping_space_connectivity(a[0], as_dimension(a[1], "d_e"),
                                                                    ConnectivityBound::none(), 0, false))
                          : bound_result(mapping_space_connectivity(a[0], as_dimension(a[1], "d_e"), a[2],
                                                                    as_dimension(a[3], "d_G"), true));
  if (name == "join-unit") result = bound_result(join_unit_connectivity(a[0]));
  if (name == "join-stabilisation") result = bound_result(join_stabilisation_connectivity(a[0], as_dimension(a[1], "d")));
  if (name == "semifree-freudenthal") {
    const auto [u, f] = semifree_freudenthal(a[0], a[1]);
    result = {{"underlying", bound_result(u)}, {"fixed", bound_result(f)}};
  }
  if (name == "stabilisation-map")
    result = bound_result(
        stabilisation_map_connectivity(a[0], as_dimension(a[1], "d_e"), a[2], as_dimension(a[3], "d_G")));
  if (name == "destabilisation") result = bound_result(destabilisation_connectivity(as_dimension(a[0], "k")));
  if (name == "automorphism-comparison")
    result = bound_result(automorphism_comparison_connectivity(as_dimension(a[0], "r")));
  if (name == "klein-embedding")
    result = {{"feasible", klein_embedding_feasible(as_dimension(a[0], "k"), as_dimension(a[1], "d"), a[2])}};
  if (name == "cell-lifting") result = {{"feasible", cell_lifting_feasible(as_dimension(a[0], "k"), a[1], a[2])}};
  return {{"rule", name}, {"formula", it->second.description}, {"inputs", inputs}, {"result", result}};
}

// text rendering: one "path: value" line per leaf, in key order
void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": ";
  if (j.is_string())
    out << j.get<std::string>();
  else if (j.is_null())
    out << "none";
  else
    out << j.dump();
  out << "\n";
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    flatten(j, "", out);
  }
}

Json isov_json(const DimensionProfile& p, bool strict) {
  const auto k = isov_space_connectivity(p);
  if (!k) {
    Json r = {{"inapplicable", true}, {"reason", isov_inapplicability(p)}};
    if (strict) throw Inapplicable(r["reason"], r);
    return r;
  }
  return {{"k", bound_to_json(*k)}, {"meaning", k->meaning()}};
}

Json dispatch(const std::string& command, const Options& o, std::ostream& err) {
  const Limits limits = Limits::from_environment();
  auto progress = [&](const std::string& msg) {
    if (o.verbose) err << "pdtool: " << msg << std::endl;
  };
  auto need = [](int v, const char* flag, int min) {
    if (v < min) throw PreconditionError(std::string(flag) + " must be given and >= " + std::to_string(min));
  };
  if (o.degree_bound < 0) throw PreconditionError("--degree-bound must be >= 0");

  if (command == "isov") return isov_json(load_profile(o), o.strict);
  if (command == "explain") {
    const auto p = load_profile(o);
    if (!p.satisfies_codimension()) {
      Json r = {{"inapplicable", true}, {"reason", isov_inapplicability(p)}};
      if (o.strict) throw Inapplicable(r["reason"], r);
      return r;
    }
    return trace_to_json(explain_isov_connectivity(p));
  }
  if (command == "bounds") {
    if (o.rule.empty()) {
      Json list = Json::object();
      for (const auto& [name, r] : rules()) list[name] = {{"params", r.params}, {"formula", r.description}};
      return {{"rules", list}};
    }
    return evaluate_rule(o.rule, parse_args(o.args));
  }

  const GroupPtr g = load_group(o, limits);
  const Route route = parse_route(o.route);
  progress("group " + group_name(*g) + " of order " + std::to_string(g->order()));

  if (command == "periodicity") {
    progress("searching for a cohomological witness up to degree " + std::to_string(o.degree_bound));
    return report_to_json(periodicity_report(g, o.degree_bound, route, limits));
  }
  if (command == "period") {
    need(o.degree_bound, "--degree-bound", 1);
    if (g->order() == 1) throw PreconditionError("period: the trivial group has no well-defined period");
    const auto r = periodicity_report(g, o.degree_bound, route, limits);
    std::string note;
    if (r.period)
      note = "H^" + std::to_string(*r.period) + " = Z/" + std::to_string(g->order());
    else if (!r.via_abelian)
      note = "not periodic (criteria 1,2 fail)";
    else
      note = "periodic by criteria 1,2 but no witness degree <= " + std::to_string(o.degree_bound);
    return {{"group", group_summary_to_json(*g)},
            {"period", r.period ? Json(*r.period) : Json(nullptr)},
            {"note", note},
            {"search_bound", o.degree_bound}};
  }
  if (command == "cohomology" || command == "homology") {
    need(o.degree, "--degree", 0);
    CohomologyCalculator calc(g, route, limits);
    progress("resolving through degree " + std::to_string(o.degree + 1) + " along the " + to_string(route) + " route");
    const bool co = command == "cohomology";
    const auto h = co ? calc.cohomology(o.degree) : calc.homology(o.degree);
    const std::string symbol = co ? "H^" : "H_";
    return {{"group", group_summary_to_json(*g)},
            {"degree", o.degree},
            {"route", to_string(route)},
            {co ? "cohomology" : "homology", invariants_to_json(h)},
            {"summary", symbol + std::to_string(o.degree) + "(" + group_name(*g) + ";Z) = " + h.to_string()},
            {"resolution_ranks", calc.resolution_ranks()}};
  }
  if (command == "swan") {
    need(o.dim, "--dim", 1);
    return swan_to_json(classify_hreps(g, o.dim, route, limits));
  }
  if (command == "invertible-spectra") {
    need(o.dim, "--dim", 1);
    return {{"group", group_summary_to_json(*g)},
            {"dimension", o.dim},
            {"count", count_free_invertible_spectra(g, o.dim, route, limits)}};
  }
  throw PreconditionError("unknown command '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodicity, Swan classification and connectivity estimates for finite groups", "pdtool"};
  app.require_subcommand(1, 1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"periodicity", "decide periodicity by every criterion and cross-check them"},
      {"period", "cohomological period"},
      {"cohomology", "H^n(G;Z) (needs --degree)"},
      {"homology", "H_n(G;Z) (needs --degree)"},
      {"swan", "free homotopy representations of dimension --dim"},
      {"invertible-spectra", "count of free invertible G-spectra of dimension --dim"},
      {"isov", "connectivity of the space of isovariant structures (needs --components)"},
      {"bounds", "evaluate one connectivity rule (--rule, --args), or list the rules"},
      {"explain", "derivation of the isov estimate (needs --components)"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--family", o.family, "group shorthand: C<n>, D<2n>, Q<4n>, S<n>, A<n>, SL23, joined by x");
    sub->add_option("--group-json", o.group_json, "group JSON file, or inline JSON");
    sub->add_option("--dim", o.dim, "dimension d");
    sub->add_option("--degree", o.degree, "degree n");
    sub->add_option("--degree-bound", o.degree_bound, "search bound for witness degrees")->capture_default_str();
    sub->add_option("--components", o.components, "dG:dE[,dG:dE...], none:dE for empty fixed points");
    sub->add_flag("--one-connected", o.one_connected, "X^G -> X^e is 1-connected");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sub->add_option("--route", o.route, "reduced, bar or periodic")
        ->check(CLI::IsMember({"reduced", "bar", "periodic"}))
        ->capture_default_str();
    sub->add_option("--rule", o.rule, "rule name for bounds");
    sub->add_option("--args", o.args, "comma-separated rule arguments (use --args=-2,5 for negatives)");
    sub->add_flag("--strict", o.strict, "exit 4 when the theorem does not apply");
    sub->add_flag("--verbose", o.verbose, "progress on stderr");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    emit(dispatch(command, o, err), o, out);
    return kOk;
  } catch (const Inapplicable& e) {
    emit(e.result, o, out);
    err << "pdtool: inapplicable: " << e.what() << "\n";
    return kInapplicable;
  } catch (const CapacityError& e) {
    err << "pdtool: capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const PreconditionError& e) {
    err << "pdtool: " << e.what() << "\n";
    return kUsage;
  } catch (const InconsistencyError& e) {
    err << "pdtool: internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const std::bad_alloc&) {
    err << "pdtool: capacity exceeded: out of memory\n";
    return kCapacity;
  }
}

}  // namespace pdtool::cli
