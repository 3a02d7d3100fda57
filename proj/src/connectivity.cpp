#include "pdtool/connectivity.hpp"

#include <algorithm>
#include <climits>

#include "pdtool/errors.hpp"

namespace pdtool {

long long ConnectivityBound::value() const {
  if (unbounded_) throw PreconditionError("unbounded connectivity has no finite value");
  return value_;
}

std::string ConnectivityBound::meaning() const {
  if (unbounded_) return "unbounded";
  if (value_ == kNone) return "no information";
  if (value_ == -1) return "nonempty";
  return std::to_string(value_) + "-connected";
}

std::string ConnectivityBound::to_string() const { return unbounded_ ? "unbounded" : std::to_string(value_); }

bool operator<(const ConnectivityBound& a, const ConnectivityBound& b) {
  if (a.unbounded_ || b.unbounded_) return !a.unbounded_ && b.unbounded_;
  return a.value_ < b.value_;
}

ConnectivityBound operator+(const ConnectivityBound& a, const ConnectivityBound& b) {
  if (a.is_none() || b.is_none()) return ConnectivityBound::none();
  if (a.is_unbounded() || b.is_unbounded()) return ConnectivityBound::unbounded();
  return ConnectivityBound::of(a.value() + b.value());
}

ConnectivityBound scale_add(long long factor, const ConnectivityBound& c, long long offset) {
  if (c.is_none()) return c;
  if (c.is_unbounded()) return c;
  return ConnectivityBound::of(factor * c.value() + offset);
}

namespace {

void require_dimension(int d, const char* what) {
  if (d < 0) throw PreconditionError(std::string(what) + ": dimensions must be >= 0");
}

}  // namespace

ConnectivityBound blakers_massey(const ConnectivityBound& n, const ConnectivityBound& m) { return n + m; }

ConnectivityBound mapping_space_connectivity(const ConnectivityBound& c_e, int d_e, const ConnectivityBound& c_G,
                                             int d_G, bool semifree) {
  require_dimension(d_e, "mapping_space_connectivity");
  const ConnectivityBound free_part = scale_add(1, c_e, -d_e);
  if (!semifree) return free_part;
  require_dimension(d_G, "mapping_space_connectivity");
  return min(free_part, scale_add(1, c_G, -d_G));
}

ConnectivityBound join_unit_connectivity(const ConnectivityBound& k) {
  if (!k.is_unbounded() && k.value() < 0) throw PreconditionError("join_unit_connectivity: needs k >= 0");
  return scale_add(2, k, 1);
}

ConnectivityBound join_stabilisation_connectivity(const ConnectivityBound& k, int d) {
  require_dimension(d, "join_stabilisation_connectivity");
  return scale_add(2, k, 1 - d);
}

std::pair<ConnectivityBound, ConnectivityBound> semifree_freudenthal(const ConnectivityBound& c_e,
                                                                     const ConnectivityBound& c_G) {
  return {scale_add(2, c_e, 1), min(scale_add(2, c_G, 1), c_e)};
}

ConnectivityBound stabilisation_map_connectivity(const ConnectivityBound& c_e, int d_e, const ConnectivityBound& c_G,
                                                 int d_G) {
  require_dimension(d_e, "stabilisation_map_connectivity");
  require_dimension(d_G, "stabilisation_map_connectivity");
  const auto [underlying, fixed] = semifree_freudenthal(c_e, c_G);
  return min(scale_add(1, underlying, -d_e), scale_add(1, fixed, -d_G));
}

ConnectivityBound destabilisation_connectivity(int k) {
  if (k < 2) throw PreconditionError("destabilisation_connectivity: needs codimension k >= 2");
  return ConnectivityBound::of(k - 1);
}

ConnectivityBound automorphism_comparison_connectivity(int r) {
  if (r < 1) throw PreconditionError("automorphism_comparison_connectivity: needs dimension r >= 1");
  return ConnectivityBound::of(r - 1);
}

bool klein_embedding_feasible(int k, int d, const ConnectivityBound& r) {
  require_dimension(k, "klein_embedding_feasible");
  require_dimension(d, "klein_embedding_feasible");
  return k <= d - 3 && ConnectivityBound::of(2LL * k - d + 2) <= r;
}

bool cell_lifting_feasible(int k, const ConnectivityBound& conn_g, const ConnectivityBound& conn_f) {
  require_dimension(k, "cell_lifting_feasible");
  const ConnectivityBound sum = conn_g + conn_f;
  // -2 absorbs, so "no information" never certifies a lift
  return !sum.is_none() && ConnectivityBound::of(k) <= sum && ConnectivityBound::of(2) <= conn_f;
}

void DimensionProfile::validate() const {
  if (components.empty()) throw PreconditionError("dimension profile: at least one component is required");
  for (const auto& c : components) {
    if (c.d_e < 0) throw PreconditionError("dimension profile: d_e must be >= 0");
    if (c.d_G && (*c.d_G < 0 || *c.d_G > c.d_e))
      throw PreconditionError("dimension profile: need 0 <= d_G <= d_e, got d_G = " + std::to_string(*c.d_G) +
                              ", d_e = " + std::to_string(c.d_e));
  }
}

bool DimensionProfile::satisfies_codimension() const {
  return std::all_of(components.begin(), components.end(),
                     [](const DimensionComponent& c) { return !c.d_G || *c.d_G + 3 <= c.d_e; });
}

namespace {

long long gap_bound(const DimensionComponent& c) { return c.d_e - 2LL * *c.d_G - 3; }

}  // namespace

std::optional<ConnectivityBound> isov_space_connectivity(const DimensionProfile& profile) {
  profile.validate();
  if (!profile.satisfies_codimension()) return std::nullopt;
  ConnectivityBound k = ConnectivityBound::unbounded();
  for (const auto& c : profile.components)
    if (c.d_G) {
      const long long g = gap_bound(c);
      if (g < -1) return std::nullopt;
      k = min(k, ConnectivityBound::of(g));
    }
  if (profile.fixed_inclusion_1_connected) k = scale_add(1, k, 1);
  return k;
}

std::string isov_inapplicability(const DimensionProfile& profile) {
  profile.validate();
  for (std::size_t i = 0; i < profile.components.size(); ++i) {
    const auto& c = profile.components[i];
    if (!c.d_G) continue;
    if (*c.d_G + 3 > c.d_e)
      return "component " + std::to_string(i) + " violates dim(X^G) + 3 <= dim(X^e) (" + std::to_string(*c.d_G) +
             " + 3 > " + std::to_string(c.d_e) + ")";
  }
  for (std::size_t i = 0; i < profile.components.size(); ++i) {
    const auto& c = profile.components[i];
    if (c.d_G && gap_bound(c) < -1)
      return "component " + std::to_string(i) + " has dim(X^e) - 2 dim(X^G) - 3 = " + std::to_string(gap_bound(c)) +
             " < -1, so no connectivity follows";
  }
  return "";
}

ConnectivityBound replay_step(const DerivationStep& s) {
  auto in = [&](const std::string& name) {
    for (const auto& [k, v] : s.inputs)
      if (k == name) return v;
    throw PreconditionError("replay_step: rule " + s.rule + " has no input " + name);
  };
  auto bound_in = [&](const std::string& name) {
    const long long v = in(name);
    return v == LLONG_MAX ? ConnectivityBound::unbounded() : ConnectivityBound::of(v);
  };
  if (s.rule == "destabilisation") return destabilisation_connectivity(static_cast<int>(in("codimension")));
  if (s.rule == "mapping-space")
    return mapping_space_connectivity(bound_in("connectivity"), static_cast<int>(in("dimension")),
                                      ConnectivityBound::none(), 0, false);
  if (s.rule == "klein-embedding") return ConnectivityBound::of(in("d_e") - 2 * in("d_G") - 3);
  if (s.rule == "fibration-comparison") return ConnectivityBound::of(2 * in("d_e") - 3 * in("d_G") - 4);
  if (s.rule == "minimum") {
    ConnectivityBound m = ConnectivityBound::unbounded();
    for (const auto& [k, v] : s.inputs) m = min(m, v == LLONG_MAX ? ConnectivityBound::unbounded() : ConnectivityBound::of(v));
    return m;
  }
  if (s.rule == "one-connected-fixed-inclusion") return scale_add(1, bound_in("k"), 1);
  throw PreconditionError("replay_step: unknown rule " + s.rule);
}

DerivationTrace explain_isov_connectivity(const DimensionProfile& profile) {
  profile.validate();
  if (!profile.satisfies_codimension())
    throw PreconditionError("explain_isov_connectivity: " + isov_inapplicability(profile));
  auto encode = [](const ConnectivityBound& b) { return b.is_unbounded() ? LLONG_MAX : b.value(); };

  DerivationTrace t;
  std::vector<std::pair<std::string, long long>> per_component;
  for (std::size_t i = 0; i < profile.components.size(); ++i) {
    const auto& c = profile.components[i];
    if (!c.d_G) continue;
    const long long dG = *c.d_G, de = c.d_e;
    auto push = [&](std::string rule, std::string source, std::vector<std::pair<std::string, long long>> inputs,
                    bool constraint) {
      DerivationStep s{std::move(rule), std::move(source), i, std::move(inputs), constraint, {}};
      s.output = replay_step(s);
      t.steps.push_back(s);
      return s.output;
    };
    const auto destab = push("destabilisation", "destabilisations of a codimension-k embedding form a (k-1)-connected space",
                             {{"codimension", de - dG}}, false);
    push("mapping-space", "sections over a d-dimensional base of a c-connected fibration form a (c-d)-connected space",
         {{"connectivity", encode(destab)}, {"dimension", dG}}, false);
    const auto klein = push("klein-embedding", "Klein's embedding theorem for the complement, n <= d_e - 2 d_G - 3",
                            {{"d_e", de}, {"d_G", dG}}, true);
    const auto fib = push("fibration-comparison", "spherical fibration comparison, n <= 2 d_e - 3 d_G - 4",
                          {{"d_e", de}, {"d_G", dG}}, true);
    if (fib < klein) throw InconsistencyError("fibration comparison constraint binds under the codimension hypothesis");
    const auto binding = push("minimum", "binding constraint of the component",
                              {{"klein-embedding", encode(klein)}, {"fibration-comparison", encode(fib)}}, true);
    per_component.emplace_back("component " + std::to_string(i), encode(binding));
  }
  DerivationStep total{"minimum", "minimum over components with nonempty fixed points", std::nullopt, per_component,
                       true, {}};
  total.output = replay_step(total);
  t.steps.push_back(total);
  ConnectivityBound k = total.output;
  for (const auto& [name, v] : per_component)
    if (v != LLONG_MAX && v < -1) return t;  // below "nonempty": no conclusion
  if (profile.fixed_inclusion_1_connected) {
    DerivationStep s{"one-connected-fixed-inclusion", "one more degree when X^G -> X^e is 1-connected", std::nullopt,
                     {{"k", encode(k)}}, false, {}};
    s.output = replay_step(s);
    t.steps.push_back(s);
    k = s.output;
  }
  t.result = k;
  return t;
}

}  // namespace pdtool
