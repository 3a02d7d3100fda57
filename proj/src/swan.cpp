#include "pdtool/swan.hpp"

#include <map>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "pdtool/periodicity.hpp"

namespace pdtool {

namespace {

using PeriodKey = std::tuple<std::vector<Element>, Route, int>;

std::shared_mutex& period_mutex() {
  static std::shared_mutex m;
  return m;
}

std::map<PeriodKey, std::optional<int>>& period_cache() {
  static std::map<PeriodKey, std::optional<int>> cache;
  return cache;
}

void require_nontrivial(const GroupPtr& g, const char* what) {
  if (g->order() == 1) throw PreconditionError(std::string(what) + ": the trivial group has no unit degrees");
}

}  // namespace

std::string to_string(SwanSpecialCase c) {
  switch (c) {
    case SwanSpecialCase::None: return "none";
    case SwanSpecialCase::TrivialGroup: return "trivial_group";
    case SwanSpecialCase::OrderTwo: return "order_two";
  }
  return "?";
}

std::optional<int> cached_period(const GroupPtr& g, Route route, const Limits& limits) {
  require_nontrivial(g, "cached_period");
  PeriodKey key{std::vector<Element>(g->table().begin(), g->table().end()), route, limits.degree_cap};
  {
    std::shared_lock lock(period_mutex());
    if (auto it = period_cache().find(key); it != period_cache().end()) return it->second;
  }
  const auto p = period(g, limits.degree_cap, route, limits);
  std::unique_lock lock(period_mutex());
  period_cache().emplace(std::move(key), p);
  return p;
}

bool is_unit_degree(const GroupPtr& g, int n, Route route, const Limits& limits) {
  require_nontrivial(g, "is_unit_degree");
  if (n < 1) throw PreconditionError("is_unit_degree: degree must be >= 1");
  CohomologyCalculator calc(g, route, limits);
  const bool unit = calc.tate_cohomology(n).is_cyclic_of_order(static_cast<unsigned long>(g->order()));
  // unit degrees are exactly the positive multiples of the period, found
  // here along the default route; skipped if that route runs out of budget
  std::optional<int> p;
  try {
    p = cached_period(g, Route::Reduced, limits);
  } catch (const CapacityError&) {
    return unit;
  }
  if (p && unit != (n % *p == 0))
    throw InconsistencyError("degree " + std::to_string(n) + " disagrees with period " + std::to_string(*p));
  if (!p && unit && n <= limits.degree_cap)
    throw InconsistencyError("unit degree " + std::to_string(n) + " found but no period below the degree cap");
  return unit;
}

SwanClassification classify_hreps(const GroupPtr& g, int d, Route route, const Limits& limits) {
  if (d < 1) throw PreconditionError("classify_hreps: dimension must be >= 1");
  SwanClassification c;
  c.group = g;
  c.dimension = d;
  const std::uint64_t order = g->order();
  if (order == 1) {
    // the d-sphere itself; Z/1 is the zero ring and 0 is its unit
    c.special_case = SwanSpecialCase::TrivialGroup;
    c.oriented_count = c.unoriented_count = 1;
    c.k_invariants = {0};
    return c;
  }
  if (order == 2) {
    // the antipodal sphere is the only one in every dimension
    c.special_case = SwanSpecialCase::OrderTwo;
    c.oriented_count = c.unoriented_count = 1;
    c.k_invariants = {1};
    return c;
  }
  if (!is_unit_degree(g, d + 1, route, limits)) return c;
  for (std::uint64_t u = 1; u < order; ++u)
    if (std::gcd(u, order) == 1) c.k_invariants.push_back(u);
  c.oriented_count = c.k_invariants.size();
  // orientation reversal is u -> -u, which has no fixed unit once |G| > 2
  c.unoriented_count = c.oriented_count / 2;
  return c;
}

std::uint64_t count_free_invertible_spectra(const GroupPtr& g, int d, Route route, const Limits& limits) {
  return classify_hreps(g, d, route, limits).unoriented_count;
}

}  // namespace pdtool
