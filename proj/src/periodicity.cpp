#include "pdtool/periodicity.hpp"

namespace pdtool {

bool is_periodic_via_abelian(const FiniteGroup& g) { return !has_noncyclic_abelian_subgroup(g); }

bool is_periodic_via_sylow(const GroupPtr& g) {
  for (int p : prime_divisors(static_cast<long long>(g->order()))) {
    const Subgroup s = sylow(g, p);
    if (is_cyclic(s)) continue;
    if (p == 2 && is_generalised_quaternion(s)) continue;
    return false;
  }
  return true;
}

std::optional<int> period(CohomologyCalculator& calc, int bound) {
  const auto order = static_cast<unsigned long>(calc.group()->order());
  if (order == 1) throw PreconditionError("period: the trivial group has no well-defined period");
  if (bound < 1) throw PreconditionError("period: the search bound must be >= 1");
  for (int n = 1; n <= bound; ++n) {
    if (!calc.cohomology(n).is_cyclic_of_order(order)) continue;
    if (2 * n <= bound && !calc.cohomology(2 * n).is_cyclic_of_order(order))
      throw InconsistencyError("H^" + std::to_string(n) + " = Z/|G| but H^" + std::to_string(2 * n) + " = " +
                               calc.cohomology(2 * n).to_string());
    return n;
  }
  return std::nullopt;
}

std::optional<int> period(const GroupPtr& g, int bound, Route route, const Limits& limits) {
  CohomologyCalculator calc(g, route, limits);
  return period(calc, bound);
}

std::string to_string(CohomologyWitness::State s) {
  switch (s) {
    case CohomologyWitness::State::Found: return "witness";
    case CohomologyWitness::State::NotFoundBelowBound: return "no-witness-below-bound";
    case CohomologyWitness::State::NotSearched: return "not-searched";
  }
  return "?";
}

PeriodicityReport periodicity_report(const GroupPtr& g, int bound, Route route, const Limits& limits) {
  if (bound < 0) throw PreconditionError("periodicity_report: the search bound must be >= 0");
  PeriodicityReport r;
  r.group = g;
  r.search_bound = bound;
  r.via_abelian = is_periodic_via_abelian(*g);
  r.via_sylow = is_periodic_via_sylow(g);
  if (r.via_abelian != r.via_sylow)
    throw InconsistencyError("abelian-subgroup and Sylow criteria disagree for " +
                             (g->origin().family.empty() ? std::string("input group") : g->origin().family));
  if (g->order() == 1 || bound == 0) return r;

  CohomologyCalculator calc(g, route, limits);
  r.period = period(calc, bound);
  if (r.period) {
    r.via_cohomology = {CohomologyWitness::State::Found, *r.period};
    if (!r.via_abelian) throw InconsistencyError("cohomological witness for a group with a noncyclic abelian subgroup");
  } else {
    r.via_cohomology = {CohomologyWitness::State::NotFoundBelowBound, 0};
  }
  return r;
}

}  // namespace pdtool
