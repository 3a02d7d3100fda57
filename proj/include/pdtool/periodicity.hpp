#pragma once

#include <optional>
#include <string>

#include "pdtool/group.hpp"
#include "pdtool/homology.hpp"

namespace pdtool {

/// Every abelian subgroup is cyclic.
bool is_periodic_via_abelian(const FiniteGroup& g);

/// Every Sylow subgroup is cyclic, or generalised quaternion at p = 2.
bool is_periodic_via_sylow(const GroupPtr& g);

/// Smallest 1 <= n <= bound with H^n(G;Z) = Z/|G|, or nullopt. When a period
/// p is found and 2p <= bound, H^{2p} = Z/|G| is verified as well.
/// Throws PreconditionError for the trivial group.
std::optional<int> period(CohomologyCalculator& calc, int bound = 8);
std::optional<int> period(const GroupPtr& g, int bound = 8, Route route = Route::Reduced,
                          const Limits& limits = Limits::from_environment());

/// Outcome of the bounded search for a cohomological witness.
struct CohomologyWitness {
  enum class State { Found, NotFoundBelowBound, NotSearched };
  State state = State::NotSearched;
  int degree = 0;  // only meaningful for Found
};

std::string to_string(CohomologyWitness::State s);

struct PeriodicityReport {
  GroupPtr group;
  bool via_abelian = false;
  bool via_sylow = false;
  CohomologyWitness via_cohomology;
  std::optional<int> period;
  int search_bound = 0;
};

/// Runs every decision route and cross-checks them. Disagreement between
/// the subgroup criteria, or a witness for a group they reject, raises
/// InconsistencyError. A search bound of 0 skips the cohomology route.
PeriodicityReport periodicity_report(const GroupPtr& g, int bound = 8, Route route = Route::Reduced,
                                     const Limits& limits = Limits::from_environment());

}  // namespace pdtool
