#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pdtool/errors.hpp"
#include "pdtool/group.hpp"
#include "pdtool/resolution.hpp"
#include "pdtool/smith.hpp"

namespace pdtool {

/// Isomorphism type Z^free_rank + Z/t_1 + ... + Z/t_k with t_i | t_{i+1}
/// and every t_i >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  static AbelianInvariants trivial() { return {}; }
  /// Canonical form of Z^free + (+)_i Z/orders_i for arbitrary positive orders.
  static AbelianInvariants from_orders(std::size_t free, std::vector<Integer> orders);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// True iff the group is Z/n (finite cyclic of order exactly n).
  bool is_cyclic_of_order(const Integer& n) const;
  /// "0", "Z", "Z/2", "Z^2 + Z/2 + Z/12".
  std::string to_string() const;

  bool operator==(const AbelianInvariants&) const = default;
};

/// Which free resolution feeds the computation.
enum class Route {
  Reduced,   // kernel-generated resolution; the general default
  Bar,       // normalized bar resolution, subject to the nonzero budget
  Periodic,  // 2-periodic resolution, cyclic groups only
};

std::string to_string(Route route);

/// Integral (co)homology of one group along one route. Resolutions and
/// invariant factors are computed lazily and cached; all methods are
/// thread-safe and return the same values as a fresh instance would.
class CohomologyCalculator {
 public:
  explicit CohomologyCalculator(GroupPtr group, Route route = Route::Reduced, Limits limits = Limits::from_environment());

  const GroupPtr& group() const { return group_; }
  Route route() const { return route_; }
  const Limits& limits() const { return limits_; }

  /// H_n(G; Z), n >= 0.
  AbelianInvariants homology(int n);
  /// H^n(G; Z) from the dual complex, n >= 0. When H_{n-1} is also known
  /// the universal-coefficient isomorphism H^n = H_{n-1} (n >= 2) is checked.
  AbelianInvariants cohomology(int n);
  /// Tate cohomology in positive degrees, where it agrees with H^n.
  AbelianInvariants tate_cohomology(int n);

  /// Ranks of the resolution as far as it has been built.
  std::vector<std::size_t> resolution_ranks();

 private:
  void require_degree(int n, const char* what) const;
  void ensure_length(int length);
  const InvariantFactors& chain_invariants(int k);  // of d_k (x) Z

  GroupPtr group_;
  Route route_;
  Limits limits_;
  std::mutex mutex_;
  std::optional<Resolution> resolution_;
  std::map<int, InvariantFactors> chain_cache_;
  std::map<int, std::vector<std::size_t>> unit_columns_;
  std::map<int, AbelianInvariants> homology_cache_;
  std::map<int, AbelianInvariants> cohomology_cache_;
};

AbelianInvariants homology(const GroupPtr& g, int n, Route route = Route::Reduced,
                           const Limits& limits = Limits::from_environment());
AbelianInvariants cohomology(const GroupPtr& g, int n, Route route = Route::Reduced,
                             const Limits& limits = Limits::from_environment());
AbelianInvariants tate_cohomology(const GroupPtr& g, int n, Route route = Route::Reduced,
                                  const Limits& limits = Limits::from_environment());

}  // namespace pdtool
