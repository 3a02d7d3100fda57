#include "pdtool/homology.hpp"

#include <sstream>

namespace pdtool {

AbelianInvariants AbelianInvariants::from_orders(std::size_t free, std::vector<Integer> orders) {
  std::vector<Triplet> diag;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] <= 0) throw PreconditionError("cyclic factor orders must be positive");
    diag.push_back({i, i, orders[i]});
  }
  auto inv = invariant_factors(IntMatrix::from_triplets(orders.size(), orders.size(), std::move(diag)));
  return {free, inv.torsion()};
}

bool AbelianInvariants::is_cyclic_of_order(const Integer& n) const {
  if (free_rank != 0) return false;
  if (n == 1) return torsion.empty();
  return torsion.size() == 1 && torsion[0] == n;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t.get_str();
    first = false;
  }
  return out.str();
}

std::string to_string(Route route) {
  switch (route) {
    case Route::Reduced: return "reduced";
    case Route::Bar: return "bar";
    case Route::Periodic: return "periodic";
  }
  return "?";
}

CohomologyCalculator::CohomologyCalculator(GroupPtr group, Route route, Limits limits)
    : group_(std::move(group)), route_(route), limits_(limits) {
  if (route_ == Route::Periodic) {
    bool cyclic = false;
    for (Element a = 0; a < group_->order(); ++a) cyclic = cyclic || group_->element_order(a) == group_->order();
    if (!cyclic) throw PreconditionError("the periodic route needs a cyclic group");
  }
}

void CohomologyCalculator::require_degree(int n, const char* what) const {
  if (n < 0) throw PreconditionError(std::string(what) + ": degree must be >= 0");
  if (n > limits_.degree_cap)
    throw CapacityError(std::string(what) + ": degree above the degree cap", static_cast<std::size_t>(n),
                        static_cast<std::size_t>(limits_.degree_cap));
}

void CohomologyCalculator::ensure_length(int length) {
  if (resolution_ && resolution_->length() >= length) return;
  switch (route_) {
    case Route::Reduced:
      if (!resolution_) resolution_.emplace(group_, ResolutionKind::Reduced);
      extend_reduced(*resolution_, length, limits_);
      break;
    case Route::Bar:
      resolution_ = bar_resolution(group_, length, limits_);
      break;
    case Route::Periodic:
      resolution_ = periodic_resolution(group_, length);
      break;
  }
}

// Eliminating a unit pivot (b, a) of d_{k-1} splits off the contractible
// pair a -> b; in the smaller complex d_k just loses row a. Invariant
// factors of d_k are unchanged, and the dependent rows that cause most of
// the fill-in are gone before elimination starts.
const InvariantFactors& CohomologyCalculator::chain_invariants(int k) {
  auto it = chain_cache_.find(k);
  if (it != chain_cache_.end()) return it->second;
  ensure_length(k);
  IntMatrix d = resolution_->tensored(k);
  if (k >= 2) {
    chain_invariants(k - 1);
    const auto& split = unit_columns_.at(k - 1);
    if (!split.empty()) {
      std::vector<std::int64_t> new_row(d.rows(), 0);
      for (std::size_t r : split) new_row[r] = -1;
      std::size_t kept = 0;
      for (auto& r : new_row)
        if (r == 0) r = static_cast<std::int64_t>(kept++);
      std::vector<Triplet> entries;
      entries.reserve(d.nonzeros());
      for (const auto& t : d.triplets())
        if (new_row[t.row] >= 0) entries.push_back({static_cast<std::size_t>(new_row[t.row]), t.col, t.value});
      d = IntMatrix::from_triplets(kept, d.cols(), std::move(entries));
    }
  }
  std::vector<std::size_t> units;
  auto inv = invariant_factors(d, 16'000'000, &units);
  unit_columns_[k] = std::move(units);
  return chain_cache_.emplace(k, std::move(inv)).first->second;
}

AbelianInvariants CohomologyCalculator::homology(int n) {
  require_degree(n, "homology");
  std::lock_guard lock(mutex_);
  if (auto it = homology_cache_.find(n); it != homology_cache_.end()) return it->second;
  ensure_length(n + 1);
  const std::size_t in_rank = n == 0 ? 0 : chain_invariants(n).rank();
  const auto& out = chain_invariants(n + 1);
  AbelianInvariants h{resolution_->rank(n) - in_rank - out.rank(), out.torsion()};
  if (auto c = cohomology_cache_.find(n + 1); c != cohomology_cache_.end() && n >= 1 && !(c->second == h))
    throw InconsistencyError("H^" + std::to_string(n + 1) + " = " + c->second.to_string() + " but H_" +
                             std::to_string(n) + " = " + h.to_string());
  homology_cache_.emplace(n, h);
  return h;
}

AbelianInvariants CohomologyCalculator::cohomology(int n) {
  require_degree(n, "cohomology");
  std::lock_guard lock(mutex_);
  if (auto it = cohomology_cache_.find(n); it != cohomology_cache_.end()) return it->second;
  ensure_length(n + 1);
  // H^n = ker(d_{n+1}^T) / im(d_n^T); a matrix and its transpose share
  // invariant factors
  const auto& next = chain_invariants(n + 1);
  AbelianInvariants h;
  if (n == 0) {
    h.free_rank = resolution_->rank(0) - next.rank();
  } else {
    const auto& prev = chain_invariants(n);
    h.free_rank = resolution_->rank(n) - next.rank() - prev.rank();
    h.torsion = prev.torsion();
  }
  if (auto c = homology_cache_.find(n - 1); n >= 2 && c != homology_cache_.end() && !(c->second == h))
    throw InconsistencyError("H^" + std::to_string(n) + " = " + h.to_string() + " but H_" + std::to_string(n - 1) +
                             " = " + c->second.to_string());
  cohomology_cache_.emplace(n, h);
  return h;
}

AbelianInvariants CohomologyCalculator::tate_cohomology(int n) {
  if (n <= 0) throw PreconditionError("tate_cohomology: only positive degrees are supported");
  return cohomology(n);
}

std::vector<std::size_t> CohomologyCalculator::resolution_ranks() {
  std::lock_guard lock(mutex_);
  if (!resolution_) return {1};
  return resolution_->ranks();
}

AbelianInvariants homology(const GroupPtr& g, int n, Route route, const Limits& limits) {
  return CohomologyCalculator(g, route, limits).homology(n);
}

AbelianInvariants cohomology(const GroupPtr& g, int n, Route route, const Limits& limits) {
  return CohomologyCalculator(g, route, limits).cohomology(n);
}

AbelianInvariants tate_cohomology(const GroupPtr& g, int n, Route route, const Limits& limits) {
  return CohomologyCalculator(g, route, limits).tate_cohomology(n);
}

}  // namespace pdtool
