#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdtool/group.hpp"
#include "pdtool/homology.hpp"

namespace pdtool {

enum class SwanSpecialCase { None, TrivialGroup, OrderTwo };

std::string to_string(SwanSpecialCase c);

/// Free homotopy representations of one dimension. k-invariants are
/// reported as residues mod |G|: a unit of Z/|G| stands for the class
/// u * t in H^{d+1} = Z/|G| for one fixed generator t. The counts do not
/// depend on that choice; the labels do.
struct SwanClassification {
  GroupPtr group;
  int dimension = 0;
  std::uint64_t oriented_count = 0;
  std::uint64_t unoriented_count = 0;
  std::vector<std::uint64_t> k_invariants;
  SwanSpecialCase special_case = SwanSpecialCase::None;
};

/// H^n(G;Z) = Z/|G| for n >= 1, i.e. the degree carries units. Cross-checked
/// against the cached period whenever it is known.
bool is_unit_degree(const GroupPtr& g, int n, Route route = Route::Reduced,
                    const Limits& limits = Limits::from_environment());

SwanClassification classify_hreps(const GroupPtr& g, int d, Route route = Route::Reduced,
                                  const Limits& limits = Limits::from_environment());

/// Equal to classify_hreps(g, d).unoriented_count.
std::uint64_t count_free_invertible_spectra(const GroupPtr& g, int d, Route route = Route::Reduced,
                                            const Limits& limits = Limits::from_environment());

/// Memoized period (search bound = limits.degree_cap). Results are keyed by
/// the Cayley table, so equal tables share an entry.
std::optional<int> cached_period(const GroupPtr& g, Route route = Route::Reduced,
                                 const Limits& limits = Limits::from_environment());

}  // namespace pdtool
