#pragma once

#include <json.hpp>

#include "pdtool/connectivity.hpp"
#include "pdtool/group.hpp"
#include "pdtool/homology.hpp"
#include "pdtool/int_matrix.hpp"
#include "pdtool/periodicity.hpp"
#include "pdtool/swan.hpp"

namespace pdtool {

using Json = nlohmann::json;

/// {"family": {"name": "GeneralisedQuaternion", "params": [8]}} or
/// {"permutations": {"degree": n, "generators": [[...], ...]}}. DirectProduct
/// takes two nested family objects as params. Shorthand strings ("Q8") are
/// accepted wherever a family object is.
FamilyDescriptor family_from_json(const Json& j);
Json family_to_json(const FamilyDescriptor& f);
GroupPtr group_from_json(const Json& j, const Limits& limits = {});
/// {"order", "name", "permutations": {"degree", "generators"}}; name is null
/// for raw input. Accepted back by group_from_json.
Json group_to_json(const FiniteGroup& g);
/// {"order", "name"}: the compact form used inside command results.
Json group_summary_to_json(const FiniteGroup& g);

/// {"rows", "cols", "triplets": [[i, j, "v"], ...]} with decimal strings.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"free_rank": r, "torsion": [...]}; torsion entries beyond 64 bits are
/// written as decimal strings.
Json invariants_to_json(const AbelianInvariants& a);
AbelianInvariants invariants_from_json(const Json& j);

/// {"components": [{"d_G": 2, "d_e": 9} | {"d_G": null, "d_e": 7}], "one_connected": false}
Json profile_to_json(const DimensionProfile& p);
DimensionProfile profile_from_json(const Json& j);

/// A bound as a number, or "unbounded".
Json bound_to_json(const ConnectivityBound& b);
Json report_to_json(const PeriodicityReport& r);
Json swan_to_json(const SwanClassification& c);
Json trace_to_json(const DerivationTrace& t);

}  // namespace pdtool
