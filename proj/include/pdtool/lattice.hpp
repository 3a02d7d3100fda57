#pragma once

#include <optional>

#include "pdtool/int_matrix.hpp"

namespace pdtool {

/// LLL reduction of the lattice spanned by the (linearly independent)
/// columns of `basis`. Only integral unimodular column operations are
/// applied, so the result always spans the same lattice; floating point
/// merely steers the reduction. Returns nullopt when an entry leaves the
/// int64 range, in which case the caller keeps its basis.
std::optional<IntMatrix> lll_reduce(const IntMatrix& basis, double delta = 0.99);

}  // namespace pdtool
