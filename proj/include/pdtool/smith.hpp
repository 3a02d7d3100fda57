#pragma once

#include <cstddef>
#include <vector>

#include "pdtool/int_matrix.hpp"

namespace pdtool {

/// U * A * V = D with U, V unimodular and D diagonal. The leading diagonal
/// of D is `pivots` (positive, each dividing the next) followed by zeros.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> pivots;
};

/// Smith normal form with both transforms. Dense elimination with
/// minimal-magnitude pivots; intended for matrices up to a few hundred
/// rows and columns.
SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero invariant factors of a matrix without transforms.
struct InvariantFactors {
  std::vector<Integer> pivots;  // d_1 | d_2 | ... | d_rank, all positive
  std::size_t rank() const { return pivots.size(); }
  /// Entries greater than one: the torsion of the cokernel.
  std::vector<Integer> torsion() const;
};

/// Invariant factors of a large sparse matrix. Unit pivots are eliminated
/// sparsely (machine integers first, falling back to GMP on overflow); the
/// remainder is finished densely. Throws CapacityError if the dense
/// remainder exceeds `max_dense_cells`. If `unit_columns` is given it
/// receives the column of every unit pivot, in elimination order.
InvariantFactors invariant_factors(const IntMatrix& a, std::size_t max_dense_cells = 16'000'000,
                                   std::vector<std::size_t>* unit_columns = nullptr);

/// Columns form a basis of the integer kernel {x : A x = 0}. The basis is
/// saturated: it spans every integer solution, not a finite-index sublattice.
IntMatrix kernel_basis(const IntMatrix& a);

}  // namespace pdtool
