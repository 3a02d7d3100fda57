#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace pdtool {

using Integer = mpz_class;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Integer value;

  bool operator==(const Triplet&) const = default;
};

/// Sparse integer matrix in triplet form. Triplets are kept sorted by
/// (row, col), keys are unique and no explicit zeros are stored.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Duplicate keys are summed; zeros are dropped.
  static IntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static IntMatrix from_dense(const std::vector<std::vector<Integer>>& dense);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::vector<Triplet>& triplets() const { return entries_; }

  Integer at(std::size_t i, std::size_t j) const;
  std::vector<std::vector<Integer>> to_dense() const;
  IntMatrix transpose() const;
  bool is_zero() const { return entries_.empty(); }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Triplet> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss elimination) of a square matrix.
Integer determinant(const IntMatrix& a);

}  // namespace pdtool
