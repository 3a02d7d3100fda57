#include "pdtool/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pdtool {

IntMatrix IntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  IntMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet outside matrix bounds");
    if (!m.entries_.empty() && m.entries_.back().row == t.row && m.entries_.back().col == t.col) {
      m.entries_.back().value += t.value;
      if (m.entries_.back().value == 0) m.entries_.pop_back();
    } else if (t.value != 0) {
      m.entries_.push_back(std::move(t));
    }
  }
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows ? dense[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (dense[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j)
      if (dense[i][j] != 0) m.entries_.push_back({i, j, dense[i][j]});
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_.push_back({i, i, 1});
  return m;
}

Integer IntMatrix::at(std::size_t i, std::size_t j) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(i, j),
                             [](const Triplet& t, const std::pair<std::size_t, std::size_t>& key) {
                               return t.row != key.first ? t.row < key.first : t.col < key.second;
                             });
  if (it != entries_.end() && it->row == i && it->col == j) return it->value;
  return 0;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
  for (const auto& t : entries_) d[t.row][t.col] = t.value;
  return d;
}

IntMatrix IntMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_triplets(cols_, rows_, std::move(t));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  // row-start offsets of b
  std::vector<std::size_t> start(b.rows() + 1, 0);
  for (const auto& t : b.triplets()) ++start[t.row + 1];
  for (std::size_t i = 0; i < b.rows(); ++i) start[i + 1] += start[i];
  const auto& bt = b.triplets();

  std::vector<Triplet> out;
  std::map<std::size_t, Integer> acc;
  const auto& at = a.triplets();
  for (std::size_t k = 0; k < at.size();) {
    const std::size_t row = at[k].row;
    acc.clear();
    for (; k < at.size() && at[k].row == row; ++k) {
      for (std::size_t l = start[at[k].col]; l < start[at[k].col + 1]; ++l) acc[bt[l].col] += at[k].value * bt[l].value;
    }
    for (auto& [col, v] : acc)
      if (v != 0) out.push_back({row, col, v});
  }
  return IntMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  auto m = a.to_dense();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace pdtool
