#include "pdtool/smith.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>

#include "pdtool/errors.hpp"
#include "sparse_vector.hpp"

namespace pdtool {

std::vector<Integer> InvariantFactors::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : pivots)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Dense Smith normal form

struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> data;

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Integer& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1;
    return d;
  }

  // row_dst -= q * row_src
  void row_submul(std::size_t dst, std::size_t src, const Integer& q) {
    Integer* d = &data[dst * cols];
    const Integer* s = &data[src * cols];
    for (std::size_t j = 0; j < cols; ++j)
      if (s[j] != 0) mpz_submul(d[j].get_mpz_t(), q.get_mpz_t(), s[j].get_mpz_t());
  }
  void col_submul(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) {
      const Integer& s = data[i * cols + src];
      if (s != 0) mpz_submul(data[i * cols + dst].get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(data[a * cols + j], data[b * cols + j]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(data[i * cols + a], data[i * cols + b]);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) data[r * cols + j] = -data[r * cols + j];
  }

  IntMatrix to_matrix() const {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if ((*this)(i, j) != 0) t.push_back({i, j, (*this)(i, j)});
    return IntMatrix::from_triplets(rows, cols, std::move(t));
  }
};

Dense dense_of(const IntMatrix& a) {
  Dense d(a.rows(), a.cols());
  for (const auto& t : a.triplets()) d(t.row, t.col) = t.value;
  return d;
}

// Reduces `a` in place to Smith form; U and V track the row and column
// operations when non-null. Returns the pivots.
std::vector<Integer> dense_smith(Dense& a, Dense* u, Dense* v) {
  const std::size_t m = a.rows, n = a.cols;
  std::vector<Integer> pivots;
  Integer q;

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (u) u->swap_rows(x, y);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (v) v->swap_cols(x, y);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero in the trailing block
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (pi == m || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) {
          a.row_submul(i, t, q);
          if (u) u->row_submul(i, t, q);
        }
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) {
          a.col_submul(j, t, q);
          if (v) v->col_submul(j, t, q);
        }
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot is left in row or column t
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && mpz_cmpabs(a(i, t).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && mpz_cmpabs(a(t, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0) {
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      a.row_submul(t, bad, -1);
      if (u) u->row_submul(t, bad, -1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
    pivots.push_back(a(t, t));
  }
  return pivots;
}

// ---------------------------------------------------------------------------
// Sparse invariant factors: eliminate unit pivots, finish densely.

template <class T>
struct RowEliminator {
  std::vector<detail::SparseVec<T>> rows;
  std::vector<char> alive;
  std::vector<std::uint32_t> col_count;
  std::vector<std::vector<std::uint32_t>> col_rows;  // may hold stale row ids
  std::size_t unit_pivots = 0;
  std::vector<std::size_t> pivot_cols;
  static constexpr std::size_t kCandidates = 8;

  explicit RowEliminator(const IntMatrix& a) : rows(a.rows()), alive(a.rows(), 1), col_count(a.cols(), 0), col_rows(a.cols()) {
    for (const auto& t : a.triplets()) {
      rows[t.row].emplace_back(static_cast<std::uint32_t>(t.col), detail::from_mpz<T>(t.value));
      ++col_count[t.col];
      col_rows[t.col].push_back(static_cast<std::uint32_t>(t.row));
    }
  }

  // drop stale ids once they dominate a column's list
  void prune(std::uint32_t c) {
    auto& list = col_rows[c];
    if (list.size() < 2 * static_cast<std::size_t>(col_count[c]) + 32) return;
    std::erase_if(list, [&](std::uint32_t r) { return !alive[r] || !detail::find_entry(rows[r], c); });
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.shrink_to_fit();
  }

  void run() {
    using Item = std::pair<std::size_t, std::uint32_t>;  // (length, row)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (std::uint32_t r = 0; r < rows.size(); ++r)
      if (!rows[r].empty()) heap.emplace(rows[r].size(), r);

    detail::SparseVec<T> scratch;
    std::vector<std::uint32_t> touched;
    struct Choice {
      std::uint32_t row;
      std::size_t entry;
      std::uint64_t cost;
    };
    std::vector<Choice> pool;
    while (!heap.empty()) {
      // Markowitz cost over a few of the shortest rows
      pool.clear();
      while (!heap.empty() && pool.size() < kCandidates) {
        auto [len, r] = heap.top();
        heap.pop();
        if (!alive[r] || rows[r].size() != len || len == 0) continue;
        std::optional<Choice> pick;
        for (std::size_t k = 0; k < len; ++k) {
          if (!detail::is_unit(rows[r][k].second)) continue;
          const std::uint64_t cost = (len - 1) * std::uint64_t(col_count[rows[r][k].first] - 1);
          if (!pick || cost < pick->cost) pick = Choice{r, k, cost};
        }
        if (pick) pool.push_back(*pick);  // unit-free rows are re-queued by later updates
      }
      if (pool.empty()) break;
      auto chosen = std::min_element(pool.begin(), pool.end(), [](auto& x, auto& y) { return x.cost < y.cost; });
      for (const auto& c : pool)
        if (c.row != chosen->row) heap.emplace(rows[c.row].size(), c.row);
      const std::uint32_t r = chosen->row;
      const std::size_t best = chosen->entry;

      const std::uint32_t col = rows[r][best].first;
      const T pivot = rows[r][best].second;  // +-1, its own inverse
      std::vector<std::uint32_t> targets;
      targets.swap(col_rows[col]);
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (std::uint32_t r2 : targets) {
        if (r2 == r || !alive[r2]) continue;
        const T* e = detail::find_entry(rows[r2], col);
        if (!e) continue;
        const T factor = pivot == 1 ? *e : detail::neg(*e);
        detail::axpy(
            rows[r2], factor, rows[r], scratch,
            [&](std::uint32_t c) {
              ++col_count[c];
              col_rows[c].push_back(r2);
              touched.push_back(c);
            },
            [&](std::uint32_t c) { --col_count[c]; });
        rows[r2].swap(scratch);
        for (std::uint32_t c : touched) prune(c);
        touched.clear();
        if (rows[r2].empty())
          detail::SparseVec<T>().swap(rows[r2]);
        else {
          if (rows[r2].capacity() > 2 * rows[r2].size() + 16) rows[r2].shrink_to_fit();
          heap.emplace(rows[r2].size(), r2);
        }
      }
      for (const auto& [c, _] : rows[r]) {
        --col_count[c];
        prune(c);
      }
      detail::SparseVec<T>().swap(rows[r]);
      alive[r] = 0;
      ++unit_pivots;
      pivot_cols.push_back(col);
    }
  }
};

template <class T>
InvariantFactors sparse_invariants(const IntMatrix& a, std::size_t max_dense_cells,
                                   std::vector<std::size_t>* unit_columns) {
  RowEliminator<T> elim(a);
  elim.run();
  if (unit_columns) *unit_columns = std::move(elim.pivot_cols);

  std::vector<std::uint32_t> live_rows;
  std::vector<std::int64_t> col_index(a.cols(), -1);
  std::size_t live_cols = 0;
  for (std::uint32_t r = 0; r < elim.rows.size(); ++r) {
    if (!elim.alive[r] || elim.rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, _] : elim.rows[r])
      if (col_index[c] < 0) col_index[c] = static_cast<std::int64_t>(live_cols++);
  }
  const std::size_t cells = live_rows.size() * live_cols;
  if (cells > max_dense_cells)
    throw CapacityError("dense remainder of sparse elimination too large", cells, max_dense_cells);

  Dense rest(live_rows.size(), live_cols);
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : elim.rows[live_rows[i]]) rest(i, static_cast<std::size_t>(col_index[c])) = detail::to_mpz(v);

  InvariantFactors out;
  out.pivots.assign(elim.unit_pivots, Integer(1));
  auto tail = dense_smith(rest, nullptr, nullptr);
  out.pivots.insert(out.pivots.end(), tail.begin(), tail.end());
  return out;
}

// ---------------------------------------------------------------------------
// Integer kernel by unimodular column elimination on [A; I].

template <class T>
IntMatrix sparse_kernel(const IntMatrix& a) {
  const std::uint32_t m = static_cast<std::uint32_t>(a.rows());
  const std::size_t n = a.cols();
  // column j holds A's column j in keys < m and the transform in keys m + k
  std::vector<detail::SparseVec<T>> cols(n);
  std::vector<std::vector<std::uint32_t>> row_cols(m);
  std::vector<std::uint32_t> row_count(m, 0);
  for (const auto& t : a.triplets()) {
    cols[t.col].emplace_back(static_cast<std::uint32_t>(t.row), detail::from_mpz<T>(t.value));
    row_cols[t.row].push_back(static_cast<std::uint32_t>(t.col));
    ++row_count[t.row];
  }
  for (std::size_t j = 0; j < n; ++j) cols[j].emplace_back(m + static_cast<std::uint32_t>(j), T{1});

  std::vector<char> pivot_col(n, 0);
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return row_count[x] < row_count[y]; });

  detail::SparseVec<T> scratch;
  auto noop = [](std::uint32_t) {};
  for (std::uint32_t row : order) {
    std::vector<std::uint32_t> hits;
    for (std::uint32_t c : row_cols[row])
      if (!pivot_col[c] && detail::find_entry(cols[c], row)) hits.push_back(c);
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    while (!hits.empty()) {
      // pivot: smallest magnitude, then shortest column
      std::size_t best = 0;
      for (std::size_t k = 1; k < hits.size(); ++k) {
        const T& x = *detail::find_entry(cols[hits[k]], row);
        const T& y = *detail::find_entry(cols[hits[best]], row);
        auto ax = detail::abs_value(x), ay = detail::abs_value(y);
        if (ax < ay || (ax == ay && cols[hits[k]].size() < cols[hits[best]].size())) best = k;
      }
      const std::uint32_t p = hits[best];
      const T pv = *detail::find_entry(cols[p], row);
      std::vector<std::uint32_t> remaining;
      for (std::uint32_t c : hits) {
        if (c == p) continue;
        const T q = detail::tquot(*detail::find_entry(cols[c], row), pv);
        if (q != 0) {
          detail::axpy(
              cols[c], q, cols[p], scratch,
              [&](std::uint32_t key) {
                if (key < m) row_cols[key].push_back(c);
              },
              noop);
          cols[c].swap(scratch);
        }
        if (detail::find_entry(cols[c], row)) remaining.push_back(c);
      }
      if (remaining.empty()) {
        pivot_col[p] = 1;
        break;
      }
      remaining.push_back(p);
      hits = std::move(remaining);
    }
  }

  std::vector<Triplet> basis;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_col[j]) continue;
    for (const auto& [key, v] : cols[j]) {
      if (key < m) throw InconsistencyError("kernel column with a nonzero image");
      basis.push_back({key - m, k, detail::to_mpz(v)});
    }
    ++k;
  }
  return IntMatrix::from_triplets(n, k, std::move(basis));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  Dense d = dense_of(a);
  Dense u = Dense::identity(a.rows());
  Dense v = Dense::identity(a.cols());
  SmithForm out;
  out.pivots = dense_smith(d, &u, &v);
  out.U = u.to_matrix();
  out.D = d.to_matrix();
  out.V = v.to_matrix();
  return out;
}

InvariantFactors invariant_factors(const IntMatrix& a, std::size_t max_dense_cells,
                                   std::vector<std::size_t>* unit_columns) {
  try {
    return sparse_invariants<std::int64_t>(a, max_dense_cells, unit_columns);
  } catch (const detail::Overflow&) {
    return sparse_invariants<mpz_class>(a, max_dense_cells, unit_columns);
  }
}

IntMatrix kernel_basis(const IntMatrix& a) {
  try {
    return sparse_kernel<std::int64_t>(a);
  } catch (const detail::Overflow&) {
    return sparse_kernel<mpz_class>(a);
  }
}

}  // namespace pdtool
