#pragma once

// Reference computations used only by the tests. They are deliberately
// naive and share no code with the library beyond its plain data types.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using Big = mpz_class;
using Dense = std::vector<std::vector<Big>>;

// (a*b)(i) = a(b(i)), matching "apply b first".
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

// Every element of <gens>, by closure under right multiplication.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{identity(degree)};
  std::vector<Perm> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::size_t perm_order(const Perm& p) {
  Perm x = p;
  std::size_t k = 1;
  while (x != identity(p.size())) {
    x = compose(x, p);
    ++k;
  }
  return k;
}

// Group given by a multiplication table on 0..n-1.
struct Table {
  std::size_t n;
  std::vector<std::uint32_t> mul;
  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
  std::uint32_t identity() const {
    for (std::uint32_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::uint32_t x = 0; x < n && ok; ++x) ok = (*this)(e, x) == x;
      if (ok) return e;
    }
    return 0;
  }
  std::size_t order_of(std::uint32_t a) const {
    std::uint32_t e = identity(), x = a;
    std::size_t k = 1;
    while (x != e) {
      x = (*this)(x, a);
      ++k;
    }
    return k;
  }
  std::vector<std::uint32_t> generated(const std::vector<std::uint32_t>& gens) const {
    std::set<std::uint32_t> s{identity()};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> cur(s.begin(), s.end());
      for (auto x : cur)
        for (auto g : gens)
          if (s.insert((*this)(x, g)).second) grew = true;
    }
    return {s.begin(), s.end()};
  }
};

// A noncyclic abelian group contains Z/p x Z/p, which is generated by two
// commuting elements; scanning commuting pairs is therefore exhaustive.
inline bool has_noncyclic_abelian(const Table& t) {
  for (std::uint32_t a = 0; a < t.n; ++a)
    for (std::uint32_t b = a + 1; b < t.n; ++b) {
      if (t(a, b) != t(b, a)) continue;
      auto h = t.generated({a, b});
      bool cyclic = false;
      for (auto x : h) cyclic = cyclic || t.order_of(x) == h.size();
      if (!cyclic) return true;
    }
  return false;
}

// All subgroups of order k, by brute force over subsets containing the
// identity. Only for tiny k.
inline std::vector<std::vector<std::uint32_t>> subgroups_of_order(const Table& t, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint32_t e = t.identity();
  std::vector<std::uint32_t> others;
  for (std::uint32_t x = 0; x < t.n; ++x)
    if (x != e) others.push_back(x);
  std::vector<char> pick(others.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k - 1), 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<std::uint32_t> s{e};
    for (std::size_t i = 0; i < others.size(); ++i)
      if (pick[i]) s.push_back(others[i]);
    std::sort(s.begin(), s.end());
    bool closed = true;
    for (auto a : s)
      for (auto b : s) closed = closed && std::binary_search(s.begin(), s.end(), t(a, b));
    if (closed) out.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Integer linear algebra

// Bareiss fraction-free determinant.
inline Big determinant(Dense a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Big prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k / d_{k-1} where d_k is
// the gcd of all k x k minors. Exponential; for matrices up to about 5 x 5.
inline std::vector<Big> invariant_factors(const Dense& a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<Big> out;
  Big prev = 1;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    combinations(m, k, cur, 0, rs);
    combinations(n, k, cur, 0, cs);
    Big g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Dense minor(k, std::vector<Big>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[r[i]][c[j]];
        Big d = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Textbook dense Smith form without transforms: returns the nonzero
// diagonal. Used where determinantal divisors are too slow.
inline std::vector<Big> smith_diagonal(Dense a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<Big> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) return diag;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Big q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Big q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

// H_n of a chain complex of free modules given by dense differentials
// d[k]: C_k -> C_{k-1} (rows = rank C_{k-1}). Returns (free rank, torsion).
struct Homology {
  std::size_t free = 0;
  std::vector<Big> torsion;
  bool operator==(const Homology&) const = default;
};

inline std::size_t rank_of(const std::vector<Big>& diag) { return diag.size(); }

inline Homology homology_at(const std::vector<std::size_t>& ranks, const std::vector<Dense>& d, std::size_t n) {
  auto inv = [&](std::size_t k) -> std::vector<Big> {
    if (k == 0 || k >= d.size() || d[k].empty() || d[k][0].empty()) return {};
    return smith_diagonal(d[k]);
  };
  const auto in = inv(n + 1), out = inv(n);
  Homology h;
  h.free = ranks[n] - rank_of(out) - rank_of(in);
  for (const auto& x : in)
    if (x > 1) h.torsion.push_back(x);
  return h;
}

// The integral chain complex of C_m from its 2-periodic resolution:
// rank one in every degree, d_k = 0 for odd k and m for even k >= 2.
inline Dense cyclic_differential(long m, std::size_t k) {
  return {{Big(k % 2 == 0 ? m : 0)}};
}

// Tensor product of the complexes of C_m and C_n up to degree top + 1:
// by the Kunneth theorem it computes H_*(C_m x C_n; Z).
inline std::pair<std::vector<std::size_t>, std::vector<Dense>> product_complex(long m, long n, std::size_t top) {
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k <= top + 1; ++k) ranks.push_back(k + 1);  // pairs (i, k - i)
  std::vector<Dense> d(top + 2);
  for (std::size_t k = 1; k <= top + 1; ++k) {
    Dense mat(ranks[k - 1], std::vector<Big>(ranks[k], 0));
    for (std::size_t i = 0; i <= k; ++i) {
      const std::size_t j = k - i;
      // d(a_i (x) b_j) = d(a_i) (x) b_j + (-1)^i a_i (x) d(b_j)
      if (i >= 1) mat[i - 1][i] += cyclic_differential(m, i)[0][0];
      if (j >= 1) mat[i][i] += (i % 2 == 0 ? 1 : -1) * cyclic_differential(n, j)[0][0];
    }
    d[k] = std::move(mat);
  }
  return {ranks, d};
}

}  // namespace oracle
