#include "pdtool/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace pdtool {

namespace {

// sparse vector, sorted by coordinate
using Vector = std::vector<std::pair<std::size_t, std::int64_t>>;

double dot(const Vector& a, const Vector& b) {
  __int128 s = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      s += static_cast<__int128>(i->second) * j->second;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(s);
}

// a -= q * b; false on overflow
bool sub_multiple(Vector& a, const Vector& b, std::int64_t q, Vector& scratch) {
  // keep a margin so dot products stay exact in __int128
  constexpr std::int64_t kLimit = std::int64_t{1} << 50;
  scratch.clear();
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      scratch.push_back(*i++);
      continue;
    }
    std::int64_t prod, value = 0;
    if (__builtin_mul_overflow(q, j->second, &prod)) return false;
    if (i != a.end() && i->first == j->first) {
      if (__builtin_sub_overflow(i->second, prod, &value)) return false;
      ++i;
    } else {
      value = -prod;
    }
    if (value > kLimit || value < -kLimit) return false;
    if (value != 0) scratch.emplace_back(j->first, value);
    ++j;
  }
  a.swap(scratch);
  return true;
}

}  // namespace

std::optional<IntMatrix> lll_reduce(const IntMatrix& basis, double delta) {
  const std::size_t dim = basis.rows();
  const std::size_t n = basis.cols();
  std::vector<Vector> b(n);
  for (const auto& t : basis.triplets()) {
    if (!t.value.fits_slong_p()) return std::nullopt;
    b[t.col].emplace_back(t.row, t.value.get_si());
  }
  for (auto& v : b) std::sort(v.begin(), v.end());
  Vector scratch;
  if (n <= 1) return basis;

  std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
  std::vector<double> norm(n, 0.0);  // squared Gram-Schmidt lengths
  auto orthogonalize = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      double s = dot(b[k], b[j]);
      for (std::size_t i = 0; i < j; ++i) s -= mu[j][i] * mu[k][i] * norm[i];
      mu[k][j] = s / norm[j];
    }
    double s = dot(b[k], b[k]);
    for (std::size_t j = 0; j < k; ++j) s -= mu[k][j] * mu[k][j] * norm[j];
    norm[k] = s;
  };

  norm[0] = dot(b[0], b[0]);
  std::size_t k = 1;
  // generous cap; the result is a valid basis whenever we stop
  for (std::size_t steps = 0; k < n && steps < 50 * n * n + 10000; ++steps) {
    for (int pass = 0; pass < 8; ++pass) {
      orthogonalize(k);
      bool large = false;
      for (std::size_t j = k; j-- > 0;) {
        const double r = std::nearbyint(mu[k][j]);
        if (r == 0) continue;
        if (std::fabs(r) > 9e15) return std::nullopt;
        const auto q = static_cast<std::int64_t>(r);
        if (!sub_multiple(b[k], b[j], q, scratch)) return std::nullopt;
        for (std::size_t i = 0; i < j; ++i) mu[k][i] -= r * mu[j][i];
        mu[k][j] -= r;
        large = large || std::fabs(r) > (1 << 20);
      }
      if (!large) break;
    }
    orthogonalize(k);
    if (norm[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      std::swap(b[k], b[k - 1]);
      k = k > 1 ? k - 1 : 1;
      if (k == 1) norm[0] = dot(b[0], b[0]);
    } else {
      ++k;
    }
  }

  std::vector<Triplet> out;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, v] : b[j]) out.push_back({i, j, Integer(static_cast<long>(v))});
  return IntMatrix::from_triplets(dim, n, std::move(out));
}

}  // namespace pdtool
