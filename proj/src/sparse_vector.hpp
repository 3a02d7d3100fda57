#pragma once

// Internal: sparse integer vectors over either checked 64-bit integers or
// GMP integers. Elimination routines are written once against this and
// retried with GMP when the machine-integer run overflows.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace pdtool::detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// x - a * b
inline std::int64_t sub_mul(std::int64_t x, std::int64_t a, std::int64_t b) {
  return checked_sub(x, checked_mul(a, b));
}
inline mpz_class sub_mul(const mpz_class& x, const mpz_class& a, const mpz_class& b) { return x - a * b; }

inline std::int64_t neg(std::int64_t a) { return checked_sub(0, a); }
inline mpz_class neg(const mpz_class& a) { return -a; }

inline bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
inline bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }

inline std::int64_t abs_value(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
inline mpz_class abs_value(const mpz_class& a) { return abs(a); }

// Truncating quotient.
inline std::int64_t tquot(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN && b == -1) throw Overflow{};
  return a / b;
}
inline mpz_class tquot(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline mpz_class to_mpz(std::int64_t a) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(a));
  return r;
}
inline mpz_class to_mpz(const mpz_class& a) { return a; }

template <class T>
T from_mpz(const mpz_class& v);

template <>
inline std::int64_t from_mpz<std::int64_t>(const mpz_class& v) {
  if (!v.fits_slong_p()) throw Overflow{};
  return v.get_si();
}
template <>
inline mpz_class from_mpz<mpz_class>(const mpz_class& v) {
  return v;
}

template <class T>
using SparseVec = std::vector<std::pair<std::uint32_t, T>>;

template <class T>
const T* find_entry(const SparseVec<T>& v, std::uint32_t key) {
  std::size_t lo = 0, hi = v.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (v[mid].first < key)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < v.size() && v[lo].first == key ? &v[lo].second : nullptr;
}

/// out = x - c * y. `on_add(key)` / `on_remove(key)` fire for keys that
/// appear in or vanish from x.
template <class T, class OnAdd, class OnRemove>
void axpy(const SparseVec<T>& x, const T& c, const SparseVec<T>& y, SparseVec<T>& out, OnAdd&& on_add,
          OnRemove&& on_remove) {
  out.clear();
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  const T zero{0};
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      T v = sub_mul(zero, c, y[j].second);
      on_add(y[j].first);
      out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      T v = sub_mul(x[i].second, c, y[j].second);
      if (v != 0)
        out.emplace_back(x[i].first, std::move(v));
      else
        on_remove(x[i].first);
      ++i;
      ++j;
    }
  }
}

}  // namespace pdtool::detail
