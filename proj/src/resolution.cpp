#include "pdtool/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pdtool/lattice.hpp"
#include "pdtool/smith.hpp"

namespace pdtool {

// ---------------------------------------------------------------------------
// GroupRingMatrix

GroupRingMatrix::GroupRingMatrix(std::size_t rows, std::size_t cols, std::vector<RingTerm> terms)
    : rows_(rows), cols_(cols) {
  std::sort(terms.begin(), terms.end(), [](const RingTerm& a, const RingTerm& b) {
    if (a.col != b.col) return a.col < b.col;
    if (a.row != b.row) return a.row < b.row;
    return a.elem < b.elem;
  });
  for (const auto& t : terms) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("group ring term outside matrix bounds");
    if (!terms_.empty() && terms_.back().col == t.col && terms_.back().row == t.row && terms_.back().elem == t.elem) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(t);
    }
  }
}

IntMatrix GroupRingMatrix::expand(const FiniteGroup& g) const {
  const std::size_t n = g.order();
  std::vector<Triplet> t;
  t.reserve(terms_.size() * n);
  for (const auto& term : terms_)
    for (Element h = 0; h < n; ++h)
      t.push_back({term.row * n + g.mul(h, term.elem), term.col * n + h, Integer(static_cast<long>(term.coeff))});
  return IntMatrix::from_triplets(rows_ * n, cols_ * n, std::move(t));
}

IntMatrix GroupRingMatrix::augment() const {
  std::vector<Triplet> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.row, term.col, Integer(static_cast<long>(term.coeff))});
  return IntMatrix::from_triplets(rows_, cols_, std::move(t));
}

// ---------------------------------------------------------------------------
// Resolution

std::string to_string(ResolutionKind kind) {
  switch (kind) {
    case ResolutionKind::Bar: return "bar";
    case ResolutionKind::Periodic: return "periodic";
    case ResolutionKind::Reduced: return "reduced";
  }
  return "?";
}

const GroupRingMatrix& Resolution::differential(int k) const {
  if (k < 1 || k > length())
    throw PreconditionError("differential d_" + std::to_string(k) + " not available (resolution length " +
                            std::to_string(length()) + ")");
  return differentials_[static_cast<std::size_t>(k - 1)];
}

void Resolution::push(GroupRingMatrix d) {
  if (d.rows() != ranks_.back()) throw std::invalid_argument("differential does not match the previous rank");
  ranks_.push_back(d.cols());
  differentials_.push_back(std::move(d));
}

// ---------------------------------------------------------------------------
// Bar resolution

namespace {

std::size_t checked_pow(std::size_t base, int e, std::size_t cap) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

Resolution bar_resolution(const GroupPtr& gp, int n, const Limits& limits) {
  if (n < 1) throw PreconditionError("bar_resolution: degree must be >= 1");
  const FiniteGroup& g = *gp;
  const std::size_t q = g.order() - 1;  // non-identity elements
  Resolution res(gp, ResolutionKind::Bar);

  for (int k = 1; k <= n; ++k) {
    const std::size_t cells = checked_pow(q, k, limits.max_nonzeros);
    const std::size_t required = cells > limits.max_nonzeros ? cells : cells * static_cast<std::size_t>(k + 1);
    if (required > limits.max_nonzeros)
      throw CapacityError("bar resolution differential d_" + std::to_string(k) + " exceeds the nonzero budget",
                          required, limits.max_nonzeros);
    const std::size_t lower = checked_pow(q, k - 1, limits.max_nonzeros);

    std::vector<RingTerm> terms;
    terms.reserve(cells * static_cast<std::size_t>(k + 1));
    std::vector<Element> cell(static_cast<std::size_t>(k));
    auto index_of = [&](const std::vector<Element>& c) {
      std::size_t idx = 0;
      for (Element e : c) idx = idx * q + (e - 1);
      return static_cast<std::uint32_t>(idx);
    };
    std::vector<Element> face;
    for (std::size_t col = 0; col < cells; ++col) {
      // decode base-q digits, most significant first
      std::size_t rest = col;
      for (int i = k - 1; i >= 0; --i) {
        cell[static_cast<std::size_t>(i)] = static_cast<Element>(rest % q + 1);
        rest /= q;
      }
      const auto c32 = static_cast<std::uint32_t>(col);
      // g1 [g2 | ... | gk]
      face.assign(cell.begin() + 1, cell.end());
      terms.push_back({index_of(face), c32, cell[0], 1});
      // (-1)^i [ ... | g_i g_{i+1} | ... ]
      for (int i = 1; i < k; ++i) {
        Element prod = g.mul(cell[static_cast<std::size_t>(i - 1)], cell[static_cast<std::size_t>(i)]);
        if (prod == 0) continue;  // degenerate cell
        face.clear();
        for (int j = 0; j < k; ++j) {
          if (j == i - 1)
            face.push_back(prod);
          else if (j != i)
            face.push_back(cell[static_cast<std::size_t>(j)]);
        }
        terms.push_back({index_of(face), c32, 0, (i % 2) ? -1 : 1});
      }
      // (-1)^k [g1 | ... | g_{k-1}]
      face.assign(cell.begin(), cell.end() - 1);
      terms.push_back({index_of(face), c32, 0, (k % 2) ? -1 : 1});
    }
    res.push(GroupRingMatrix(lower, cells, std::move(terms)));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Periodic resolution of a cyclic group

Resolution periodic_resolution(const GroupPtr& gp, int n) {
  if (n < 1) throw PreconditionError("periodic_resolution: degree must be >= 1");
  const FiniteGroup& g = *gp;
  Element t = g.order() == 1 ? 0 : static_cast<Element>(g.order());
  for (Element a = 0; a < g.order(); ++a)
    if (g.element_order(a) == g.order()) {
      t = a;
      break;
    }
  if (t == g.order()) throw PreconditionError("periodic_resolution: the group is not cyclic");

  Resolution res(gp, ResolutionKind::Periodic);
  for (int k = 1; k <= n; ++k) {
    std::vector<RingTerm> terms;
    if (k % 2 == 1) {
      terms = {{0, 0, t, 1}, {0, 0, 0, -1}};
    } else {
      for (Element a = 0; a < g.order(); ++a) terms.push_back({0, 0, a, 1});
    }
    res.push(GroupRingMatrix(1, 1, std::move(terms)));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Reduced resolution

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

std::uint64_t mod_q(const Integer& v, std::uint64_t q) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), q);
  return r.get_ui();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
  std::uint64_t result = 1, base = a % q, e = q - 2;
  while (e) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result;
}

// Row echelon basis over F_q (q prime, q < 2^32) with normalized pivots.
class ModSpan {
 public:
  ModSpan(std::size_t dim, std::uint64_t q = kPrime) : dim_(dim), q_(q) {}
  std::size_t rank() const { return rows_.size(); }
  std::uint64_t modulus() const { return q_; }

  // Reduces v in place; returns true if it is in the span.
  bool reduce(std::vector<std::uint64_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (v[p] == 0) continue;
      const std::uint64_t f = v[p];
      const auto& row = rows_[r];
      for (std::size_t j = p; j < dim_; ++j)
        if (row[j]) v[j] = (v[j] + q_ - f * row[j] % q_) % q_;
    }
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
  }

  bool add(std::vector<std::uint64_t> v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    const std::uint64_t inv = inv_mod(v[p], q_);
    for (std::size_t j = p; j < dim_; ++j) v[j] = v[j] * inv % q_;
    // pivots stay increasing so reduce() is a single pass
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

 private:
  std::size_t dim_;
  std::uint64_t q_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

using Vec = std::vector<std::pair<std::uint32_t, Integer>>;  // sparse, sorted

// h . v on a free module of the given rank: coordinate (i, g) -> (i, h g).
Vec act(const FiniteGroup& g, Element h, const Vec& v) {
  const std::size_t n = g.order();
  Vec out;
  out.reserve(v.size());
  for (const auto& [key, val] : v) {
    const std::size_t i = key / n;
    const Element e = static_cast<Element>(key % n);
    out.emplace_back(static_cast<std::uint32_t>(i * n + g.mul(h, e)), val);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::uint64_t> dense_mod(const Vec& v, std::size_t dim, std::uint64_t q) {
  std::vector<std::uint64_t> d(dim, 0);
  for (const auto& [key, val] : v) d[key] = mod_q(val, q);
  return d;
}

// Every orbit vector of every generator, as rows.
std::vector<Vec> orbit_rows(const FiniteGroup& g, const std::vector<Vec>& gens) {
  std::vector<Vec> rows;
  rows.reserve(gens.size() * g.order());
  for (const auto& v : gens)
    for (Element h = 0; h < g.order(); ++h) rows.push_back(act(g, h, v));
  return rows;
}

std::size_t rank_mod(const std::vector<Vec>& rows, std::size_t dim, std::uint64_t q, std::size_t stop_at) {
  ModSpan span(dim, q);
  for (const auto& row : rows) {
    span.add(dense_mod(row, dim, q));
    if (span.rank() == stop_at) break;
  }
  return span.rank();
}

// Outcome of testing whether the rows (all inside the saturated lattice
// K spanned by `basis`) span all of K.
struct SpanCheck {
  enum class Status { Equal, BadPrime, Unknown } status;
  std::uint64_t prime = 0;  // a prime at which the rows fall short, for BadPrime
};

// K is saturated in Z^dim (a kernel), so S = K iff S has rank m and
// Z^dim / S is torsion-free, i.e. every invariant factor of the rows is 1.
// A prime dividing a nontrivial invariant factor is one where S falls short.
SpanCheck check_span(const std::vector<Vec>& rows, std::size_t dim, std::size_t m) {
  if (m == 0) return {SpanCheck::Status::Equal};
  if (rank_mod(rows, dim, kPrime, m) < m) return {SpanCheck::Status::BadPrime, kPrime};
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [key, val] : rows[r]) t.push_back({r, key, val});
  const auto inv = invariant_factors(IntMatrix::from_triplets(rows.size(), dim, std::move(t)));
  if (inv.rank() != m) throw InconsistencyError("kernel generators have the wrong rank");
  const auto torsion = inv.torsion();
  if (torsion.empty()) return {SpanCheck::Status::Equal};
  const Integer& top = torsion.back();
  for (std::uint64_t d = 2; d <= (1u << 20); ++d)
    if (mpz_divisible_ui_p(top.get_mpz_t(), d)) return {SpanCheck::Status::BadPrime, d};
  return {SpanCheck::Status::Unknown};
}

// Z[G]-generators of the Z[G]-submodule with Z-basis `basis` (columns).
std::vector<Vec> choose_generators(const FiniteGroup& g, const IntMatrix& basis) {
  const std::size_t dim = basis.rows();
  const std::size_t m = basis.cols();
  std::vector<Vec> candidates(m);
  for (const auto& t : basis.triplets()) candidates[t.col].emplace_back(static_cast<std::uint32_t>(t.row), t.value);
  for (auto& c : candidates) std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // small, sparse candidates first
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> height(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [key, val] : candidates[i]) height[i] = std::max(height[i], mpz_sizeinbase(val.get_mpz_t(), 2));
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return std::pair(height[a], candidates[a].size()) < std::pair(height[b], candidates[b].size());
  });

  std::vector<std::size_t> chosen;
  auto orbits = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec> gens;
    for (auto i : idx) gens.push_back(candidates[i]);
    return orbit_rows(g, gens);
  };
  // adds the first unused candidate outside the span modulo q
  auto extend_mod = [&](std::uint64_t q) {
    ModSpan span(dim, q);
    for (const auto& row : orbits(chosen)) span.add(dense_mod(row, dim, q));
    bool added = false;
    for (std::size_t c : order) {
      if (span.rank() == m) break;
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      auto probe = dense_mod(candidates[c], dim, q);
      if (span.reduce(probe)) continue;
      chosen.push_back(c);
      added = true;
      for (Element h = 0; h < g.order(); ++h) span.add(dense_mod(act(g, h, candidates[c]), dim, q));
    }
    return added;
  };

  auto check = [&](const std::vector<std::size_t>& idx) {
    return check_span(orbits(idx), dim, m);
  };

  extend_mod(kPrime);
  for (;;) {
    SpanCheck r = check(chosen);
    if (r.status == SpanCheck::Status::Equal) break;
    bool added = r.status == SpanCheck::Status::BadPrime && extend_mod(r.prime);
    if (!added) {
      auto it = std::find_if(order.begin(), order.end(),
                             [&](std::size_t c) { return std::find(chosen.begin(), chosen.end(), c) == chosen.end(); });
      if (it == order.end()) throw InconsistencyError("kernel basis fails its own span check");
      chosen.push_back(*it);
    }
  }

  // drop redundant generators, latest first
  for (std::size_t k = chosen.size(); k-- > 0 && chosen.size() > 1;) {
    std::vector<std::size_t> trial;
    for (std::size_t j = 0; j < chosen.size(); ++j)
      if (j != k) trial.push_back(chosen[j]);
    if (check(trial).status == SpanCheck::Status::Equal) chosen = std::move(trial);
  }
  std::vector<Vec> gens;
  for (auto i : chosen) gens.push_back(candidates[i]);
  return gens;
}

}  // namespace

void extend_reduced(Resolution& res, int n, const Limits& limits) {
  if (res.kind() != ResolutionKind::Reduced) throw PreconditionError("extend_reduced: not a reduced resolution");
  const FiniteGroup& g = *res.group();
  const std::size_t order = g.order();
  while (res.length() < n) {
    const int k = res.length() + 1;
    IntMatrix previous;
    if (k == 1) {
      std::vector<Triplet> t;
      for (std::size_t e = 0; e < order; ++e) t.push_back({0, e, 1});
      previous = IntMatrix::from_triplets(1, order, std::move(t));
    } else {
      previous = res.differential(k - 1).expand(g);
    }
    IntMatrix kernel = kernel_basis(previous);
    if (auto reduced = lll_reduce(kernel)) kernel = std::move(*reduced);
    const std::size_t rows = res.rank(k - 1);
    std::vector<RingTerm> terms;
    std::size_t cols = 0;
    if (kernel.cols() > 0) {
      auto gens = choose_generators(g, kernel);
      cols = gens.size();
      for (std::size_t j = 0; j < gens.size(); ++j)
        for (const auto& [key, val] : gens[j]) {
          if (!val.fits_slong_p())
            throw CapacityError("resolution coefficient exceeds 64 bits", mpz_sizeinbase(val.get_mpz_t(), 2), 63);
          terms.push_back({static_cast<std::uint32_t>(key / order), static_cast<std::uint32_t>(j),
                           static_cast<Element>(key % order), val.get_si()});
        }
    }
    if (terms.size() > limits.max_nonzeros)
      throw CapacityError("reduced resolution differential d_" + std::to_string(k) + " exceeds the nonzero budget",
                          terms.size(), limits.max_nonzeros);
    res.push(GroupRingMatrix(rows, cols, std::move(terms)));
  }
}

Resolution reduced_resolution(const GroupPtr& g, int n, const Limits& limits) {
  if (n < 1) throw PreconditionError("reduced_resolution: degree must be >= 1");
  Resolution res(g, ResolutionKind::Reduced);
  extend_reduced(res, n, limits);
  return res;
}

// ---------------------------------------------------------------------------
// Checks

bool composes_to_zero(const Resolution& res, std::string* why) {
  const FiniteGroup& g = *res.group();
  for (int k = 1; k < res.length(); ++k) {
    // compose in the group ring: (d_k d_{k+1})(e_j) = sum d_k(c * e_i) over terms c e_i of d_{k+1}(e_j)
    const auto& lower = res.differential(k);
    const auto& upper = res.differential(k + 1);
    std::vector<std::vector<const RingTerm*>> by_col(lower.cols());
    for (const auto& t : lower.terms()) by_col[t.col].push_back(&t);
    std::vector<RingTerm> product;
    for (const auto& u : upper.terms())
      for (const RingTerm* l : by_col[u.row])
        product.push_back({l->row, u.col, g.mul(u.elem, l->elem), u.coeff * l->coeff});
    GroupRingMatrix composite(lower.rows(), upper.cols(), std::move(product));
    if (composite.nonzeros() != 0) {
      if (why) *why = "d_" + std::to_string(k) + " o d_" + std::to_string(k + 1) + " != 0";
      return false;
    }
  }
  return true;
}

bool verify_exactness(const Resolution& res, std::string* why) {
  const FiniteGroup& g = *res.group();
  const std::size_t order = g.order();
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!composes_to_zero(res, why)) return false;
  // degree 0: image of d_1 is the augmentation ideal, rank |G|-1 and saturated
  std::vector<InvariantFactors> inv;
  for (int k = 1; k <= res.length(); ++k) inv.push_back(invariant_factors(res.differential(k).expand(g)));
  auto saturated = [](const InvariantFactors& f) {
    return std::all_of(f.pivots.begin(), f.pivots.end(), [](const Integer& d) { return d == 1; });
  };
  if (res.length() >= 1) {
    if (inv[0].rank() != order - 1 || !saturated(inv[0])) return fail("ker(augmentation) != im d_1");
  }
  for (int k = 1; k < res.length(); ++k) {
    const auto& dk = inv[static_cast<std::size_t>(k - 1)];
    const auto& dk1 = inv[static_cast<std::size_t>(k)];
    if (dk.rank() + dk1.rank() != order * res.rank(k) || !saturated(dk1))
      return fail("not exact in degree " + std::to_string(k));
  }
  return true;
}

}  // namespace pdtool
