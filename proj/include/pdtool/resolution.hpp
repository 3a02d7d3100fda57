#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdtool/errors.hpp"
#include "pdtool/group.hpp"
#include "pdtool/int_matrix.hpp"

namespace pdtool {

/// One coefficient of a matrix over the integral group ring: entry
/// (row, col) contains coeff * elem.
struct RingTerm {
  std::uint32_t row;
  std::uint32_t col;
  Element elem;
  std::int64_t coeff;

  bool operator==(const RingTerm&) const = default;
};

/// Matrix of a map of free left Z[G]-modules Z[G]^cols -> Z[G]^rows.
/// Column j is the image of the j-th basis element.
class GroupRingMatrix {
 public:
  GroupRingMatrix() = default;
  /// Terms are normalized: sorted by (col, row, elem), merged, zeros dropped.
  GroupRingMatrix(std::size_t rows, std::size_t cols, std::vector<RingTerm> terms);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return terms_.size(); }
  const std::vector<RingTerm>& terms() const { return terms_; }

  /// The underlying integer matrix of size |G|*rows x |G|*cols, with
  /// coordinate (i, g) of a free module at index i*|G| + g.
  IntMatrix expand(const FiniteGroup& g) const;
  /// The induced map after applying - (x)_{Z[G]} Z (all group elements sent to 1).
  IntMatrix augment() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingTerm> terms_;
};

enum class ResolutionKind { Bar, Periodic, Reduced };

std::string to_string(ResolutionKind kind);

/// Initial segment F_length -> ... -> F_1 -> F_0 -> Z of a free resolution
/// of the trivial module. differential(k) is d_k : F_k -> F_{k-1}.
class Resolution {
 public:
  Resolution(GroupPtr group, ResolutionKind kind) : group_(std::move(group)), kind_(kind), ranks_{1} {}

  const GroupPtr& group() const { return group_; }
  ResolutionKind kind() const { return kind_; }
  int length() const { return static_cast<int>(differentials_.size()); }
  std::size_t rank(int k) const { return ranks_.at(static_cast<std::size_t>(k)); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const GroupRingMatrix& differential(int k) const;
  /// d_k (x)_{Z[G]} Z as an integer matrix of size rank(k-1) x rank(k).
  IntMatrix tensored(int k) const { return differential(k).augment(); }

  void push(GroupRingMatrix d);

 private:
  GroupPtr group_;
  ResolutionKind kind_;
  std::vector<std::size_t> ranks_;
  std::vector<GroupRingMatrix> differentials_;
};

/// Normalized bar resolution through degree n; rank in degree k is (|G|-1)^k.
/// Throws CapacityError when a differential would exceed limits.max_nonzeros.
Resolution bar_resolution(const GroupPtr& g, int n, const Limits& limits = {});

/// The 2-periodic resolution of a cyclic group: d_odd = t - 1, d_even = N.
Resolution periodic_resolution(const GroupPtr& g, int n);

/// Resolution built degree by degree from integer kernels, choosing
/// Z[G]-generators of each kernel greedily. Much smaller than the bar
/// resolution; the default route for cohomology.
Resolution reduced_resolution(const GroupPtr& g, int n, const Limits& limits = {});

/// Extends a reduced resolution in place to length n.
void extend_reduced(Resolution& res, int n, const Limits& limits = {});

/// d_k o d_{k+1} = 0 for every stored pair, computed exactly.
bool composes_to_zero(const Resolution& res, std::string* why = nullptr);

/// Exactness of Z <- F_0 <- ... <- F_length in degrees 0..length-1, from
/// ranks and invariant factors of the expanded differentials.
bool verify_exactness(const Resolution& res, std::string* why = nullptr);

}  // namespace pdtool
