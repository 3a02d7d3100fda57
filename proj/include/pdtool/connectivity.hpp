#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pdtool {

/// A connectivity estimate: an integer >= -2 or unbounded. -2 carries no
/// information and absorbs sums; -1 means nonempty.
class ConnectivityBound {
 public:
  static constexpr long long kNone = -2;

  ConnectivityBound() = default;
  /// Values below -2 are clamped to -2.
  static ConnectivityBound of(long long v) { return ConnectivityBound(v < kNone ? kNone : v, false); }
  static ConnectivityBound none() { return ConnectivityBound(kNone, false); }
  static ConnectivityBound unbounded() { return ConnectivityBound(0, true); }

  bool is_unbounded() const { return unbounded_; }
  bool is_none() const { return !unbounded_ && value_ == kNone; }
  /// Requires !is_unbounded().
  long long value() const;

  /// "no information", "nonempty", "3-connected", "unbounded".
  std::string meaning() const;
  std::string to_string() const;

  friend bool operator==(const ConnectivityBound&, const ConnectivityBound&) = default;
  /// Total order with unbounded on top.
  friend bool operator<(const ConnectivityBound& a, const ConnectivityBound& b);
  friend bool operator<=(const ConnectivityBound& a, const ConnectivityBound& b) { return !(b < a); }

  friend ConnectivityBound min(const ConnectivityBound& a, const ConnectivityBound& b) { return b < a ? b : a; }

 private:
  ConnectivityBound(long long v, bool u) : value_(v), unbounded_(u) {}
  long long value_ = kNone;
  bool unbounded_ = false;
};

// Affine arithmetic with -2 absorbing and unbounded dominating the rest.
ConnectivityBound operator+(const ConnectivityBound& a, const ConnectivityBound& b);
ConnectivityBound scale_add(long long factor, const ConnectivityBound& c, long long offset);

/// Connectivity n + m of the Blakers-Massey comparison map.
ConnectivityBound blakers_massey(const ConnectivityBound& n, const ConnectivityBound& m);

/// min(c_e - d_e, c_G - d_G) for a semifree pair, c_e - d_e for a free one.
/// The differences are connectivity minus dimension.
ConnectivityBound mapping_space_connectivity(const ConnectivityBound& c_e, int d_e, const ConnectivityBound& c_G,
                                             int d_G, bool semifree);

/// 2k + 1 for the unit of the join; requires k >= 0.
ConnectivityBound join_unit_connectivity(const ConnectivityBound& k);

/// 2k + 1 - d after join stabilisation of a d-dimensional free pair.
ConnectivityBound join_stabilisation_connectivity(const ConnectivityBound& k, int d);

/// (2 c_e + 1, min(2 c_G + 1, c_e)): underlying and fixed-point connectivity
/// of the semifree Freudenthal map.
std::pair<ConnectivityBound, ConnectivityBound> semifree_freudenthal(const ConnectivityBound& c_e,
                                                                     const ConnectivityBound& c_G);

/// min(2 c_e + 1 - d_e, min(2 c_G + 1, c_e) - d_G).
ConnectivityBound stabilisation_map_connectivity(const ConnectivityBound& c_e, int d_e, const ConnectivityBound& c_G,
                                                 int d_G);

/// k - 1 for a codimension k >= 2 destabilisation.
ConnectivityBound destabilisation_connectivity(int k);

/// r - 1 for automorphisms of an r-dimensional (r >= 1) free pair.
ConnectivityBound automorphism_comparison_connectivity(int r);

/// k <= d - 3 and r >= 2k - d + 2.
bool klein_embedding_feasible(int k, int d, const ConnectivityBound& r);

/// k <= conn_g + conn_f (absorbing sum) and conn_f >= 2.
bool cell_lifting_feasible(int k, const ConnectivityBound& conn_g, const ConnectivityBound& conn_f);

/// One component of a semifree Poincare space. An absent d_G means the
/// fixed points of that component are empty.
struct DimensionComponent {
  std::optional<int> d_G;
  int d_e = 0;
};

struct DimensionProfile {
  std::vector<DimensionComponent> components;
  bool fixed_inclusion_1_connected = false;

  /// Throws PreconditionError unless there is at least one component and
  /// 0 <= d_G <= d_e for each.
  void validate() const;
  /// Every component with nonempty fixed points has d_G + 3 <= d_e.
  bool satisfies_codimension() const;
};

/// Connectivity of the space of isovariant structures, or nullopt when the
/// codimension hypothesis fails or the bound is below -1. Components with
/// empty fixed points impose nothing; if all are empty the bound is
/// unbounded.
std::optional<ConnectivityBound> isov_space_connectivity(const DimensionProfile& profile);

/// Reason the estimate is unavailable, empty when it is available.
std::string isov_inapplicability(const DimensionProfile& profile);

struct DerivationStep {
  std::string rule;    // name understood by replay_step
  std::string source;  // the statement the rule comes from
  std::optional<std::size_t> component;
  std::vector<std::pair<std::string, long long>> inputs;
  bool is_constraint = false;  // output bounds the degree n rather than a connectivity
  ConnectivityBound output;
};

struct DerivationTrace {
  std::vector<DerivationStep> steps;
  std::optional<ConnectivityBound> result;
};

/// Step-by-step derivation of the isovariant-structure estimate. Throws
/// PreconditionError if the codimension hypothesis fails.
DerivationTrace explain_isov_connectivity(const DimensionProfile& profile);

/// Recomputes a step's output from its rule and inputs.
ConnectivityBound replay_step(const DerivationStep& step);

}  // namespace pdtool
