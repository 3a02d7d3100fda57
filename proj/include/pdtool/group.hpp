#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pdtool/errors.hpp"

namespace pdtool {

using Element = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as its image list.
using Permutation = std::vector<std::uint32_t>;

/// Named families understood by from_family. Orders, not ranks, are the
/// parameters: Dihedral(8) has order 8 and GeneralisedQuaternion(8) is Q8.
struct FamilyDescriptor {
  enum class Kind { Cyclic, Dihedral, GeneralisedQuaternion, Symmetric, Alternating, SL23, DirectProduct };

  Kind kind = Kind::Cyclic;
  std::vector<int> params;
  std::vector<FamilyDescriptor> factors;  // DirectProduct only

  static FamilyDescriptor cyclic(int n) { return {Kind::Cyclic, {n}, {}}; }
  static FamilyDescriptor dihedral(int order) { return {Kind::Dihedral, {order}, {}}; }
  static FamilyDescriptor quaternion(int order) { return {Kind::GeneralisedQuaternion, {order}, {}}; }
  static FamilyDescriptor symmetric(int n) { return {Kind::Symmetric, {n}, {}}; }
  static FamilyDescriptor alternating(int n) { return {Kind::Alternating, {n}, {}}; }
  static FamilyDescriptor sl23() { return {Kind::SL23, {}, {}}; }
  static FamilyDescriptor product(FamilyDescriptor a, FamilyDescriptor b) {
    return {Kind::DirectProduct, {}, {std::move(a), std::move(b)}};
  }

  /// Canonical shorthand, e.g. "Q8", "C2xC4", "SL23".
  std::string shorthand() const;
  /// Parses the shorthand grammar: C<n>, D<2n>, Q<4n>, S<n>, A<n>, SL23 or
  /// SL(2,3), and products joined by 'x'.
  static FamilyDescriptor parse(const std::string& text);
};

/// Where a group came from; kept for reporting and reproducibility.
struct GroupOrigin {
  int degree = 0;
  std::vector<Permutation> generators;
  std::string family;        // shorthand, empty for raw permutation input
  std::string presentation;  // human-readable presentation, when known
};

/// A finite group materialized as a Cayley table. Element 0 is the
/// identity and elements are indexed breadth-first from it.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<Element> table, std::size_t order, GroupOrigin origin,
              std::vector<Permutation> elements);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  std::uint32_t element_order(Element a) const { return element_orders_[a]; }
  std::span<const std::uint32_t> element_orders() const { return element_orders_; }
  std::span<const Element> table() const { return table_; }
  const GroupOrigin& origin() const { return origin_; }
  const Permutation& permutation(Element a) const { return elements_[a]; }
  Element power(Element a, long long e) const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  /// Latin-square, identity and associativity checks. Associativity is
  /// exhaustive up to order 50 and sampled (10^6 triples) above.
  bool validate(std::string* why = nullptr) const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::uint32_t> element_orders_;
  std::vector<Permutation> elements_;
  GroupOrigin origin_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Sorted element set closed under the parent's multiplication.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Element> elements);

  const FiniteGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  std::span<const Element> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element e) const;

  static Subgroup whole(GroupPtr g);
  /// The subgroup generated by `gens`.
  static Subgroup generated(GroupPtr g, std::span<const Element> gens);

 private:
  GroupPtr parent_;
  std::vector<Element> elements_;
};

GroupPtr from_permutations(std::span<const Permutation> generators, const Limits& limits = {});
GroupPtr from_family(const FamilyDescriptor& family, const Limits& limits = {});

/// Deterministic Sylow p-subgroup: seeded at the lowest-index element of
/// p-power order, grown through normalizers.
Subgroup sylow(const GroupPtr& g, int p);

bool is_cyclic(const Subgroup& h);
bool is_generalised_quaternion(const Subgroup& h);
bool has_noncyclic_abelian_subgroup(const FiniteGroup& g);

bool is_prime(long long n);
std::vector<int> prime_divisors(long long n);
/// Largest power of p dividing n.
long long p_part(long long n, int p);

}  // namespace pdtool
