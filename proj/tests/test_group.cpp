#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "pdtool/errors.hpp"

using namespace pdtool;
using testing::group;
using testing::table_of;

TEST_CASE("permutation input") {
  auto c2 = from_permutations(std::vector<Permutation>{{1, 0}});
  CHECK(c2->order() == 2);

  // i -> i+1 and i -> -i mod 4
  std::vector<Permutation> gens = {{1, 2, 3, 0}, {0, 3, 2, 1}};
  auto d8 = from_permutations(gens);
  CHECK(d8->order() == oracle::closure(gens, 4).size());
  CHECK(d8->order() == 8);
  CHECK(d8->validate());

  CHECK_THROWS_AS(from_permutations(std::vector<Permutation>{}), PreconditionError);
  CHECK_THROWS_AS(from_permutations(std::vector<Permutation>{{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(from_permutations(std::vector<Permutation>{{1, 0}, {0, 1, 2}}), PreconditionError);
}

TEST_CASE("order cap") {
  Limits tight;
  tight.order_cap = 10;
  CHECK_THROWS_AS(from_family(FamilyDescriptor::symmetric(4), tight), CapacityError);
}

TEST_CASE("element orders agree with the permutations themselves") {
  for (const auto& name : testing::fixtures()) {
    auto g = group(name);
    CAPTURE(name);
    REQUIRE(g->validate());
    for (Element a = 0; a < g->order(); ++a) CHECK(g->element_order(a) == oracle::perm_order(g->permutation(a)));
    std::vector<Permutation> gens = g->origin().generators;
    if (!gens.empty()) CHECK(oracle::closure(gens, gens[0].size()).size() == g->order());
  }
}

TEST_CASE("families") {
  CHECK(group("C1")->order() == 1);

  auto q8 = group("Q8");
  CHECK(q8->order() == 8);
  CHECK(std::count(q8->element_orders().begin(), q8->element_orders().end(), 2u) == 1);

  auto v4 = from_family(FamilyDescriptor::product(FamilyDescriptor::cyclic(2), FamilyDescriptor::cyclic(2)));
  CHECK(v4->order() == 4);
  CHECK(std::count(v4->element_orders().begin(), v4->element_orders().end(), 2u) == 3);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) CHECK(v4->commute(a, b));

  CHECK(group("SL(2,3)")->order() == 24);
  CHECK(group("D12")->order() == 12);
  CHECK(group("A5")->order() == 60);
  CHECK(FamilyDescriptor::parse("C2xC4").shorthand() == "C2xC4");
  CHECK_THROWS_AS(FamilyDescriptor::parse("Z7"), PreconditionError);
  CHECK_THROWS_AS(group("D7"), PreconditionError);
  CHECK_THROWS_AS(group("Q6"), PreconditionError);
}

TEST_CASE("generalised quaternion groups have a unique involution") {
  for (int n = 2; n <= 8; ++n) {
    auto g = from_family(FamilyDescriptor::quaternion(4 * n));
    CAPTURE(n);
    CHECK(g->order() == static_cast<std::size_t>(4 * n));
    CHECK(g->validate());
    auto t = table_of(*g);
    int involutions = 0, max_order = 0;
    for (Element a = 0; a < g->order(); ++a) {
      involutions += t.order_of(a) == 2;
      max_order = std::max<int>(max_order, static_cast<int>(t.order_of(a)));
    }
    CHECK(involutions == 1);
    CHECK(max_order == 2 * n);
    // the quaternion test is about 2-groups; Q12, Q20, Q24, Q28 are not
    CHECK(is_generalised_quaternion(Subgroup::whole(g)) == ((n & (n - 1)) == 0));
  }
}

TEST_CASE("sylow subgroups") {
  auto q8 = group("Q8");
  CHECK(sylow(q8, 2).order() == 8);
  auto s3 = group("S3");
  CHECK(sylow(s3, 3).order() == 3);
  CHECK_THROWS_AS(sylow(s3, 4), PreconditionError);

  // A4 has exactly one subgroup of order 4 and it is the Klein group
  auto a4 = group("A4");
  auto t = table_of(*a4);
  auto order4 = oracle::subgroups_of_order(t, 4);
  REQUIRE(order4.size() == 1);
  auto p = sylow(a4, 2);
  CHECK(std::vector<Element>(p.elements().begin(), p.elements().end()) == order4[0]);
  for (auto x : order4[0])
    if (x != t.identity()) CHECK(t.order_of(x) == 2);
  CHECK_FALSE(is_cyclic(p));

  for (const auto& name : testing::fixtures()) {
    auto g = group(name);
    for (int q : prime_divisors(static_cast<long long>(g->order()))) {
      auto s = sylow(g, q);
      CAPTURE(name);
      CAPTURE(q);
      CHECK(static_cast<long long>(s.order()) == p_part(static_cast<long long>(g->order()), q));
      for (auto a : s.elements())
        for (auto b : s.elements()) CHECK(s.contains(g->mul(a, b)));
    }
  }
}

TEST_CASE("cyclicity and quaternion tests") {
  auto s3 = group("S3");
  CHECK(is_cyclic(Subgroup::generated(s3, {})));
  CHECK(is_cyclic(sylow(s3, 3)));
  CHECK_FALSE(is_cyclic(Subgroup::whole(group("C2xC2"))));
  CHECK(is_generalised_quaternion(Subgroup::whole(group("Q8"))));
  CHECK_FALSE(is_generalised_quaternion(Subgroup::whole(group("C8"))));
  CHECK_FALSE(is_generalised_quaternion(Subgroup::whole(group("D8"))));
  auto d8 = table_of(*group("D8"));
  int inv = 0;
  for (std::uint32_t a = 0; a < 8; ++a) inv += d8.order_of(a) == 2;
  CHECK(inv == 5);
}

TEST_CASE("noncyclic abelian subgroups against a commuting-pair scan") {
  CHECK(has_noncyclic_abelian_subgroup(*group("C2xC2")));
  CHECK_FALSE(has_noncyclic_abelian_subgroup(*group("Q8")));
  CHECK(has_noncyclic_abelian_subgroup(*group("A4")));
  for (const auto& name : testing::fixtures()) {
    auto g = group(name);
    CAPTURE(name);
    CHECK(has_noncyclic_abelian_subgroup(*g) == oracle::has_noncyclic_abelian(table_of(*g)));
  }
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(360) == std::vector<int>{2, 3, 5});
  CHECK(p_part(360, 2) == 8);
  CHECK(p_part(360, 7) == 1);
}
