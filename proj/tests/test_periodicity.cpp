#include "doctest.h"
#include "helpers.hpp"
#include "pdtool/errors.hpp"
#include "pdtool/periodicity.hpp"

using namespace pdtool;
using testing::group;
using testing::table_of;

namespace {

// Criterion (2) from element orders: the p-Sylow is cyclic iff some element
// has order |G|_p; for p = 2 it may instead be a noncyclic 2-group with a
// unique involution. The Sylow itself is taken from the library but its
// closure and order are rechecked here.
bool sylow_oracle(const GroupPtr& g) {
  auto t = table_of(*g);
  const long long n = static_cast<long long>(g->order());
  for (int p : prime_divisors(n)) {
    const long long pa = p_part(n, p);
    bool cyclic = false;
    for (std::uint32_t a = 0; a < t.n; ++a) cyclic = cyclic || static_cast<long long>(t.order_of(a)) == pa;
    if (cyclic) continue;
    if (p != 2) return false;
    auto s = sylow(g, 2);
    REQUIRE(static_cast<long long>(s.order()) == pa);
    int involutions = 0;
    for (auto a : s.elements()) {
      for (auto b : s.elements()) REQUIRE(s.contains(t(a, b)));
      involutions += t.order_of(a) == 2;
    }
    if (involutions != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("criteria examples") {
  CHECK_FALSE(is_periodic_via_abelian(*group("C2xC2")));
  for (int n = 1; n <= 12; ++n) CHECK(is_periodic_via_abelian(*group("C" + std::to_string(n))));
  CHECK(is_periodic_via_abelian(*group("Q16")));
  CHECK(is_periodic_via_sylow(group("Q8")));
  CHECK_FALSE(is_periodic_via_sylow(group("A4")));
  CHECK(is_periodic_via_sylow(group("S3")));
}

TEST_CASE("criteria against oracles on the fixtures") {
  for (const auto& name : testing::fixtures()) {
    auto g = group(name);
    CAPTURE(name);
    CHECK(is_periodic_via_abelian(*g) == !oracle::has_noncyclic_abelian(table_of(*g)));
    CHECK(is_periodic_via_sylow(g) == sylow_oracle(g));
    CHECK(is_periodic_via_abelian(*g) == is_periodic_via_sylow(g));
  }
}

TEST_CASE("period") {
  CHECK(period(group("C2")) == 2);
  CHECK(period(group("C6")) == 2);
  CHECK(period(group("C6"), 8, Route::Periodic) == 2);
  CHECK(period(group("Q8")) == 4);
  CHECK(period(group("Q8"), 4, Route::Bar) == 4);
  CHECK(period(group("S3")) == 4);
  CHECK_FALSE(period(group("C2xC2")).has_value());
  CHECK_FALSE(period(group("Q8"), 3).has_value());
  CHECK_THROWS_AS(period(group("C1")), PreconditionError);
  CHECK_THROWS_AS(period(group("C2"), 0), PreconditionError);
}

TEST_CASE("periodicity reports") {
  auto v4 = periodicity_report(group("C2xC2"));
  CHECK_FALSE(v4.via_abelian);
  CHECK_FALSE(v4.via_sylow);
  CHECK_FALSE(v4.period.has_value());
  CHECK(v4.via_cohomology.state == CohomologyWitness::State::NotFoundBelowBound);

  auto q8 = periodicity_report(group("Q8"));
  CHECK(q8.via_abelian);
  CHECK(q8.via_sylow);
  CHECK(q8.period == 4);
  CHECK(q8.via_cohomology.state == CohomologyWitness::State::Found);
  CHECK(q8.via_cohomology.degree == 4);
  CHECK(q8.search_bound == 8);

  auto sl = periodicity_report(group("SL23"));
  CHECK(sl.via_abelian);
  CHECK(sl.via_sylow);
  REQUIRE(sl.period.has_value());
  CHECK(cohomology(group("SL23"), *sl.period).is_cyclic_of_order(24));

  auto skip = periodicity_report(group("Q8"), 0);
  CHECK(skip.via_cohomology.state == CohomologyWitness::State::NotSearched);
  CHECK_FALSE(skip.period.has_value());
  CHECK(periodicity_report(group("C1")).via_cohomology.state == CohomologyWitness::State::NotSearched);
  CHECK(to_string(CohomologyWitness::State::Found) == "witness");
}
