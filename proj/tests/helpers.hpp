#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "pdtool/group.hpp"
#include "pdtool/homology.hpp"

namespace testing {

inline pdtool::GroupPtr group(const std::string& shorthand) {
  return pdtool::from_family(pdtool::FamilyDescriptor::parse(shorthand));
}

inline oracle::Table table_of(const pdtool::FiniteGroup& g) {
  oracle::Table t{g.order(), {}};
  for (auto x : g.table()) t.mul.push_back(x);
  return t;
}

inline pdtool::AbelianInvariants cyclic_sum(std::size_t free, std::vector<long> orders) {
  std::vector<pdtool::Integer> o(orders.begin(), orders.end());
  return pdtool::AbelianInvariants::from_orders(free, o);
}

// The fixture set used throughout the periodicity tests.
inline const std::vector<std::string>& fixtures() {
  static const std::vector<std::string> names = {"C1",   "C2",   "C3",   "C4",   "C5", "C6", "C7", "C8",
                                                 "C9",   "C10",  "C11",  "C12",  "C2xC2", "C2xC4", "C3xC3",
                                                 "D6",   "D8",   "D12",  "Q8",   "Q16", "S3", "S4", "A4", "SL23"};
  return names;
}

}  // namespace testing
