// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "pdtool/connectivity.hpp"
#include "pdtool/errors.hpp"
#include "pdtool/periodicity.hpp"
#include "pdtool/smith.hpp"
#include "pdtool/swan.hpp"

using namespace pdtool;
using testing::group;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(1);
  o << std::fixed << s << "s";
  return o.str();
}

// H^n from the dual complex, computed here from transposed matrices.
AbelianInvariants dual_cohomology(const Resolution& res, int n) {
  auto inv = [&](int k) { return invariant_factors(res.tensored(k).transpose()); };
  const auto next = inv(n + 1);
  AbelianInvariants h;
  if (n == 0) {
    h.free_rank = res.rank(0) - next.rank();
    return h;
  }
  const auto prev = inv(n);
  h.free_rank = res.rank(n) - next.rank() - prev.rank();
  h.torsion = prev.torsion();
  return h;
}

// 1. The three periodicity criteria agree on the fixtures.
Outcome criterion_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  int periodic = 0;
  for (const auto& name : testing::fixtures()) {
    auto g = group(name);
    const bool abelian = is_periodic_via_abelian(*g);
    const bool sylow = is_periodic_via_sylow(g);
    std::optional<int> witness;
    if (g->order() == 1) {
      witness = 1;  // every H^n vanishes, which is Z/1
    } else {
      CohomologyCalculator calc(g);
      for (int n = 1; n <= 8 && !witness; ++n)
        if (calc.cohomology(n).is_cyclic_of_order(static_cast<unsigned long>(g->order()))) witness = n;
    }
    if (abelian != sylow || abelian != witness.has_value()) {
      o.pass = false;
      o.detail += name + " disagrees; ";
    }
    periodic += abelian;
  }
  const double secs = seconds_since(t0);
  if (secs > 300) {
    o.pass = false;
    o.detail += "over 5 minutes; ";
  }
  o.detail += std::to_string(testing::fixtures().size()) + " groups, " + std::to_string(periodic) + " periodic, " +
              fmt_seconds(secs);
  return o;
}

// 2. Bar and periodic resolutions agree on cyclic groups.
Outcome dual_oracle() {
  Outcome o;
  Limits limits = Limits::from_environment();
  limits.max_nonzeros = std::max<std::size_t>(limits.max_nonzeros, 20'000'000);
  std::vector<int> agreed, out_of_budget;
  for (int n = 1; n <= 12; ++n) {
    auto g = group("C" + std::to_string(n));
    try {
      CohomologyCalculator bar(g, Route::Bar, limits), periodic(g, Route::Periodic, limits);
      bool same = true;
      for (int k = 6; k >= 0; --k) same = same && bar.cohomology(k) == periodic.cohomology(k);
      if (!same) {
        o.pass = false;
        o.detail += "C" + std::to_string(n) + " differs; ";
      } else {
        agreed.push_back(n);
      }
    } catch (const CapacityError&) {
      o.pass = false;
      out_of_budget.push_back(n);
    }
    if (n >= 2 && period(g) != 2) {
      o.pass = false;
      o.detail += "period(C" + std::to_string(n) + ") != 2; ";
    }
  }
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (int n : v) s += (s.empty() ? "C" : ",C") + std::to_string(n);
    return s.empty() ? std::string("none") : s;
  };
  o.detail += "agree through degree 6: " + list(agreed);
  if (!out_of_budget.empty())
    o.detail += "; bar differential d_7 over the " + std::to_string(limits.max_nonzeros) +
                "-entry budget: " + list(out_of_budget);
  return o;
}

// 3. Q8 on the bar route.
Outcome quaternion_period() {
  Outcome o;
  auto q8 = group("Q8");
  CohomologyCalculator bar(q8, Route::Bar);
  const auto p = period(bar, 4);
  if (p != 4) o.pass = false;
  if (!bar.cohomology(4).is_cyclic_of_order(8)) o.pass = false;
  for (int n = 1; n <= 3; ++n)
    if (bar.cohomology(n).is_cyclic_of_order(8)) o.pass = false;
  o.detail = "period " + (p ? std::to_string(*p) : std::string("none")) + ", H^4 = " + bar.cohomology(4).to_string() +
             ", H^1..H^3 = " + bar.cohomology(1).to_string() + "; " + bar.cohomology(2).to_string() + "; " +
             bar.cohomology(3).to_string();
  return o;
}

// 4. Swan counts.
Outcome swan_counts() {
  Outcome o;
  auto q8 = group("Q8"), c2 = group("C2");
  auto c = classify_hreps(q8, 3);
  if (c.oriented_count != 4 || c.unoriented_count != 2 || c.k_invariants != std::vector<std::uint64_t>{1, 3, 5, 7})
    o.pass = false;
  int checked = 1;
  for (int d : {1, 2, 4}) {
    auto z = classify_hreps(q8, d);
    o.pass = o.pass && z.oriented_count == 0 && z.unoriented_count == 0;
    ++checked;
  }
  for (int d = 1; d <= 6; ++d) {
    auto x = classify_hreps(c2, d);
    o.pass = o.pass && x.oriented_count == 1 && x.unoriented_count == 1;
    ++checked;
  }
  for (const char* name : {"Q8", "C2", "C3", "S3", "C2xC2", "Q16", "SL23"})
    for (int d = 1; d <= 7; ++d)
      o.pass = o.pass && count_free_invertible_spectra(group(name), d) == classify_hreps(group(name), d).unoriented_count;
  o.detail = "Q8 d=3 gives (" + std::to_string(c.oriented_count) + ", " + std::to_string(c.unoriented_count) + "); " +
             std::to_string(checked) + " classifications and 49 spectrum counts checked";
  return o;
}

// 5. Smith normal form property suite.
Outcome smith_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 60);
  std::uniform_int_distribution<int> value(-9, 9);
  std::uniform_real_distribution<double> density(0.02, 0.3);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = dim(rng), n = dim(rng);
    std::bernoulli_distribution keep(density(rng));
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (keep(rng))
          if (int v = value(rng)) t.push_back({i, j, v});
    IntMatrix a = IntMatrix::from_triplets(m, n, std::move(t));
    auto s = smith_normal_form(a);
    bool ok = s.U * a * s.V == s.D;
    ok = ok && abs(oracle::determinant(s.U.to_dense())) == 1 && abs(oracle::determinant(s.V.to_dense())) == 1;
    for (std::size_t i = 0; i + 1 < s.pivots.size() && ok; ++i) ok = s.pivots[i] > 0 && s.pivots[i + 1] % s.pivots[i] == 0;
    for (const auto& e : s.D.triplets()) ok = ok && e.row == e.col && e.row < s.pivots.size() && e.value == s.pivots[e.row];
    ok = ok && s.D.nonzeros() == s.pivots.size();
    if (!ok) ++failures;
  }
  const double secs = seconds_since(t0);
  o.pass = failures == 0 && secs < 120;
  o.detail = std::to_string(failures) + " failures in 1000 matrices, " + fmt_seconds(secs);
  return o;
}

// 6. Universal coefficients: library homology against dual-complex cohomology.
Outcome universal_coefficients() {
  Outcome o;
  int checks = 0;
  for (const auto& name : testing::fixtures()) {
    auto g = group(name);
    auto res = reduced_resolution(g, 7);
    CohomologyCalculator calc(g);
    if (!dual_cohomology(res, 1).is_trivial()) {
      o.pass = false;
      o.detail += name + " has H^1 != 0; ";
    }
    for (int n = 2; n <= 6; ++n, ++checks)
      if (!(dual_cohomology(res, n) == calc.homology(n - 1)) || !(calc.cohomology(n) == calc.homology(n - 1))) {
        o.pass = false;
        o.detail += name + " fails at n=" + std::to_string(n) + "; ";
      }
  }
  o.detail += std::to_string(checks) + " degree checks on " + std::to_string(testing::fixtures().size()) + " groups";
  return o;
}

// 7. Connectivity calculus.
Outcome connectivity() {
  Outcome o;
  int exhaustive = 0, violations = 0;
  for (int dG = 0; dG <= 10; ++dG)
    for (int de = dG + 3; de <= 30; ++de, ++exhaustive) {
      const long long hand = de - 2LL * dG - 3;
      auto k = isov_space_connectivity({{{dG, de}}, false});
      const bool ok = hand < -1 ? !k.has_value() : (k && *k == ConnectivityBound::of(hand));
      if (!ok) ++violations;
    }
  int dominance = 0;
  for (int de = 3; de <= 100; ++de)
    for (int dG = 0; dG + 3 <= de; ++dG, ++dominance) {
      auto t = explain_isov_connectivity({{{dG, de}}, false});
      ConnectivityBound klein, fib;
      for (const auto& s : t.steps) {
        if (s.rule == "klein-embedding") klein = s.output;
        if (s.rule == "fibration-comparison") fib = s.output;
      }
      if (fib < klein || de - 2 * dG - 3 > 2 * de - 3 * dG - 4) ++violations;
    }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(0, 60), count(1, 3);
  auto value = [](const std::optional<ConnectivityBound>& b) { return b ? *b : ConnectivityBound::of(-100); };
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    DimensionProfile p;
    for (int c = count(rng); c > 0; --c) {
      const int de = dim(rng);
      std::uniform_int_distribution<int> g(-1, de);
      const int dG = g(rng);
      p.components.push_back({dG < 0 ? std::nullopt : std::optional<int>(dG), de});
    }
    p.fixed_inclusion_1_connected = rng() % 2;
    const auto k = value(isov_space_connectivity(p));
    auto up = p;
    up.components[rng() % up.components.size()].d_e += 1;
    auto more = p;
    more.components.push_back({std::optional<int>(dim(rng) % 10), 60});
    auto flagged = p;
    flagged.fixed_inclusion_1_connected = true;
    if (value(isov_space_connectivity(up)) < k || k < value(isov_space_connectivity(more)) ||
        value(isov_space_connectivity(flagged)) < k)
      ++violations;
  }
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations over " + std::to_string(exhaustive) + " exhaustive, " +
             std::to_string(dominance) + " dominance and " + std::to_string(samples) + " random cases";
  return o;
}

// 8. The documented example commands are byte-for-byte deterministic.
std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome cli_determinism() {
  Outcome o;
  const std::vector<std::string> examples = {
      "swan --family Q8 --dim 3 --format json",
      "isov --components 2:9 --format json",
      "period --family C2xC2 --format json",
      "periodicity --family SL23 --format json",
      "period --family Q8 --route bar --degree-bound 4 --format json",
      "cohomology --family S4 --degree 4 --format json",
      "homology --family C2xC2 --degree 3 --route bar --format json",
      "invertible-spectra --family Q16 --dim 7 --format json",
      "isov --components 2:9,none:4 --one-connected --format json",
      "isov --components 2:4 --format json",
      "explain --components 2:9 --format json",
      "bounds --rule stabilisation-map --args 5,4,1,1 --format json",
      "bounds --format json",
  };
  int runs = 0;
  for (const auto& args : examples) {
    const std::string command = std::string(PDTOOL_BINARY) + " " + args + " 2>/dev/null";
    int status = 0;
    const std::string first = capture(command, status);
    bool ok = status == 0 && !first.empty();
    for (int i = 0; i < 2; ++i) {
      int again_status = 0;
      ok = ok && capture(command, again_status) == first && again_status == status;
    }
    runs += 3;
    if (!ok) {
      o.pass = false;
      o.detail += "'" + args + "' differs or fails; ";
    }
  }
  o.detail += std::to_string(examples.size()) + " commands, " + std::to_string(runs) + " runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"criterion equivalence", criterion_equivalence},
      {"bar vs periodic cohomology of cyclic groups", dual_oracle},
      {"Q8 period on the bar route", quaternion_period},
      {"Swan counts", swan_counts},
      {"Smith normal form properties", smith_suite},
      {"universal coefficients", universal_coefficients},
      {"connectivity calculus", connectivity},
      {"CLI determinism", cli_determinism},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index++ << " " << name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
