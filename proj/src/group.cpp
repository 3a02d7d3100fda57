#include "pdtool/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <random>

namespace pdtool {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("PDTOOL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw PreconditionError(std::string("PDTOOL_BUDGET must be a positive integer, got '") + env + "'");
    limits.max_nonzeros = static_cast<std::size_t>(v);
  }
  return limits;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(long long n) {
  std::vector<int> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

long long p_part(long long n, int p) {
  long long q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::vector<Element> table, std::size_t order, GroupOrigin origin,
                         std::vector<Permutation> elements)
    : order_(order),
      table_(std::move(table)),
      inverses_(order),
      element_orders_(order),
      elements_(std::move(elements)),
      origin_(std::move(origin)) {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        inverses_[a] = b;
        break;
      }
    }
    std::uint32_t n = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++n;
    element_orders_[a] = n;
  }
}

Element FiniteGroup::power(Element a, long long e) const {
  long long n = element_orders_[a];
  e %= n;
  if (e < 0) e += n;
  Element r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t n = order_;
  for (Element a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) return fail("element 0 is not the identity");
  }
  std::vector<char> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      Element c = mul(a, b);
      if (c >= n || seen[c]) return fail("row " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      Element c = mul(b, a);
      if (seen[c]) return fail("column " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
  }
  auto assoc = [&](Element a, Element b, Element c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (n <= 50) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return fail("associativity fails");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 1'000'000; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng))) return fail("associativity fails");
  }
  for (Element a = 0; a < n; ++a) {
    Element x = a;
    std::uint32_t k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    if (element_orders_[a] != k) return fail("element order mismatch at " + std::to_string(a));
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(Element e) const { return std::binary_search(elements_.begin(), elements_.end(), e); }

Subgroup Subgroup::whole(GroupPtr g) {
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(std::move(g), std::move(all));
}

namespace {

std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

Subgroup Subgroup::generated(GroupPtr g, std::span<const Element> gens) {
  auto elems = closure(*g, gens);
  return Subgroup(std::move(g), std::move(elems));
}

// ---------------------------------------------------------------------------
// Construction

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a*b)(i) = a(b(i))
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

void check_permutation(const Permutation& p, std::size_t degree, std::size_t index) {
  if (p.size() != degree)
    throw PreconditionError("generator " + std::to_string(index) + " has degree " + std::to_string(p.size()) +
                            ", expected " + std::to_string(degree));
  std::vector<char> seen(degree, 0);
  for (auto v : p) {
    if (v >= degree || seen[v])
      throw PreconditionError("generator " + std::to_string(index) + " is not a bijection");
    seen[v] = 1;
  }
}

GroupPtr build(std::span<const Permutation> generators, const Limits& limits, GroupOrigin origin) {
  if (generators.empty()) throw PreconditionError("generator list is empty");
  const std::size_t degree = generators[0].size();
  if (degree == 0) throw PreconditionError("permutation degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) check_permutation(generators[i], degree, i);

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);

  std::map<Permutation, Element> index;
  std::vector<Permutation> elements{identity};
  index.emplace(identity, 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : generators) {
      Permutation y = compose(elements[i], s);
      if (index.find(y) == index.end()) {
        if (elements.size() >= limits.order_cap)
          throw CapacityError("generated group exceeds the order cap", elements.size() + 1, limits.order_cap);
        index.emplace(y, static_cast<Element>(elements.size()));
        elements.push_back(std::move(y));
      }
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));

  origin.degree = static_cast<int>(degree);
  origin.generators.assign(generators.begin(), generators.end());
  return std::make_shared<const FiniteGroup>(std::move(table), n, std::move(origin), std::move(elements));
}

Permutation cycle_perm(std::size_t degree, std::initializer_list<std::uint32_t> cycle) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::uint32_t> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

struct FamilyPerms {
  std::size_t degree;
  std::vector<Permutation> gens;
  std::string presentation;
};

FamilyPerms family_perms(const FamilyDescriptor& f);

void require_param(const FamilyDescriptor& f, const char* name) {
  if (f.params.size() != 1) throw PreconditionError(std::string(name) + " takes exactly one integer parameter");
}

FamilyPerms family_perms(const FamilyDescriptor& f) {
  using K = FamilyDescriptor::Kind;
  switch (f.kind) {
    case K::Cyclic: {
      require_param(f, "Cyclic");
      int n = f.params[0];
      if (n < 1) throw PreconditionError("Cyclic(n) needs n >= 1");
      Permutation p(n);
      for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
      return {static_cast<std::size_t>(n), {p}, "<a | a^" + std::to_string(n) + ">"};
    }
    case K::Dihedral: {
      require_param(f, "Dihedral");
      int order = f.params[0];
      if (order < 4 || order % 2 != 0) throw PreconditionError("Dihedral(2n) needs an even order 2n with n >= 2");
      int n = order / 2;
      std::string pres = "<r, s | r^" + std::to_string(n) + ", s^2, srs^-1 = r^-1>";
      if (n == 2) {
        // The 2-gon action is not faithful; use the regular action of C2xC2.
        return {4, {cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3})}, pres};
      }
      Permutation r(n), s(n);
      for (int i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
      }
      return {static_cast<std::size_t>(n), {r, s}, pres};
    }
    case K::GeneralisedQuaternion: {
      require_param(f, "GeneralisedQuaternion");
      int order = f.params[0];
      if (order < 8 || order % 4 != 0)
        throw PreconditionError("GeneralisedQuaternion(4n) needs an order 4n with n >= 2");
      int n = order / 4;
      int m = 2 * n;
      // Left-regular action on words a^i b^j, i < 2n, j < 2, index i + 2n*j.
      Permutation a(order), b(order);
      for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < m; ++i) {
          int w = i + m * j;
          a[w] = ((i + 1) % m) + m * j;
          // b a^i = a^-i b ; b^2 = a^n
          int ni = ((m - i) % m);
          b[w] = j == 0 ? ni + m : (ni + n) % m;
        }
      }
      std::string pres = "<a, b | a^" + std::to_string(m) + ", b^2 = a^" + std::to_string(n) + ", bab^-1 = a^-1>";
      return {static_cast<std::size_t>(order), {a, b}, pres};
    }
    case K::Symmetric: {
      require_param(f, "Symmetric");
      int n = f.params[0];
      if (n < 1 || n > 5) throw PreconditionError("Symmetric(n) supports 1 <= n <= 5");
      if (n == 1) return {1, {Permutation{0}}, "<>"};
      Permutation c(n);
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
      return {static_cast<std::size_t>(n), {cycle_perm(n, {0, 1}), c}, "S" + std::to_string(n) + " on " + std::to_string(n) + " points"};
    }
    case K::Alternating: {
      require_param(f, "Alternating");
      int n = f.params[0];
      if (n < 1 || n > 5) throw PreconditionError("Alternating(n) supports 1 <= n <= 5");
      if (n < 3) return {1, {Permutation{0}}, "<>"};
      std::vector<Permutation> gens;
      for (int i = 0; i + 2 < n; ++i)
        gens.push_back(cycle_perm(n, {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1),
                                      static_cast<std::uint32_t>(i + 2)}));
      return {static_cast<std::size_t>(n), gens, "A" + std::to_string(n) + " on " + std::to_string(n) + " points"};
    }
    case K::SL23: {
      if (!f.params.empty()) throw PreconditionError("SL(2,3) takes no parameters");
      // Action on the 8 nonzero vectors (x, y) of F_3^2, indexed 3x + y - 1.
      auto act = [](int a, int b, int c, int d) {
        Permutation p(8);
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y) {
            if (x == 0 && y == 0) continue;
            int nx = (a * x + b * y) % 3, ny = (c * x + d * y) % 3;
            p[3 * x + y - 1] = static_cast<std::uint32_t>(3 * nx + ny - 1);
          }
        return p;
      };
      return {8, {act(1, 1, 0, 1), act(1, 0, 1, 1)}, "SL(2,3) acting on F_3^2 \\ {0}"};
    }
    case K::DirectProduct: {
      if (f.factors.size() != 2) throw PreconditionError("DirectProduct takes exactly two factors");
      auto left = family_perms(f.factors[0]);
      auto right = family_perms(f.factors[1]);
      std::size_t degree = left.degree + right.degree;
      std::vector<Permutation> gens;
      for (const auto& g : left.gens) {
        Permutation p(degree);
        std::iota(p.begin(), p.end(), 0u);
        for (std::size_t i = 0; i < left.degree; ++i) p[i] = g[i];
        gens.push_back(p);
      }
      for (const auto& g : right.gens) {
        Permutation p(degree);
        std::iota(p.begin(), p.end(), 0u);
        for (std::size_t i = 0; i < right.degree; ++i)
          p[left.degree + i] = static_cast<std::uint32_t>(left.degree + g[i]);
        gens.push_back(p);
      }
      return {degree, gens, left.presentation + " x " + right.presentation};
    }
  }
  throw PreconditionError("unsupported family");
}

}  // namespace

GroupPtr from_permutations(std::span<const Permutation> generators, const Limits& limits) {
  return build(generators, limits, GroupOrigin{});
}

GroupPtr from_family(const FamilyDescriptor& family, const Limits& limits) {
  auto perms = family_perms(family);
  GroupOrigin origin;
  origin.family = family.shorthand();
  origin.presentation = perms.presentation;
  return build(perms.gens, limits, std::move(origin));
}

// ---------------------------------------------------------------------------
// Family shorthand

std::string FamilyDescriptor::shorthand() const {
  switch (kind) {
    case Kind::Cyclic: return "C" + std::to_string(params.at(0));
    case Kind::Dihedral: return "D" + std::to_string(params.at(0));
    case Kind::GeneralisedQuaternion: return "Q" + std::to_string(params.at(0));
    case Kind::Symmetric: return "S" + std::to_string(params.at(0));
    case Kind::Alternating: return "A" + std::to_string(params.at(0));
    case Kind::SL23: return "SL23";
    case Kind::DirectProduct: return factors.at(0).shorthand() + "x" + factors.at(1).shorthand();
  }
  return "?";
}

namespace {

FamilyDescriptor parse_atom(const std::string& s) {
  if (s == "SL23" || s == "SL(2,3)") return FamilyDescriptor::sl23();
  if (s.size() < 2) throw PreconditionError("cannot parse group shorthand '" + s + "'");
  const std::string digits = s.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) || digits.size() > 6)
    throw PreconditionError("cannot parse group shorthand '" + s + "'");
  int n = std::stoi(digits);
  switch (s[0]) {
    case 'C': return FamilyDescriptor::cyclic(n);
    case 'D': return FamilyDescriptor::dihedral(n);
    case 'Q': return FamilyDescriptor::quaternion(n);
    case 'S': return FamilyDescriptor::symmetric(n);
    case 'A': return FamilyDescriptor::alternating(n);
    default: throw PreconditionError("unknown family letter in '" + s + "'");
  }
}

}  // namespace

FamilyDescriptor FamilyDescriptor::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == 'x' || c == 'X') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  FamilyDescriptor acc = parse_atom(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) acc = product(std::move(acc), parse_atom(parts[i]));
  return acc;
}

// ---------------------------------------------------------------------------
// Structural queries

namespace {

bool is_p_power(long long n, int p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Subgroup sylow(const GroupPtr& gp, int p) {
  if (!is_prime(p)) throw PreconditionError("sylow: " + std::to_string(p) + " is not prime");
  const FiniteGroup& g = *gp;
  const long long target = p_part(static_cast<long long>(g.order()), p);
  if (target == 1) return Subgroup(gp, {0});

  Element seed = 0;
  for (Element a = 1; a < g.order(); ++a) {
    if (is_p_power(g.element_order(a), p)) {
      seed = a;
      break;
    }
  }
  std::vector<Element> gens{seed};
  Subgroup cur = Subgroup::generated(gp, gens);
  while (static_cast<long long>(cur.order()) < target) {
    bool grown = false;
    for (Element y = 1; y < g.order() && !grown; ++y) {
      if (cur.contains(y)) continue;
      // y must normalize cur
      bool normalizes = true;
      for (Element h : cur.elements()) {
        if (!cur.contains(g.mul(g.mul(y, h), g.inverse(y)))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      // order of y modulo cur
      long long m = 1;
      Element x = y;
      while (!cur.contains(x)) {
        x = g.mul(x, y);
        ++m;
      }
      if (!is_p_power(m, p)) continue;
      gens.push_back(y);
      cur = Subgroup::generated(gp, gens);
      grown = true;
    }
    if (!grown) throw InconsistencyError("sylow: normalizer growth stalled below the p-part");
  }
  return cur;
}

bool is_cyclic(const Subgroup& h) {
  const auto& g = h.parent();
  for (Element e : h.elements())
    if (g.element_order(e) == h.order()) return true;
  return false;
}

bool is_generalised_quaternion(const Subgroup& h) {
  const std::size_t n = h.order();
  if (n < 8 || (n & (n - 1)) != 0) return false;
  if (is_cyclic(h)) return false;
  int involutions = 0;
  for (Element e : h.elements())
    if (h.parent().element_order(e) == 2) ++involutions;
  return involutions == 1;
}

bool has_noncyclic_abelian_subgroup(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> in_a(n);
  for (Element a = 1; a < n; ++a) {
    // powers of a
    std::fill(in_a.begin(), in_a.end(), 0);
    const std::uint32_t oa = g.element_order(a);
    for (Element x = 0, i = 0; i < oa; ++i, x = g.mul(x, a)) in_a[x] = 1;
    for (Element b = a + 1; b < n; ++b) {
      if (!g.commute(a, b)) continue;
      const std::uint32_t ob = g.element_order(b);
      // |<a> ∩ <b>| by walking the powers of b
      std::uint32_t meet = 0;
      for (Element x = 0, i = 0; i < ob; ++i, x = g.mul(x, b)) meet += in_a[x];
      const std::uint64_t size = static_cast<std::uint64_t>(oa) * ob / meet;
      // an abelian group is cyclic iff its exponent equals its order
      if (std::lcm<std::uint64_t>(oa, ob) != size) return true;
    }
  }
  return false;
}

}  // namespace pdtool
