#include "cayspec/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace cayspec {

namespace {

// Light's associativity test: pick a set of elements whose product-closure covers the
// whole table, then check (a*g)*b = a*(g*b) for every generator g and all a, b. The
// elements that associate with everything are closed under the product, so covering
// generators certify the full table in O(|gens| * n^2) instead of O(n^3).
bool associative_by_light_test(const std::vector<Element>& mul, int n) {
  auto at = [&](Element a, Element b) { return mul[static_cast<size_t>(a) * n + b]; };

  std::vector<char> covered(n, 0);
  std::vector<Element> gens;
  std::vector<Element> work;
  for (Element cand = 0; cand < n; ++cand) {
    if (covered[cand]) continue;
    gens.push_back(cand);
    // close under products with everything already covered, plus the new element
    work.assign(1, cand);
    covered[cand] = 1;
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x)
      if (covered[x]) members.push_back(x);
    while (!work.empty()) {
      Element a = work.back();
      work.pop_back();
      for (size_t i = 0; i < members.size(); ++i) {
        Element b = members[i];
        for (Element p : {at(a, b), at(b, a)}) {
          if (!covered[p]) {
            covered[p] = 1;
            members.push_back(p);
            work.push_back(p);
          }
        }
      }
    }
  }
  for (Element g : gens)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (at(at(a, g), b) != at(a, at(g, b))) return false;
  return true;
}

long long checked_order(long long order, int cap) {
  if (order > cap) throw OrderCapExceededError(order, cap);
  return order;
}

}  // namespace

void FiniteGroup::finish() {
  inv_.assign(n_, -1);
  for (Element g = 0; g < n_; ++g) {
    for (Element h = 0; h < n_; ++h) {
      if (mul(g, h) == id_ && mul(h, g) == id_) {
        inv_[g] = h;
        break;
      }
    }
  }
}

FiniteGroup FiniteGroup::from_mul_table(const std::vector<std::vector<Element>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroupError("not-latin-square", "empty table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw NotAGroupError("not-latin-square", "table is not square");

  FiniteGroup g;
  g.n_ = n;
  g.mul_.resize(static_cast<size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element p = table[a][b];
      if (p < 0 || p >= n)
        throw NotAGroupError("not-latin-square", "entry out of range at (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
      g.mul_[static_cast<size_t>(a) * n + b] = p;
    }

  // rows and columns must be permutations
  std::vector<char> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      Element p = g.mul(a, b);
      if (seen[p]) throw NotAGroupError("not-latin-square", "row " + std::to_string(a));
      seen[p] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      Element p = g.mul(b, a);
      if (seen[p]) throw NotAGroupError("not-latin-square", "column " + std::to_string(a));
      seen[p] = 1;
    }
  }

  // two-sided identity
  g.id_ = -1;
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.id_ = e;
      break;
    }
  }
  if (g.id_ < 0) throw NotAGroupError("no-identity", "no two-sided identity element");

  // two-sided inverses
  g.finish();
  for (Element x = 0; x < n; ++x)
    if (g.inv_[x] < 0)
      throw NotAGroupError("missing-inverse", "element " + std::to_string(x));

  if (!associative_by_light_test(g.mul_, n))
    throw NotAGroupError("non-associative", "Light's test failed");

  g.name_ = "table:" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n, int order_cap) {
  if (n < 1) throw std::invalid_argument("cyclic: n >= 1 required");
  checked_order(n, order_cap);
  FiniteGroup g;
  g.n_ = n;
  g.id_ = 0;
  g.mul_.resize(static_cast<size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) g.mul_[static_cast<size_t>(a) * n + b] = (a + b) % n;
  g.finish();
  g.name_ = "cyclic:" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n, int order_cap) {
  if (n < 1) throw std::invalid_argument("dihedral: n >= 1 required");
  checked_order(2LL * n, order_cap);
  FiniteGroup g;
  g.n_ = 2 * n;
  g.id_ = 0;
  g.mul_.resize(static_cast<size_t>(g.n_) * g.n_);
  // element i*n + k is s^i r^k with r s = s r^-1
  for (int i1 = 0; i1 < 2; ++i1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int k2 = 0; k2 < n; ++k2) {
          int i = (i1 + i2) % 2;
          int k = (k2 + (i2 == 1 ? n - k1 : k1)) % n;
          g.mul_[static_cast<size_t>(i1 * n + k1) * g.n_ + (i2 * n + k2)] = i * n + k;
        }
  g.finish();
  g.name_ = "dihedral:" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::symmetric(int k, int order_cap) {
  if (k < 1) throw std::invalid_argument("symmetric: k >= 1 required");
  long long fact = 1;
  for (int i = 2; i <= k; ++i) {
    fact *= i;
    checked_order(fact, order_cap);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, Element> rank;
  for (Element i = 0; i < static_cast<Element>(perms.size()); ++i) rank[perms[i]] = i;

  FiniteGroup g;
  g.n_ = static_cast<int>(perms.size());
  g.id_ = 0;  // identity is lexicographically first
  g.mul_.resize(static_cast<size_t>(g.n_) * g.n_);
  std::vector<int> comp(k);
  for (Element a = 0; a < g.n_; ++a)
    for (Element b = 0; b < g.n_; ++b) {
      for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
      g.mul_[static_cast<size_t>(a) * g.n_ + b] = rank[comp];
    }
  g.finish();
  g.name_ = "symmetric:" + std::to_string(k);
  return g;
}

FiniteGroup FiniteGroup::quaternion8() {
  // index = axis*2 + (sign < 0), axes ordered 1, i, j, k
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{+1, +1, +1, +1},
                                     {+1, -1, +1, -1},
                                     {+1, -1, -1, +1},
                                     {+1, +1, -1, -1}};
  FiniteGroup g;
  g.n_ = 8;
  g.id_ = 0;
  g.mul_.resize(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax1 = a / 2, s1 = a % 2 ? -1 : 1;
      int ax2 = b / 2, s2 = b % 2 ? -1 : 1;
      int ax = axis_mul[ax1][ax2];
      int s = s1 * s2 * sign_mul[ax1][ax2];
      g.mul_[static_cast<size_t>(a) * 8 + b] = ax * 2 + (s < 0 ? 1 : 0);
    }
  g.finish();
  g.name_ = "quaternion8";
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                                        int order_cap) {
  checked_order(static_cast<long long>(g1.order()) * g2.order(), order_cap);
  FiniteGroup g;
  const int n1 = g1.order(), n2 = g2.order();
  g.n_ = n1 * n2;
  g.id_ = g1.identity() * n2 + g2.identity();
  g.mul_.resize(static_cast<size_t>(g.n_) * g.n_);
  for (Element a = 0; a < g.n_; ++a)
    for (Element b = 0; b < g.n_; ++b) {
      Element p1 = g1.mul(a / n2, b / n2);
      Element p2 = g2.mul(a % n2, b % n2);
      g.mul_[static_cast<size_t>(a) * g.n_ + b] = p1 * n2 + p2;
    }
  g.finish();
  g.name_ = "product(" + g1.name() + "," + g2.name() + ")";
  return g;
}

int FiniteGroup::element_order(Element g) const {
  int ord = 1;
  Element x = g;
  while (x != id_) {
    x = mul(x, g);
    ++ord;
  }
  return ord;
}

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Element> members;
  std::queue<Element> work;

  auto push = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push(x);
    }
  };

  push(g.identity());
  for (Element s : seed) push(s);

  while (!work.empty()) {
    Element a = work.front();
    work.pop();
    // products against the current member list; later additions revisit a in their own turn
    for (size_t i = 0; i < members.size(); ++i) {
      push(g.mul(a, members[i]));
      push(g.mul(members[i], a));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool generates(const FiniteGroup& g, const ElementSet& s) {
  return static_cast<int>(subgroup_closure(g, s).size()) == g.order();
}

std::vector<ElementSet> index_two_subgroups(const FiniteGroup& g) {
  const int n = g.order();
  if (n % 2 != 0) return {};

  ElementSet seed;
  seed.reserve(static_cast<size_t>(n) + 16);
  for (Element x = 0; x < n; ++x) seed.push_back(g.mul(x, x));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      seed.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

  ElementSet kernel = subgroup_closure(g, seed);
  if (static_cast<int>(kernel.size()) == n) return {};

  // G/kernel is elementary abelian of order 2^k: every coset squares into the kernel.
  std::vector<char> in_kernel(n, 0);
  for (Element x : kernel) in_kernel[x] = 1;

  // pick an F2-basis of the quotient by greedy span growth
  std::vector<Element> basis;
  ElementSet span = kernel;
  std::vector<char> in_span(n, 0);
  for (Element x : span) in_span[x] = 1;
  for (Element x = 0; x < n; ++x) {
    if (in_span[x]) continue;
    basis.push_back(x);
    ElementSet s2 = span;
    s2.push_back(x);
    span = subgroup_closure(g, s2);
    std::fill(in_span.begin(), in_span.end(), 0);
    for (Element y : span) in_span[y] = 1;
  }

  const int k = static_cast<int>(basis.size());
  // coordinates of every element: enumerate all products of basis subsets, then
  // spread each representative's coordinates over its kernel coset
  std::vector<unsigned> coord(n, 0);
  std::vector<char> assigned(n, 0);
  for (unsigned m = 0; m < (1u << k); ++m) {
    Element rep = g.identity();
    for (int i = 0; i < k; ++i)
      if (m >> i & 1) rep = g.mul(rep, basis[i]);
    for (Element h : kernel) {
      Element x = g.mul(rep, h);
      coord[x] = m;
      assigned[x] = 1;
    }
  }
  for (Element x = 0; x < n; ++x)
    if (!assigned[x]) return {};  // unreachable for valid groups; defensive

  std::vector<ElementSet> result;
  for (unsigned f = 1; f < (1u << k); ++f) {
    ElementSet h;
    h.reserve(n / 2);
    for (Element x = 0; x < n; ++x)
      if (__builtin_parity(coord[x] & f) == 0) h.push_back(x);
    result.push_back(std::move(h));
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool minimal_generating_check(const FiniteGroup& g, const ElementSet& s) {
  for (Element x : s) {
    Element xi = g.inv(x);
    if (!std::binary_search(s.begin(), s.end(), xi))
      throw SetValidationError(SetValidationError::Code::NotSymmetric, x);
  }
  if (!generates(g, s))
    throw SetValidationError(SetValidationError::Code::NotGenerating, -1);

  for (Element x : s) {
    if (x > g.inv(x)) continue;  // handle each inverse pair once
    ElementSet t;
    t.reserve(s.size());
    for (Element y : s)
      if (y != x && y != g.inv(x)) t.push_back(y);
    if (!t.empty() && generates(g, t)) return false;
  }
  return true;
}

}  // namespace cayspec
