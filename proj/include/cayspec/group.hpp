#pragma once

#include <string>
#include <vector>

#include "cayspec/errors.hpp"

namespace cayspec {

using Element = int;

// Sorted, duplicate-free list of element indices. Carrier for generating sets,
// subgroups, vertex subsets and the witness sets of the verifier checks.
using ElementSet = std::vector<Element>;

// Multiplication-table-backed finite group, immutable after construction.
//
// Canonical element orderings (frozen, fixture files depend on them):
//   cyclic(n)     residues 0..n-1, mul = addition mod n
//   dihedral(n)   order 2n; rotations r^k at 0..n-1, reflections s*r^k at n..2n-1
//   symmetric(k)  permutations of {0..k-1} in lexicographic one-line order;
//                 composition acts right-to-left: (g*h)(x) = g(h(x))
//   quaternion8   0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
//   direct_product(G1,G2)  (a,b) at index a*|G2| + b
class FiniteGroup {
 public:
  static constexpr int kDefaultOrderCap = 5040;  // 7!

  // Validates the table (Latin square, identity, two-sided inverses, associativity
  // via Light's generator test). Throws NotAGroupError naming the failed axiom.
  static FiniteGroup from_mul_table(const std::vector<std::vector<Element>>& table);

  static FiniteGroup cyclic(int n, int order_cap = kDefaultOrderCap);
  static FiniteGroup dihedral(int n, int order_cap = kDefaultOrderCap);
  static FiniteGroup symmetric(int k, int order_cap = kDefaultOrderCap);
  static FiniteGroup quaternion8();
  static FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                                    int order_cap = kDefaultOrderCap);

  int order() const { return n_; }
  Element identity() const { return id_; }
  Element mul(Element a, Element b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }

  // x * g * x^-1
  Element conjugate(Element g, Element x) const { return mul(mul(x, g), inv(x)); }

  int element_order(Element g) const;

  // Display name like "cyclic:5"; table-loaded groups are "table:<n>".
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  FiniteGroup() = default;
  void finish();  // derive identity/inverses from a trusted table

  int n_ = 0;
  Element id_ = 0;
  std::vector<Element> mul_;  // flattened n*n
  std::vector<Element> inv_;
  std::string name_;
};

// Smallest subgroup containing seed, via worklist closure under products.
// Empty seed yields {identity}. Result sorted ascending.
ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed);

bool generates(const FiniteGroup& g, const ElementSet& s);

// Exactly the index-two subgroups, each sorted, the list sorted lexicographically.
// Computed through the elementary-abelian-2 quotient by the subgroup generated by
// all squares and commutators; index-two subgroups are kernels of the nonzero
// linear functionals on that quotient.
std::vector<ElementSet> index_two_subgroups(const FiniteGroup& g);

// True iff no removal of an inverse-pair {s, s^-1} leaves a generating set.
// Requires s symmetric and generating; throws SetValidationError otherwise.
bool minimal_generating_check(const FiniteGroup& g, const ElementSet& s);

}  // namespace cayspec
