#include <doctest.h>

#include <algorithm>
#include <set>

#include "cayspec/prng.hpp"
#include "cayspec/set_algebra.hpp"

using namespace cayspec;

namespace {

std::set<Element> to_std(const ElementSet& v) { return {v.begin(), v.end()}; }

ElementSet from_std(const std::set<Element>& s) { return {s.begin(), s.end()}; }

ElementSet random_subset(const FiniteGroup& g, SplitMix64& rng) {
  std::set<Element> s;
  const std::uint64_t count = 1 + rng.below(static_cast<std::uint64_t>(g.order()));
  for (std::uint64_t i = 0; i < count; ++i)
    s.insert(static_cast<Element>(rng.below(static_cast<std::uint64_t>(g.order()))));
  return from_std(s);
}

}  // namespace

TEST_CASE("hand examples in Z/6") {
  const FiniteGroup g = FiniteGroup::cyclic(6);
  CHECK(set_inverse(g, {1, 2}) == ElementSet{4, 5});
  CHECK(set_left_translate(g, 2, {0, 1, 5}) == ElementSet{1, 2, 3});
  CHECK(set_right_translate(g, {0, 1, 5}, 2) == ElementSet{1, 2, 3});
  CHECK(set_product(g, {1, 2}, {1, 2}) == ElementSet{2, 3, 4});
  CHECK(set_complement(g, {0, 2, 4}) == ElementSet{1, 3, 5});
  CHECK(set_intersection({1, 2, 3}, {2, 3, 4}) == ElementSet{2, 3});
  CHECK(set_difference({1, 2, 3}, {2, 3, 4}) == ElementSet{1});
  CHECK(set_symmetric_difference({1, 2, 3}, {2, 3, 4}) == ElementSet{1, 4});
  CHECK(set_product(g, {}, {1, 2}).empty());
  CHECK(set_inverse(g, {}).empty());
}

TEST_CASE("left and right translation differ in nonabelian groups") {
  const FiniteGroup g = FiniteGroup::dihedral(4);
  // left and right cosets of a non-normal pair
  bool differ = false;
  for (Element x = 0; x < g.order(); ++x)
    if (set_left_translate(g, x, {4}) != set_right_translate(g, {4}, x)) differ = true;
  CHECK(differ);
}

TEST_CASE("conjugation closure") {
  const FiniteGroup d4 = FiniteGroup::dihedral(4);
  // r and r^3 form one class; reflections split into two classes of two
  CHECK(conjugation_closure(d4, {1}) == ElementSet{1, 3});
  CHECK(conjugation_closure(d4, {4}) == ElementSet{4, 6});
  CHECK(conjugation_closure(d4, {5}) == ElementSet{5, 7});
  CHECK(conjugation_closure(d4, {2}) == ElementSet{2});  // central

  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  int transpositions = 0;
  for (Element x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) ++transpositions;
  CHECK(transpositions == 3);
  for (Element x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2)
      CHECK(conjugation_closure(s3, {x}).size() == 3);

  // abelian groups: every set is already closed
  const FiniteGroup z8 = FiniteGroup::cyclic(8);
  CHECK(conjugation_closure(z8, {3, 5}) == ElementSet{3, 5});
}

TEST_CASE("agrees with a std::set oracle on random subsets") {
  const FiniteGroup groups[] = {FiniteGroup::cyclic(7), FiniteGroup::dihedral(4),
                                FiniteGroup::symmetric(3), FiniteGroup::quaternion8()};
  SplitMix64 rng(12345);
  for (const FiniteGroup& g : groups) {
    for (int trial = 0; trial < 25; ++trial) {
      const ElementSet a = random_subset(g, rng);
      const ElementSet b = random_subset(g, rng);
      const Element x = static_cast<Element>(rng.below(static_cast<std::uint64_t>(g.order())));

      std::set<Element> inv, left, right, prod, conj;
      for (Element e : a) inv.insert(g.inv(e));
      for (Element e : a) left.insert(g.mul(x, e));
      for (Element e : a) right.insert(g.mul(e, x));
      for (Element p : a)
        for (Element q : b) prod.insert(g.mul(p, q));
      for (Element e : a)
        for (Element y = 0; y < g.order(); ++y) conj.insert(g.conjugate(e, y));

      CHECK(set_inverse(g, a) == from_std(inv));
      CHECK(set_left_translate(g, x, a) == from_std(left));
      CHECK(set_right_translate(g, a, x) == from_std(right));
      CHECK(set_product(g, a, b) == from_std(prod));
      CHECK(conjugation_closure(g, a) == from_std(conj));

      std::set<Element> sa = to_std(a), sb = to_std(b), un, in, diff, sym;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::inserter(in, in.end()));
      std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::inserter(diff, diff.end()));
      std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                    std::inserter(sym, sym.end()));
      CHECK(set_intersection(a, b) == from_std(in));
      CHECK(set_difference(a, b) == from_std(diff));
      CHECK(set_symmetric_difference(a, b) == from_std(sym));

      std::set<Element> comp;
      for (Element e = 0; e < g.order(); ++e)
        if (!sa.count(e)) comp.insert(e);
      CHECK(set_complement(g, a) == from_std(comp));
    }
  }
}
