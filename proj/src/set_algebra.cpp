#include "cayspec/set_algebra.hpp"

#include <algorithm>

namespace cayspec {

namespace {

ElementSet from_flags(const std::vector<char>& in) {
  ElementSet out;
  for (Element x = 0; x < static_cast<Element>(in.size()); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

}  // namespace

ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a) {
  ElementSet out;
  out.reserve(a.size());
  for (Element x : a) out.push_back(g.inv(x));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet set_left_translate(const FiniteGroup& g, Element x, const ElementSet& a) {
  ElementSet out;
  out.reserve(a.size());
  for (Element y : a) out.push_back(g.mul(x, y));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet set_right_translate(const FiniteGroup& g, const ElementSet& a, Element x) {
  ElementSet out;
  out.reserve(a.size());
  for (Element y : a) out.push_back(g.mul(y, x));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet set_product(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  std::vector<char> in(g.order(), 0);
  for (Element x : a)
    for (Element y : b) in[g.mul(x, y)] = 1;
  return from_flags(in);
}

ElementSet set_complement(const FiniteGroup& g, const ElementSet& a) {
  std::vector<char> in(g.order(), 1);
  for (Element x : a) in[x] = 0;
  return from_flags(in);
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_symmetric_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

ElementSet conjugation_closure(const FiniteGroup& g, const ElementSet& a) {
  std::vector<char> in(g.order(), 0);
  for (Element s : a)
    for (Element x = 0; x < g.order(); ++x) in[g.conjugate(s, x)] = 1;
  return from_flags(in);
}

}  // namespace cayspec
