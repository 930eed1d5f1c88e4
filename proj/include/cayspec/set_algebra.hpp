#pragma once

#include "cayspec/group.hpp"

namespace cayspec {

// Exact set arithmetic over group elements. All inputs and outputs are sorted
// duplicate-free ElementSets over the same group. These back the witness-search
// and conditional checks, which compare exact cardinalities against real bounds.

ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a);              // A^-1
ElementSet set_left_translate(const FiniteGroup& g, Element x, const ElementSet& a);   // xA
ElementSet set_right_translate(const FiniteGroup& g, const ElementSet& a, Element x);  // Ax
ElementSet set_product(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);  // AB
ElementSet set_complement(const FiniteGroup& g, const ElementSet& a);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
ElementSet set_symmetric_difference(const ElementSet& a, const ElementSet& b);
ElementSet conjugation_closure(const FiniteGroup& g, const ElementSet& a);

}  // namespace cayspec
