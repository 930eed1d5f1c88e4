#pragma once

#include "cayspec/group.hpp"

namespace cayspec {

// A symmetric subset of group elements with its structural flags cached.
// degree d = |S| is the regularity degree of every graph built from it.
struct GeneratingSet {
  ElementSet elements;
  int degree = 0;
  bool symmetric = false;
  bool identity_free = false;
  bool conjugation_closed = false;
  bool generates = false;
  // true iff removing any inverse pair {s, s^-1} leaves a non-generating set;
  // only meaningful (and only computed) when symmetric and generating
  bool minimal = false;
};

// Computes all flags without enforcing anything; throws only on out-of-range indices.
GeneratingSet inspect_generating_set(const FiniteGroup& g, ElementSet elements);

// Enforces symmetric + identity_free + generates, and conjugation_closed when
// requested. Throws SetValidationError naming the witness element.
GeneratingSet validate_generating_set(const FiniteGroup& g, ElementSet elements,
                                      bool require_conjugation_closed);

}  // namespace cayspec
