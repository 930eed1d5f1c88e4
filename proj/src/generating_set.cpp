#include "cayspec/generating_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayspec {

GeneratingSet inspect_generating_set(const FiniteGroup& g, ElementSet elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Element s : elements)
    if (s < 0 || s >= g.order())
      throw std::out_of_range("generating set: element index " + std::to_string(s));

  GeneratingSet out;
  out.elements = std::move(elements);
  out.degree = static_cast<int>(out.elements.size());

  const auto& s = out.elements;
  auto contains = [&](Element x) { return std::binary_search(s.begin(), s.end(), x); };

  out.identity_free = !contains(g.identity());
  out.symmetric = true;
  for (Element x : s)
    if (!contains(g.inv(x))) { out.symmetric = false; break; }

  out.conjugation_closed = true;
  for (Element x : s) {
    for (Element c = 0; c < g.order() && out.conjugation_closed; ++c)
      if (!contains(g.conjugate(x, c))) out.conjugation_closed = false;
    if (!out.conjugation_closed) break;
  }

  out.generates = generates(g, s);
  out.minimal = false;
  if (out.symmetric && out.generates) out.minimal = minimal_generating_check(g, s);
  return out;
}

GeneratingSet validate_generating_set(const FiniteGroup& g, ElementSet elements,
                                      bool require_conjugation_closed) {
  GeneratingSet out = inspect_generating_set(g, std::move(elements));
  using Code = SetValidationError::Code;

  if (!out.identity_free) throw SetValidationError(Code::ContainsIdentity, g.identity());
  if (!out.symmetric) {
    for (Element x : out.elements)
      if (!std::binary_search(out.elements.begin(), out.elements.end(), g.inv(x)))
        throw SetValidationError(Code::NotSymmetric, x);
  }
  if (require_conjugation_closed && !out.conjugation_closed) {
    for (Element x : out.elements)
      for (Element c = 0; c < g.order(); ++c)
        if (!std::binary_search(out.elements.begin(), out.elements.end(), g.conjugate(x, c)))
          throw SetValidationError(Code::NotConjugationClosed, x);
  }
  if (!out.generates) throw SetValidationError(Code::NotGenerating, -1);
  return out;
}

}  // namespace cayspec
