#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cayspec/bounds.hpp"
#include "cayspec/cheeger.hpp"
#include "cayspec/graph.hpp"
#include "cayspec/group.hpp"
#include "cayspec/rational.hpp"
#include "cayspec/spectrum.hpp"

namespace cayspec {

enum class Verdict { pass, fail, vacuous };

const char* verdict_name(Verdict v);

// Outcome of one statement-level check on one instance. verdict == vacuous exactly
// when hypotheses_held is false; a fail carries a serializable counterexample in
// `witness`.
struct CheckReport {
  std::string check;
  std::string instance_id;
  Verdict verdict = Verdict::vacuous;
  bool hypotheses_held = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  nlohmann::json witness = nlohmann::json::object();
};

nlohmann::json to_json(const CheckReport& r);

// Smallest eigenvalue stays above -1 + h^4/(2^9 d^8).
// Hypotheses: connected, non-bipartite; requires kind == cayley_sum.
CheckReport check_theorem_main(const CountGraph& g, const Spectrum& s, const Rational& h);

// Second largest eigenvalue obeys t2 <= 1 - h^2/(2 d^2). Hypotheses: connected, n >= 2.
CheckReport check_upper_gap(const CountGraph& g, const Spectrum& s, const Rational& h);

// Largest normalised Laplacian eigenvalue stays below 2 - h^4/(2^9 d^8).
// Hypotheses: connected, non-bipartite, n != 3; requires kind == cayley.
CheckReport check_bis19(const CountGraph& g, const Spectrum& s, const Rational& h);

// Smallest eigenvalue stays above -1 + h^4/(kappa d^8) with the table row for d.
// Hypotheses: connected, non-bipartite, minimal generating set, d >= 3; either kind.
CheckReport check_sharp(const CountGraph& g, const Spectrum& s, const Rational& h,
                        bool minimal);

// Exact-rational caps on the expansion constant:
//   (a) non-bipartite sum graph          => h <= d - 1
//   (b) group graph on >= 4 vertices     => h <= d - 1
//   (c) non-bipartite minimal sum graph  => h <= 2
// Vacuous when no sub-check applies.
CheckReport check_epsilon_bounds(const CountGraph& g, const Rational& h, bool minimal);

// The sum graph is bipartite iff some index-two subgroup avoids S; exact equivalence,
// hypotheses always hold.
CheckReport check_bipartite_lemma(const FiniteGroup& grp, const ElementSet& s,
                                  const CountGraph& sum_graph);

// For |A| >= n/2 in a sum graph: |boundary(A)| >= (eps/d)|G \ A|, compared exactly.
// Vacuous when |A| < n/2.
CheckReport check_vertex_expansion_complement(const CountGraph& g, const ElementSet& a,
                                              const Rational& eps);

// max over g in G of |Ag ∩ (Ag)^{-1} S|
int max_translate_overlap(const FiniteGroup& grp, const ElementSet& s, const ElementSet& a);

// max over s in S and g in G of |(Ag)^{-1} s  Δ  (G \ Ag)|
int max_translate_symdiff(const FiniteGroup& grp, const ElementSet& s, const ElementSet& a);

// The five structural conditions a near-(-1) eigenvalue forces on some subset A:
//   (1) n/(2 + beta + d beta/eps) <= |A| <= n/2
//   (2) max_g |Ag ∩ (Ag)^{-1}S|            <= (beta/eps)|A|
//   (3) max_{s,g} |(Ag)^{-1}s Δ (Ag)^c|    <= (beta/eps)(eps + d + 2)|A|
//   (4),(5) the same two with A replaced by A^{-1}
struct SubsetConditionEval {
  bool size_ok = false;
  int overlap = 0;
  int symdiff = 0;
  int inv_overlap = 0;
  int inv_symdiff = 0;
  double overlap_limit = 0.0;
  double symdiff_limit = 0.0;

  bool holds() const {
    return size_ok && overlap <= overlap_limit && symdiff <= symdiff_limit &&
           inv_overlap <= overlap_limit && inv_symdiff <= symdiff_limit;
  }
};

SubsetConditionEval evaluate_subset_conditions(const FiniteGroup& grp, const ElementSet& s,
                                               const ElementSet& a, const BoundParams& p);

struct AExistsSearch {
  CheckReport report;
  std::optional<ElementSet> witness;
};

// When the spectrum has an eigenvalue in (-1, -1 + zeta], exhaustively search for the
// lexicographically first subset satisfying all five conditions. Vacuous when no
// eigenvalue lies in the interval; eigenvalues within tol of -1 count as -1 itself,
// which the open end excludes. Fails when an eigenvalue qualifies but no subset does.
// Requires zeta in (0, eps^2/(4 d^4)]; throws TooLargeError past the enumeration cap.
AExistsSearch find_aexists_witness(const FiniteGroup& grp, const ElementSet& s,
                                   const Spectrum& spectrum, double zeta,
                                   const Rational& eps, int max_exact_n = kDefaultExactCap);

// For beta < eps^2/(4d(d+1)): each of |A ∩ Ag| and |A ∩ A^{-1}g| lies in exactly one
// of [0, c|A|] and [(1-c)|A|, |A|] with c = (d beta/eps^2)(eps + d + 2). Vacuous when
// the beta precondition fails.
CheckReport check_dichotomy(const FiniteGroup& grp, const ElementSet& s, const ElementSet& a,
                            Element g, double beta, const Rational& eps);

}  // namespace cayspec
