#pragma once

#include <Eigen/Core>
#include <string>

#include "cayspec/generating_set.hpp"
#include "cayspec/group.hpp"

namespace cayspec {

enum class GraphKind { cayley, cayley_sum, pair_multigraph };

std::string kind_name(GraphKind k);
GraphKind parse_kind(const std::string& name);

// d-regular undirected multigraph as an exact integer count matrix.
// counts is symmetric, every row sums to d; a loop at v shows up as
// counts(v,v) >= 1 with each unit adding exactly 1 to the row sum.
struct CountGraph {
  GraphKind kind = GraphKind::cayley;
  int n = 0;
  int d = 0;
  Eigen::MatrixXi counts;
};

// h adjacent to g iff h = g*s. Requires symmetric + identity_free (loop-free, simple).
CountGraph build_cayley(const FiniteGroup& g, const GeneratingSet& s);

// h adjacent to g iff h = g^-1 * s; loop at g when g^2 in S. Requires symmetric +
// identity_free + conjugation_closed (conjugation closure is what makes it undirected).
CountGraph build_cayley_sum(const FiniteGroup& g, const GeneratingSet& s);

// One edge g -- s*g*t per ordered pair (s,t) in SxS; degree d^2. Its counts equal
// the integer matrix square of the Cayley sum graph's counts.
CountGraph build_pair_multigraph(const FiniteGroup& g, const GeneratingSet& s);

// Raw directed relation g -> g^-1*s without any flag requirements; symmetric as a
// matrix iff s is conjugation-closed. Used by the undirectedness battery.
Eigen::MatrixXi cayley_sum_directed_counts(const FiniteGroup& g, const ElementSet& s);

// counts/d, row-stochastic symmetric. The trivial n=1, d=0 graph maps to [[1]]
// so the degenerate spectrum convention {1} falls out of the ordinary eig path.
Eigen::MatrixXd normalized(const CountGraph& g);

bool bfs_connected(const CountGraph& g);

// 2-colorability by BFS; any loop forces false. The single-vertex graph is
// considered non-bipartite (no bipartition into two nonempty parts), matching
// the spectral convention.
bool bfs_bipartite(const CountGraph& g);

}  // namespace cayspec
