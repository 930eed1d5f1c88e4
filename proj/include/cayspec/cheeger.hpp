#pragma once

#include <cstdint>
#include <Eigen/Core>

#include "cayspec/graph.hpp"
#include "cayspec/rational.hpp"

namespace cayspec {

// Exhaustive enumeration walks all 2^n subsets; 24 keeps a single instance in the
// seconds range, 30 is an absolute wall for the 32-bit mask kernel.
constexpr int kDefaultExactCap = 24;
constexpr int kHardExactLimit = 30;

enum class CutKind { vertex, edge };
enum class CutMethod { exact, sweep };

const char* cut_kind_name(CutKind k);
const char* cut_method_name(CutMethod m);

// A cut certificate: the subset V1 realising `value`, which is
//   |boundary(V1)| / |V1|          for kind = vertex,
//   |E(V1, V\V1)| / (d |V1|)       for kind = edge.
// `subset` is sorted ascending and satisfies 1 <= |V1|, 2|V1| <= n.
struct CutWitness {
  Rational value;
  ElementSet subset;
  CutKind kind = CutKind::vertex;
  CutMethod method = CutMethod::exact;
};

// vertices outside V1 with at least one neighbour inside; loops never contribute
ElementSet vertex_boundary(const CountGraph& g, const ElementSet& v1);

// total multiplicity of edges leaving V1; loops never cross
std::int64_t edge_boundary_count(const CountGraph& g, const ElementSet& v1);

struct CheegerPair {
  CutWitness vertex;
  CutWitness edge;
};

// Exact minima of both cut ratios over every nonempty V1 with 2|V1| <= n, found in a
// single Gray-code sweep with O(degree) incremental updates per subset. Ties are
// broken toward the lexicographically smallest subset (by sorted member sequence).
// Throws TooSmallError (n < 2), TooLargeError (n above the cap), DisconnectedError.
CheegerPair cheeger_exact(const CountGraph& g, int max_exact_n = kDefaultExactCap);
CutWitness vertex_cheeger_exact(const CountGraph& g, int max_exact_n = kDefaultExactCap);
CutWitness edge_cheeger_exact(const CountGraph& g, int max_exact_n = kDefaultExactCap);

// Best prefix cut of the vertices sorted by eigenvector coordinate (prefix sizes
// 1..floor(n/2)). An upper bound on the exact constant of the same kind; never
// worse than the first singleton prefix.
CutWitness sweep_upper_bound(const CountGraph& g, const Eigen::VectorXd& fiedler,
                             CutKind kind);

// largest valid vertex-expansion constant: alias of the exact vertex Cheeger value
Rational expander_epsilon(const CountGraph& g, int max_exact_n = kDefaultExactCap);

}  // namespace cayspec
