#include "cayspec/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cayspec/errors.hpp"

namespace cayspec {

const char* cut_kind_name(CutKind k) { return k == CutKind::vertex ? "vertex" : "edge"; }

const char* cut_method_name(CutMethod m) {
  return m == CutMethod::exact ? "exact" : "sweep";
}

ElementSet vertex_boundary(const CountGraph& g, const ElementSet& v1) {
  std::vector<char> in(g.n, 0);
  for (Element v : v1) in.at(v) = 1;
  ElementSet out;
  for (Element y = 0; y < g.n; ++y) {
    if (in[y]) continue;
    for (Element u : v1) {
      if (g.counts(u, y) > 0) {  // u != y since y is outside V1
        out.push_back(y);
        break;
      }
    }
  }
  return out;
}

std::int64_t edge_boundary_count(const CountGraph& g, const ElementSet& v1) {
  std::vector<char> in(g.n, 0);
  for (Element v : v1) in.at(v) = 1;
  std::int64_t total = 0;
  for (Element u : v1)
    for (Element y = 0; y < g.n; ++y)
      if (!in[y]) total += g.counts(u, y);
  return total;
}

namespace {

// Order on subsets-as-bitmasks matching lexicographic comparison of the sorted
// member sequences. Let l be the lowest differing bit: if one mask has no bits
// at or above l it is a proper prefix of the other and sorts first; otherwise
// the mask holding l has the smaller next element.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const int l = std::countr_zero(a ^ b);
  if ((b >> l) == 0) return false;
  if ((a >> l) == 0) return true;
  return ((a >> l) & 1u) != 0;
}

struct BestCut {
  std::int64_t num = -1;  // num < 0 marks "unset"
  std::int64_t den = 1;
  std::uint32_t mask = 0;

  void offer(std::int64_t candidate_num, std::int64_t candidate_den, std::uint32_t m) {
    if (num < 0) {
      num = candidate_num;
      den = candidate_den;
      mask = m;
      return;
    }
    const std::int64_t lhs = candidate_num * den;
    const std::int64_t rhs = num * candidate_den;
    if (lhs < rhs || (lhs == rhs && mask_lex_less(m, mask))) {
      num = candidate_num;
      den = candidate_den;
      mask = m;
    }
  }
};

ElementSet mask_to_set(std::uint32_t mask) {
  ElementSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

CheegerPair cheeger_exact(const CountGraph& g, int max_exact_n) {
  const int n = g.n;
  if (n < 2) throw TooSmallError("cheeger constants need at least 2 vertices");
  const int cap = std::min(max_exact_n, kHardExactLimit);
  if (n > cap) throw TooLargeError(n, cap);
  if (!bfs_connected(g)) throw DisconnectedError();

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // loop-free neighbour lists
  for (int u = 0; u < n; ++u)
    for (int y = 0; y < n; ++y)
      if (y != u && g.counts(u, y) > 0) adj[u].push_back({y, g.counts(u, y)});

  std::vector<char> in_set(n, 0);
  std::vector<std::int64_t> cross(n, 0);  // edges from y into V1 \ {y}
  std::int64_t cut_edges = 0;             // total multiplicity leaving V1
  int boundary_cnt = 0;                   // |{y outside V1 : cross[y] > 0}|
  int size = 0;

  BestCut best_vertex;
  BestCut best_edge;

  const std::uint32_t total = std::uint32_t{1} << n;
  std::uint32_t mask = 0;
  for (std::uint32_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);  // Gray code: bit v flips between steps
    mask ^= std::uint32_t{1} << v;
    if ((mask >> v) & 1u) {
      cut_edges -= cross[v];
      if (cross[v] > 0) --boundary_cnt;
      in_set[v] = 1;
      ++size;
      for (auto [y, c] : adj[v]) {
        if (!in_set[y]) {
          cut_edges += c;
          if (cross[y] == 0) ++boundary_cnt;
        }
        cross[y] += c;
      }
    } else {
      for (auto [y, c] : adj[v]) {
        cross[y] -= c;
        if (!in_set[y]) {
          cut_edges -= c;
          if (cross[y] == 0) --boundary_cnt;
        }
      }
      in_set[v] = 0;
      --size;
      cut_edges += cross[v];
      if (cross[v] > 0) ++boundary_cnt;
    }
    if (size >= 1 && 2 * size <= n) {
      best_vertex.offer(boundary_cnt, size, mask);
      best_edge.offer(cut_edges, static_cast<std::int64_t>(g.d) * size, mask);
    }
  }

  return CheegerPair{
      CutWitness{Rational(best_vertex.num, best_vertex.den), mask_to_set(best_vertex.mask),
                 CutKind::vertex, CutMethod::exact},
      CutWitness{Rational(best_edge.num, best_edge.den), mask_to_set(best_edge.mask),
                 CutKind::edge, CutMethod::exact}};
}

CutWitness vertex_cheeger_exact(const CountGraph& g, int max_exact_n) {
  return cheeger_exact(g, max_exact_n).vertex;
}

CutWitness edge_cheeger_exact(const CountGraph& g, int max_exact_n) {
  return cheeger_exact(g, max_exact_n).edge;
}

CutWitness sweep_upper_bound(const CountGraph& g, const Eigen::VectorXd& fiedler,
                             CutKind kind) {
  const int n = g.n;
  if (n < 2) throw TooSmallError("sweep needs at least 2 vertices");
  if (fiedler.size() != n) throw std::invalid_argument("eigenvector length mismatch");
  if (g.d <= 0) throw std::invalid_argument("sweep needs positive degree");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (fiedler(a) != fiedler(b)) return fiedler(a) < fiedler(b);
    return a < b;
  });

  std::vector<char> in_set(n, 0);
  std::vector<std::int64_t> cross(n, 0);
  std::int64_t cut_edges = 0;
  int boundary_cnt = 0;

  bool have = false;
  Rational best;
  ElementSet best_subset;
  ElementSet prefix;

  for (int k = 0; k < n / 2; ++k) {
    const int v = order[k];
    cut_edges -= cross[v];
    if (cross[v] > 0) --boundary_cnt;
    in_set[v] = 1;
    for (int y = 0; y < n; ++y) {
      if (y == v) continue;
      const int c = g.counts(v, y);
      if (c == 0) continue;
      if (!in_set[y]) {
        cut_edges += c;
        if (cross[y] == 0) ++boundary_cnt;
      }
      cross[y] += c;
    }
    prefix.push_back(v);

    const std::int64_t size = k + 1;
    const Rational value = kind == CutKind::vertex
                               ? Rational(boundary_cnt, size)
                               : Rational(cut_edges, static_cast<std::int64_t>(g.d) * size);
    ElementSet sorted = prefix;
    std::sort(sorted.begin(), sorted.end());
    if (!have || value < best ||
        (value == best && std::lexicographical_compare(sorted.begin(), sorted.end(),
                                                       best_subset.begin(),
                                                       best_subset.end()))) {
      have = true;
      best = value;
      best_subset = std::move(sorted);
    }
  }

  return CutWitness{best, best_subset, kind, CutMethod::sweep};
}

Rational expander_epsilon(const CountGraph& g, int max_exact_n) {
  return vertex_cheeger_exact(g, max_exact_n).value;
}

}  // namespace cayspec
