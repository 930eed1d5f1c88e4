#include "cayspec/graph.hpp"

#include <queue>
#include <stdexcept>

namespace cayspec {

std::string kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::cayley: return "cayley";
    case GraphKind::cayley_sum: return "cayley_sum";
    case GraphKind::pair_multigraph: return "pair_multigraph";
  }
  return "?";
}

GraphKind parse_kind(const std::string& name) {
  if (name == "cayley") return GraphKind::cayley;
  if (name == "cayley_sum") return GraphKind::cayley_sum;
  if (name == "pair_multigraph") return GraphKind::pair_multigraph;
  throw ParseError("unknown graph kind '" + name + "'");
}

namespace {

void require(bool ok, SetValidationError::Code code, Element witness) {
  if (!ok) throw SetValidationError(code, witness);
}

}  // namespace

CountGraph build_cayley(const FiniteGroup& g, const GeneratingSet& s) {
  require(s.symmetric, SetValidationError::Code::NotSymmetric, -1);
  require(s.identity_free, SetValidationError::Code::ContainsIdentity, g.identity());
  CountGraph out;
  out.kind = GraphKind::cayley;
  out.n = g.order();
  out.d = s.degree;
  out.counts = Eigen::MatrixXi::Zero(out.n, out.n);
  for (Element v = 0; v < out.n; ++v)
    for (Element x : s.elements) out.counts(v, g.mul(v, x)) += 1;
  return out;
}

CountGraph build_cayley_sum(const FiniteGroup& g, const GeneratingSet& s) {
  require(s.symmetric, SetValidationError::Code::NotSymmetric, -1);
  require(s.identity_free, SetValidationError::Code::ContainsIdentity, g.identity());
  require(s.conjugation_closed, SetValidationError::Code::NotConjugationClosed, -1);
  CountGraph out;
  out.kind = GraphKind::cayley_sum;
  out.n = g.order();
  out.d = s.degree;
  out.counts = cayley_sum_directed_counts(g, s.elements);
  return out;
}

CountGraph build_pair_multigraph(const FiniteGroup& g, const GeneratingSet& s) {
  require(s.symmetric, SetValidationError::Code::NotSymmetric, -1);
  require(s.identity_free, SetValidationError::Code::ContainsIdentity, g.identity());
  require(s.conjugation_closed, SetValidationError::Code::NotConjugationClosed, -1);
  CountGraph out;
  out.kind = GraphKind::pair_multigraph;
  out.n = g.order();
  out.d = s.degree * s.degree;
  out.counts = Eigen::MatrixXi::Zero(out.n, out.n);
  for (Element v = 0; v < out.n; ++v)
    for (Element x : s.elements)
      for (Element y : s.elements) out.counts(v, g.mul(g.mul(x, v), y)) += 1;
  return out;
}

Eigen::MatrixXi cayley_sum_directed_counts(const FiniteGroup& g, const ElementSet& s) {
  const int n = g.order();
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(n, n);
  for (Element v = 0; v < n; ++v)
    for (Element x : s) counts(v, g.mul(g.inv(v), x)) += 1;
  return counts;
}

Eigen::MatrixXd normalized(const CountGraph& g) {
  if (g.d == 0) {
    if (g.n == 1) return Eigen::MatrixXd::Ones(1, 1);
    throw std::invalid_argument("normalized: degree 0 graph with n > 1");
  }
  return g.counts.cast<double>() / static_cast<double>(g.d);
}

bool bfs_connected(const CountGraph& g) {
  if (g.n <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u = 0; u < g.n; ++u)
      if (!seen[u] && g.counts(v, u) > 0) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  return reached == g.n;
}

bool bfs_bipartite(const CountGraph& g) {
  if (g.n < 2) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.counts(v, v) > 0) return false;

  std::vector<int> color(g.n, -1);
  for (int start = 0; start < g.n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = 0; u < g.n; ++u) {
        if (g.counts(v, u) == 0 || u == v) continue;
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace cayspec
