#include <doctest.h>

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "cayspec/errors.hpp"
#include "cayspec/graph.hpp"
#include "cayspec/spectrum.hpp"

using namespace cayspec;

namespace {

GeneratingSet valid(const FiniteGroup& g, const ElementSet& s, bool conj = false) {
  return validate_generating_set(g, s, conj);
}

// independent oracle: classical cyclic Jacobi sweeps, eigenvalues only
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a) {
  const int n = static_cast<int>(a.rows());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-18) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t =
            (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace

TEST_CASE("complete graph on four vertices") {
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const Spectrum s = eig_normalized(build_cayley(z4, valid(z4, {1, 2, 3})));
  CHECK(s.t(0) == doctest::Approx(1.0).epsilon(1e-9));
  for (int i = 1; i < 4; ++i) CHECK(s.t(i) == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
  CHECK(is_connected_spectral(s));
  CHECK(!is_bipartite_spectral(s));
}

TEST_CASE("4-cycle") {
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const Spectrum s = eig_normalized(build_cayley(z4, valid(z4, {1, 3})));
  const double want[] = {1.0, 0.0, 0.0, -1.0};
  for (int i = 0; i < 4; ++i) CHECK(s.t(i) == doctest::Approx(want[i]).epsilon(1e-9));
  CHECK(is_bipartite_spectral(s));
}

TEST_CASE("golden-ratio smallest eigenvalue of the 5-element sum graph") {
  const FiniteGroup z5 = FiniteGroup::cyclic(5);
  const Spectrum s = eig_normalized(build_cayley_sum(z5, valid(z5, {1, 4}, true)));
  CHECK(s.smallest() == doctest::Approx(-(1.0 + std::sqrt(5.0)) / 4.0).epsilon(1e-9));
  CHECK(s.t(0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(!is_bipartite_spectral(s));
}

TEST_CASE("descending order and laplacian views") {
  const FiniteGroup z7 = FiniteGroup::cyclic(7);
  const CountGraph g = build_cayley(z7, valid(z7, {1, 2, 5, 6}));
  const Spectrum s = eig_normalized(g);
  for (int i = 1; i < s.size(); ++i) CHECK(s.t(i - 1) >= s.t(i));
  for (int i = 0; i < s.size(); ++i) CHECK(s.lambda(i) == 1.0 - s.t(i));
  CHECK(s.laplacian_second() == 1.0 - s.second_largest());
  CHECK(s.laplacian_largest() == 1.0 - s.smallest());
  const Eigen::VectorXd lam = s.laplacian_eigenvalues();
  for (int i = 0; i < s.size(); ++i) CHECK(lam(i) == doctest::Approx(s.lambda(i)));
}

TEST_CASE("fiedler vector is an eigenvector for t2") {
  const FiniteGroup z8 = FiniteGroup::cyclic(8);
  const CountGraph g = build_cayley(z8, valid(z8, {1, 7}));
  const Spectrum s = eig_normalized(g);
  const Eigen::MatrixXd t = normalized(g);
  const Eigen::VectorXd f = s.fiedler_vector();
  CHECK((t * f - s.second_largest() * f).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("matches an independent jacobi oracle") {
  struct Case {
    FiniteGroup g;
    ElementSet s;
    bool sum;
  };
  const Case cases[] = {{FiniteGroup::cyclic(7), {1, 6}, false},
                        {FiniteGroup::cyclic(5), {1, 4}, true},
                        {FiniteGroup::cyclic(12), {1, 6, 11}, true},
                        {FiniteGroup::dihedral(4), {4, 6}, true},
                        {FiniteGroup::dihedral(5), {1, 4, 5}, false},
                        {FiniteGroup::quaternion8(), {2, 3, 4, 5}, false},
                        {FiniteGroup::symmetric(3), {1, 2, 5}, true}};
  for (const Case& tc : cases) {
    const GeneratingSet gs = inspect_generating_set(tc.g, tc.s);
    const CountGraph g = tc.sum ? build_cayley_sum(tc.g, gs) : build_cayley(tc.g, gs);
    const Spectrum s = eig_normalized(g);
    const std::vector<double> oracle = jacobi_eigenvalues(normalized(g));
    REQUIRE(static_cast<int>(oracle.size()) == s.size());
    for (int i = 0; i < s.size(); ++i)
      CHECK(s.t(i) == doctest::Approx(oracle[i]).epsilon(1e-8));
  }
}

TEST_CASE("trace and frobenius identities") {
  const FiniteGroup z9 = FiniteGroup::cyclic(9);
  const CountGraph g = build_cayley_sum(z9, valid(z9, {1, 3, 6, 8}, true));
  const Spectrum s = eig_normalized(g);
  const Eigen::MatrixXd t = normalized(g);
  double tr = 0.0, fr = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    tr += s.t(i);
    fr += s.t(i) * s.t(i);
  }
  CHECK(std::abs(tr - t.trace()) < 1e-9);
  CHECK(std::abs(fr - t.squaredNorm()) < 1e-9);
}

TEST_CASE("reconstruction residual stays within the contract") {
  const FiniteGroup d6 = FiniteGroup::dihedral(6);
  const CountGraph g = build_cayley(d6, valid(d6, {1, 5, 6}));
  const Spectrum s = eig_normalized(g);
  CHECK(s.max_reconstruction_residual(normalized(g)) < 10.0 * kDefaultTol);
}

TEST_CASE("disconnected spectra") {
  const FiniteGroup z6 = FiniteGroup::cyclic(6);
  const CountGraph g = build_cayley(z6, inspect_generating_set(z6, {2, 4}));
  const Spectrum s = eig_normalized(g);
  CHECK(!is_connected_spectral(s));
  CHECK_THROWS_AS(is_bipartite_spectral(s), DisconnectedError);
}

TEST_CASE("one-vertex spectrum") {
  const FiniteGroup g1 = FiniteGroup::cyclic(1);
  const Spectrum s = eig_normalized(build_cayley(g1, valid(g1, {})));
  CHECK(s.size() == 1);
  CHECK(s.t(0) == 1.0);
  CHECK(is_connected_spectral(s));
  CHECK(!is_bipartite_spectral(s));
  CHECK_THROWS_AS(s.second_largest(), TooSmallError);
  CHECK_THROWS_AS(s.fiedler_vector(), TooSmallError);
}

TEST_CASE("input validation") {
  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(eig_symmetric(bad), NotSymmetricMatrixError);
  CHECK_THROWS_AS(eig_symmetric(Eigen::MatrixXd::Zero(2, 3)), NotSymmetricMatrixError);
}

TEST_CASE("spectral and bfs agreement across a mixed battery") {
  struct Case {
    FiniteGroup g;
    ElementSet s;
    bool sum;
  };
  const Case cases[] = {{FiniteGroup::cyclic(6), {1, 5}, false},
                        {FiniteGroup::cyclic(6), {1, 5}, true},
                        {FiniteGroup::cyclic(7), {1, 6}, true},
                        {FiniteGroup::cyclic(8), {1, 4, 7}, true},
                        {FiniteGroup::dihedral(3), {3, 4, 5}, false},
                        {FiniteGroup::quaternion8(), {2, 3}, false}};
  for (const Case& tc : cases) {
    const GeneratingSet gs = inspect_generating_set(tc.g, tc.s);
    const CountGraph g = tc.sum ? build_cayley_sum(tc.g, gs) : build_cayley(tc.g, gs);
    const Spectrum s = eig_normalized(g);
    CHECK(is_connected_spectral(s) == bfs_connected(g));
    if (bfs_connected(g)) CHECK(is_bipartite_spectral(s) == bfs_bipartite(g));
  }
}
