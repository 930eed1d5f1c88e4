#pragma once

#include <Eigen/Core>

#include "cayspec/errors.hpp"
#include "cayspec/graph.hpp"

namespace cayspec {

constexpr double kDefaultTol = 1e-10;

// Eigendecomposition of a symmetric operator, adjacency-ordered: t(0) >= ... >= t(n-1).
// The Laplacian view is index-aligned: lambda(i) = 1 - t(i) gives the ascending
// Laplacian sequence.
class Spectrum {
 public:
  Spectrum(Eigen::VectorXd eigs_descending, Eigen::MatrixXd basis, double tol)
      : t_(std::move(eigs_descending)), q_(std::move(basis)), tol_(tol) {}

  int size() const { return static_cast<int>(t_.size()); }
  double tol() const { return tol_; }

  double t(int i) const { return t_(i); }
  double lambda(int i) const { return 1.0 - t_(i); }

  double second_largest() const { need(2); return t_(1); }          // t2
  double smallest() const { need(1); return t_(size() - 1); }       // tn
  double laplacian_second() const { return 1.0 - second_largest(); }   // lambda2
  double laplacian_largest() const { return 1.0 - smallest(); }        // lambdan

  const Eigen::VectorXd& adjacency_eigenvalues() const { return t_; }
  Eigen::VectorXd laplacian_eigenvalues() const {
    return Eigen::VectorXd::Ones(t_.size()) - t_;
  }

  // eigenvector for t2, the input to the Cheeger sweep
  Eigen::VectorXd fiedler_vector() const { need(2); return q_.col(1); }

  const Eigen::MatrixXd& basis() const { return q_; }

  // max-norm of M*Q - Q*diag(t); the accuracy contract is residual < 10*tol
  double max_reconstruction_residual(const Eigen::MatrixXd& m) const {
    return (m * q_ - q_ * t_.asDiagonal()).cwiseAbs().maxCoeff();
  }

 private:
  void need(int k) const {
    if (size() < k) throw TooSmallError("spectrum has fewer than " + std::to_string(k) +
                                        " eigenvalues");
  }

  Eigen::VectorXd t_;
  Eigen::MatrixXd q_;
  double tol_;
};

// Full symmetric eigendecomposition, descending eigenvalue order.
// Throws NotSymmetricMatrixError when max |M - M^T| > tol, NoConvergenceError on
// solver failure.
Spectrum eig_symmetric(const Eigen::MatrixXd& m, double tol = kDefaultTol);

// eig_symmetric(normalized(g)); the n = 1 graph yields spectrum {1}.
Spectrum eig_normalized(const CountGraph& g, double tol = kDefaultTol);

// true iff t2 < 1 - tol; the n = 1 spectrum counts as connected
bool is_connected_spectral(const Spectrum& s, double tol = kDefaultTol);

// true iff tn <= -1 + tol; requires a connected spectrum (throws DisconnectedError);
// the n = 1 spectrum counts as non-bipartite
bool is_bipartite_spectral(const Spectrum& s, double tol = kDefaultTol);

}  // namespace cayspec
