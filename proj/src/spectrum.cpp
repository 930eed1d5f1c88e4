#include "cayspec/spectrum.hpp"

#include <Eigen/Eigenvalues>

namespace cayspec {

Spectrum eig_symmetric(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw NotSymmetricMatrixError(-1.0);
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol) throw NotSymmetricMatrixError(asym);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw NoConvergenceError();

  const int n = static_cast<int>(m.rows());
  Eigen::VectorXd t(n);
  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i) {          // Eigen returns ascending; flip to descending
    t(i) = solver.eigenvalues()(n - 1 - i);
    q.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return Spectrum(std::move(t), std::move(q), tol);
}

Spectrum eig_normalized(const CountGraph& g, double tol) {
  return eig_symmetric(normalized(g), tol);
}

bool is_connected_spectral(const Spectrum& s, double tol) {
  if (s.size() == 1) return true;
  return s.second_largest() < 1.0 - tol;
}

bool is_bipartite_spectral(const Spectrum& s, double tol) {
  if (s.size() == 1) return false;
  if (!is_connected_spectral(s, tol)) throw DisconnectedError();
  return s.smallest() <= -1.0 + tol;
}

}  // namespace cayspec
