#include "isoshift/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace isoshift {

const char* to_string(BasisSource s) {
  switch (s) {
    case BasisSource::Laplacian: return "laplacian";
    case BasisSource::Adjacency: return "adjacency";
    case BasisSource::Dft: return "dft";
    case BasisSource::Custom: return "custom";
  }
  return "?";
}

SpectralBasis eig_sym(const RealMatrix& a, BasisSource source) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw std::invalid_argument("eig_sym: matrix must be square and nonempty");
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_sym: eigensolver did not converge for n=" +
                             std::to_string(a.rows()));
  RealMatrix vectors = solver.eigenvectors();  // orthonormal, eigenvalues ascending
  // Fix reflections: first component of magnitude > 1e-12 made positive.
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      if (std::abs(vectors(i, k)) > 1e-12) {
        if (vectors(i, k) < 0.0) vectors.col(k) = -vectors.col(k);
        break;
      }
    }
  }
  SpectralBasis b;
  b.n = static_cast<int>(a.rows());
  b.psi = vectors.cast<Complex>();
  b.lambda = solver.eigenvalues();
  b.source = source;
  return b;
}

SpectralBasis dft_basis(int m) {
  if (m < 1) throw std::invalid_argument("dft_basis: m must be positive");
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  SpectralBasis b;
  b.n = m;
  b.psi.resize(m, m);
  b.lambda.resize(m);
  for (int k = 0; k < m; ++k) {
    const double omega = 2.0 * std::numbers::pi * k / m;
    b.lambda[k] = omega;
    for (int n = 0; n < m; ++n) b.psi(n, k) = std::polar(norm, omega * n);
  }
  b.source = BasisSource::Dft;
  return b;
}

ComplexVector gft(const ComplexVector& x, const SpectralBasis& b) {
  if (x.size() != b.n)
    throw std::invalid_argument("gft: signal length " + std::to_string(x.size()) +
                                " does not match basis dimension " + std::to_string(b.n));
  return b.psi.adjoint() * x;
}

ComplexVector igft(const ComplexVector& xhat, const SpectralBasis& b) {
  if (xhat.size() != b.n)
    throw std::invalid_argument("igft: coefficient length " + std::to_string(xhat.size()) +
                                " does not match basis dimension " + std::to_string(b.n));
  return b.psi * xhat;
}

double min_eigen_gap(const RealVector& lambda) {
  if (lambda.size() < 2) return std::numeric_limits<double>::infinity();
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 1; k < lambda.size(); ++k)
    gap = std::min(gap, lambda[k] - lambda[k - 1]);
  return gap;
}

}  // namespace isoshift
