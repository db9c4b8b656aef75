#pragma once

#include <Eigen/Dense>
#include <complex>

namespace isoshift {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Max-abs (entrywise) norm, the workhorse metric for operator identities.
inline double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double max_abs(const RealMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs(ComplexMatrix(a - b));
}

/// Deviation from unitarity: max(‖A·A* − I‖_max, ‖A*·A − I‖_max).
double unitarity_defect(const ComplexMatrix& a);

/// Kronecker product, row-major blocks a(i,j)·b.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
kron(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
     const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Unit-modulus phase vector exp(-i·scale·values[k]).
ComplexVector phase_diag(const RealVector& values, double scale);

}  // namespace isoshift
