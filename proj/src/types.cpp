#include "isoshift/types.hpp"

namespace isoshift {

double unitarity_defect(const ComplexMatrix& a) {
  const ComplexMatrix eye = ComplexMatrix::Identity(a.rows(), a.cols());
  const double right = max_abs(ComplexMatrix(a * a.adjoint() - eye));
  const double left = max_abs(ComplexMatrix(a.adjoint() * a - eye));
  return std::max(right, left);
}

ComplexVector phase_diag(const RealVector& values, double scale) {
  ComplexVector out(values.size());
  for (Eigen::Index k = 0; k < values.size(); ++k)
    out[k] = std::polar(1.0, -scale * values[k]);
  return out;
}

}  // namespace isoshift
