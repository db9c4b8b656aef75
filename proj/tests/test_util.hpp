#pragma once

#include <complex>

#include "isoshift/types.hpp"

namespace isoshift::test {

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

/// Largest off-diagonal magnitude.
inline double max_off_diagonal(const ComplexMatrix& a) {
  double out = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) out = std::max(out, std::abs(a(i, j)));
  return out;
}

}  // namespace isoshift::test
