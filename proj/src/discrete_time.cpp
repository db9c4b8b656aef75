#include "isoshift/discrete_time.hpp"

#include <stdexcept>

#include "isoshift/spectral.hpp"

namespace isoshift {

RealMatrix shift_permutation(int m) {
  if (m < 1) throw std::invalid_argument("shift_permutation: m must be positive");
  RealMatrix p = RealMatrix::Zero(m, m);
  for (int j = 0; j < m; ++j) p((j + 1) % m, j) = 1.0;
  return p;
}

ComplexMatrix dt_translation(int m, double upsilon) {
  const SpectralBasis b = dft_basis(m);
  const ComplexVector phases = phase_diag(b.lambda, upsilon);
  return b.psi * phases.asDiagonal() * b.psi.adjoint();
}

}  // namespace isoshift
