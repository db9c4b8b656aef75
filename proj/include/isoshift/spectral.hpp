#pragma once

#include "isoshift/types.hpp"

namespace isoshift {

enum class BasisSource { Laplacian, Adjacency, Dft, Custom };

const char* to_string(BasisSource s);

/// Unitary eigenbasis of a self-adjoint matrix: columns of psi are
/// orthonormal eigenvectors, lambda holds the eigenvalues sorted ascending.
/// For source == Dft, psi is the normalized DFT matrix and lambda the
/// angular frequencies 2πk/m.
struct SpectralBasis {
  int n = 0;
  ComplexMatrix psi;
  RealVector lambda;
  BasisSource source = BasisSource::Custom;
};

/// Dense symmetric eigendecomposition, eigenvalues ascending. Sign
/// convention: in each column the first entry of magnitude > 1e-12 is made
/// positive, which pins reflections (but not rotations inside degenerate
/// eigenspaces).
SpectralBasis eig_sym(const RealMatrix& a, BasisSource source);

/// Normalized DFT basis: psi[n,k] = exp(i·2πnk/m)/√m, lambda[k] = 2πk/m.
SpectralBasis dft_basis(int m);

/// Forward transform x̂ = psi*·x.
ComplexVector gft(const ComplexVector& x, const SpectralBasis& b);

/// Inverse transform x = psi·x̂.
ComplexVector igft(const ComplexVector& xhat, const SpectralBasis& b);

/// Smallest gap between consecutive sorted eigenvalues (inf for n < 2).
double min_eigen_gap(const RealVector& lambda);

}  // namespace isoshift
