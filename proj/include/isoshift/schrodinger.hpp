#pragma once

#include "isoshift/spectral.hpp"
#include "isoshift/translation.hpp"
#include "isoshift/types.hpp"

namespace isoshift {

/// Self-adjoint generator H = Ψ·Diag(γ)·Ψ* of the evolution; γ is the
/// frequency diagonal it was assembled from.
struct Hamiltonian {
  ComplexMatrix h;
  SpectralBasis basis;
  RealVector gamma;
};

Hamiltonian hamiltonian(const SpectralBasis& b, const FrequencySpec& f);

/// Transition function exp(-i·t·H/α) via the eigendecomposition.
ComplexMatrix transition_spectral(const Hamiltonian& h, double t, double alpha = 1.0);

/// Same matrix by the truncated power series Σ (-it/α)^r H^r / r!.
/// Terms are added until the term's max-abs norm drops below tol and at
/// least ⌈e·|t/α|·‖H‖₂⌉ terms were taken (the series grows before it
/// shrinks). Throws after 10000 terms.
ComplexMatrix transition_series(const Hamiltonian& h, double t, double alpha, double tol);

/// u(t) = Σ_k exp(-i·t·γ_k/α)·⟨u0, ψ_k⟩·ψ_k, computed by eigen-expansion
/// without materializing the transition matrix.
ComplexVector evolve(const ComplexVector& u0, const Hamiltonian& h, double t,
                     double alpha = 1.0);

}  // namespace isoshift
