#include "isoshift/schrodinger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isoshift {

Hamiltonian hamiltonian(const SpectralBasis& b, const FrequencySpec& f) {
  if (f.values.size() != b.n)
    throw std::invalid_argument("hamiltonian: frequency spec dimension " +
                                std::to_string(f.values.size()) +
                                " does not match basis dimension " + std::to_string(b.n));
  Hamiltonian h;
  h.h = b.psi * f.values.cast<Complex>().asDiagonal() * b.psi.adjoint();
  h.basis = b;
  h.gamma = f.values;
  return h;
}

ComplexMatrix transition_spectral(const Hamiltonian& h, double t, double alpha) {
  if (alpha == 0.0) throw std::invalid_argument("transition: alpha must be nonzero");
  const ComplexVector phases = phase_diag(h.gamma, t / alpha);
  return h.basis.psi * phases.asDiagonal() * h.basis.psi.adjoint();
}

ComplexMatrix transition_series(const Hamiltonian& h, double t, double alpha, double tol) {
  if (alpha == 0.0) throw std::invalid_argument("transition: alpha must be nonzero");
  if (!(tol > 0.0)) throw std::invalid_argument("transition_series: tol must be positive");
  const Eigen::Index n = h.h.rows();
  const Complex z(0.0, -t / alpha);  // series in (z·H)^r / r!

  // ‖t·H/α‖₂ = |t/α|·max|γ|; the exponential terms peak near r ≈ ‖·‖₂, so
  // require at least ⌈e·‖·‖₂⌉ terms before trusting the size criterion.
  const double spectral_norm =
      h.gamma.size() > 0 ? std::abs(t / alpha) * h.gamma.cwiseAbs().maxCoeff() : 0.0;
  const long min_terms = static_cast<long>(std::ceil(std::numbers::e * spectral_norm));
  constexpr long kMaxTerms = 10000;

  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (long r = 1; r <= kMaxTerms; ++r) {
    term = (term * h.h) * (z / static_cast<double>(r));
    sum += term;
    if (r >= min_terms && max_abs(term) <= tol) return sum;
  }
  throw std::runtime_error("transition_series: no convergence after " +
                           std::to_string(kMaxTerms) + " terms (|t/alpha|*||H|| = " +
                           std::to_string(spectral_norm) + ")");
}

ComplexVector evolve(const ComplexVector& u0, const Hamiltonian& h, double t, double alpha) {
  if (alpha == 0.0) throw std::invalid_argument("evolve: alpha must be nonzero");
  if (u0.size() != h.basis.n)
    throw std::invalid_argument("evolve: signal length " + std::to_string(u0.size()) +
                                " does not match Hamiltonian dimension " +
                                std::to_string(h.basis.n));
  const ComplexVector coeffs = h.basis.psi.adjoint() * u0;
  const ComplexVector phases = phase_diag(h.gamma, t / alpha);
  return h.basis.psi * coeffs.cwiseProduct(phases);
}

}  // namespace isoshift
