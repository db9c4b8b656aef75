#pragma once

#include <optional>

#include "isoshift/spectral.hpp"
#include "isoshift/types.hpp"

namespace isoshift {

// ============================================================================
// Graph frequency specifications
//
// The diagonal M_G of the translation operator T^κ = Ψ·exp(-iκM_G)·Ψ*.
// Four named manifestations plus a caller-supplied diagonal.
// ============================================================================

enum class FrequencyVariant {
  LaplacianSqrt,   // ϖ_ℓ = √λ_ℓ on the Laplacian basis
  GiraultReduced,  // π·√(λ_ℓ/ρ), eigenvalues mapped into [0, π]
  GaviliUniform,   // 2πℓ/N attached per ordering rule
  GaviliPhases,    // arbitrary distinct phases in [0, 2π]
  Custom,
};

const char* to_string(FrequencyVariant v);

struct FrequencySpec {
  FrequencyVariant variant = FrequencyVariant::Custom;
  RealVector values;   // diagonal of M_G, ordered to match the basis columns
  double rho = 0.0;    // GiraultReduced only
  RealVector phases;   // GaviliPhases only
};

/// How gavili_uniform attaches 2πℓ/N to basis columns. Auto resolves to
/// DescendingEigenvalue for adjacency bases (largest eigenvalue gets phase 0)
/// and Natural column order for DFT/custom bases.
enum class GaviliOrdering { Auto, Natural, DescendingEigenvalue };

FrequencySpec laplacian_sqrt_frequencies(const SpectralBasis& b);
FrequencySpec girault_frequencies(const SpectralBasis& b,
                                  std::optional<double> rho = std::nullopt);
FrequencySpec gavili_uniform_frequencies(const SpectralBasis& b,
                                         GaviliOrdering ordering = GaviliOrdering::Auto);
FrequencySpec gavili_phase_frequencies(const SpectralBasis& b, const RealVector& phases);
FrequencySpec custom_frequencies(const SpectralBasis& b, const RealVector& values);

// ============================================================================
// Translation operator
// ============================================================================

/// Isometric graph translation T^κ = Ψ·exp(-iκM_G)·Ψ*, with the basis and
/// frequency spec it was built from. Gavili variants are only well defined
/// relative to the recorded basis when eigenvalues repeat.
struct TranslationOperator {
  ComplexMatrix t;
  SpectralBasis basis;
  FrequencySpec freq;
  double kappa = 0.0;
};

TranslationOperator gto(const SpectralBasis& b, const FrequencySpec& f, double kappa);

ComplexVector translate(const TranslationOperator& op, const ComplexVector& x);

/// |Ψ*·x|² elementwise; invariant under any translation built on b.
RealVector power_spectrum(const ComplexVector& x, const SpectralBasis& b);

}  // namespace isoshift
