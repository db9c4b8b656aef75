#include "isoshift/translation.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace isoshift {

namespace {

// Clamps eigensolver roundoff to zero before the square root; genuinely
// negative input means the matrix was not positive semidefinite.
double clamped_sqrt(double lam) {
  if (std::abs(lam) < 1e-10) return 0.0;
  if (lam < 0.0)
    throw std::invalid_argument("negative eigenvalue " + std::to_string(lam) +
                                " has no real square root; basis is not PSD");
  return std::sqrt(lam);
}

void require_source(const SpectralBasis& b, BasisSource wanted, const char* variant) {
  if (b.source != wanted)
    throw std::invalid_argument(std::string(variant) + " requires a " +
                                to_string(wanted) + " basis, got " + to_string(b.source));
}

}  // namespace

const char* to_string(FrequencyVariant v) {
  switch (v) {
    case FrequencyVariant::LaplacianSqrt: return "laplacian_sqrt";
    case FrequencyVariant::GiraultReduced: return "girault_reduced";
    case FrequencyVariant::GaviliUniform: return "gavili_uniform";
    case FrequencyVariant::GaviliPhases: return "gavili_phases";
    case FrequencyVariant::Custom: return "custom";
  }
  return "?";
}

FrequencySpec laplacian_sqrt_frequencies(const SpectralBasis& b) {
  require_source(b, BasisSource::Laplacian, "laplacian_sqrt");
  FrequencySpec f;
  f.variant = FrequencyVariant::LaplacianSqrt;
  f.values.resize(b.n);
  for (int k = 0; k < b.n; ++k) f.values[k] = clamped_sqrt(b.lambda[k]);
  return f;
}

FrequencySpec girault_frequencies(const SpectralBasis& b, std::optional<double> rho) {
  require_source(b, BasisSource::Laplacian, "girault_reduced");
  const double lambda_max = b.lambda[b.n - 1];
  const double r = rho.value_or(lambda_max);
  if (r < lambda_max)
    throw std::invalid_argument("girault_reduced: rho=" + std::to_string(r) +
                                " is below the largest Laplacian eigenvalue " +
                                std::to_string(lambda_max));
  FrequencySpec f;
  f.variant = FrequencyVariant::GiraultReduced;
  f.rho = r;
  f.values.resize(b.n);
  for (int k = 0; k < b.n; ++k) {
    // The trivial graph has lambda_max == 0; all frequencies are 0 then.
    const double ratio = r > 0.0 ? b.lambda[k] / r : 0.0;
    f.values[k] = std::numbers::pi * clamped_sqrt(ratio);
  }
  return f;
}

FrequencySpec gavili_uniform_frequencies(const SpectralBasis& b, GaviliOrdering ordering) {
  if (b.source == BasisSource::Laplacian)
    throw std::invalid_argument(
        "gavili_uniform requires an adjacency basis or a custom unitary basis");
  if (ordering == GaviliOrdering::Auto)
    ordering = b.source == BasisSource::Adjacency ? GaviliOrdering::DescendingEigenvalue
                                                  : GaviliOrdering::Natural;
  FrequencySpec f;
  f.variant = FrequencyVariant::GaviliUniform;
  f.values.resize(b.n);
  for (int col = 0; col < b.n; ++col) {
    // Columns are sorted by ascending eigenvalue, so the descending rank of
    // column `col` is n-1-col; the largest eigenvalue gets phase 0.
    const int ell =
        ordering == GaviliOrdering::DescendingEigenvalue ? b.n - 1 - col : col;
    f.values[col] = 2.0 * std::numbers::pi * ell / b.n;
  }
  return f;
}

FrequencySpec gavili_phase_frequencies(const SpectralBasis& b, const RealVector& phases) {
  if (b.source == BasisSource::Laplacian)
    throw std::invalid_argument(
        "gavili_phases requires an adjacency basis or a custom unitary basis");
  if (phases.size() != b.n)
    throw std::invalid_argument("gavili_phases: need exactly n phases");
  std::set<double> seen;
  for (int k = 0; k < b.n; ++k) {
    if (!(phases[k] >= 0.0 && phases[k] <= 2.0 * std::numbers::pi))
      throw std::invalid_argument("gavili_phases: phase " + std::to_string(phases[k]) +
                                  " outside [0, 2pi]");
    if (!seen.insert(phases[k]).second)
      throw std::invalid_argument("gavili_phases: phases must be pairwise distinct");
  }
  FrequencySpec f;
  f.variant = FrequencyVariant::GaviliPhases;
  f.values = phases;
  f.phases = phases;
  return f;
}

FrequencySpec custom_frequencies(const SpectralBasis& b, const RealVector& values) {
  if (values.size() != b.n)
    throw std::invalid_argument("custom_frequencies: need exactly n values");
  if (!values.allFinite())
    throw std::invalid_argument("custom_frequencies: values must be finite");
  FrequencySpec f;
  f.variant = FrequencyVariant::Custom;
  f.values = values;
  return f;
}

TranslationOperator gto(const SpectralBasis& b, const FrequencySpec& f, double kappa) {
  if (f.values.size() != b.n)
    throw std::invalid_argument("gto: frequency spec dimension " +
                                std::to_string(f.values.size()) +
                                " does not match basis dimension " + std::to_string(b.n));
  if (!std::isfinite(kappa)) throw std::invalid_argument("gto: kappa must be finite");
  TranslationOperator op;
  op.t = b.psi * phase_diag(f.values, kappa).asDiagonal() * b.psi.adjoint();
  op.basis = b;
  op.freq = f;
  op.kappa = kappa;
  return op;
}

ComplexVector translate(const TranslationOperator& op, const ComplexVector& x) {
  if (x.size() != op.t.rows())
    throw std::invalid_argument("translate: signal length " + std::to_string(x.size()) +
                                " does not match operator dimension " +
                                std::to_string(op.t.rows()));
  return op.t * x;
}

RealVector power_spectrum(const ComplexVector& x, const SpectralBasis& b) {
  return gft(x, b).cwiseAbs2();
}

}  // namespace isoshift
