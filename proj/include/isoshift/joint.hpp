#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "isoshift/graph.hpp"
#include "isoshift/spectral.hpp"
#include "isoshift/translation.hpp"
#include "isoshift/types.hpp"

namespace isoshift {

// ============================================================================
// Joint time-vertex domain
//
// Signals are N×M matrices (rows = vertices, columns = time steps) with the
// column-stacking vec convention: vec index = time·N + vertex, matching
// Ψ_J = Ψ_D ⊗ Ψ_G. Kronecker sum throughout is A ⊕ B = A⊗I + I⊗B.
// ============================================================================

/// N×M time-vertex signal, vertex index down the rows.
using TimeVertexSignal = ComplexMatrix;

/// Dense joint operators are only materialized up to this vec dimension;
/// beyond it use the two-sided path translate_joint().
inline constexpr Eigen::Index kMaxDenseJointDim = 4096;

enum class JointForm { Kronecker, Spectral, Segarra, SegarraBivariate };

const char* to_string(JointForm f);

struct JointOperator {
  ComplexMatrix t;        // (N·M)×(N·M)
  double kappa = 0.0;
  double upsilon = 0.0;
  JointForm form = JointForm::Kronecker;
};

// ============================================================================
// Joint Fourier transform
// ============================================================================

/// X̂ = Ψ_G*·X·conj(Ψ_D); bd must be a DFT basis of size M.
TimeVertexSignal jft(const TimeVertexSignal& x, const SpectralBasis& bg,
                     const SpectralBasis& bd);

/// Inverse: X = Ψ_G·X̂·Ψ_D^T.
TimeVertexSignal ijft(const TimeVertexSignal& xhat, const SpectralBasis& bg,
                      const SpectralBasis& bd);

/// Explicit Ψ_J = Ψ_D ⊗ Ψ_G (dense; subject to kMaxDenseJointDim).
ComplexMatrix joint_fourier_matrix(const SpectralBasis& bg, const SpectralBasis& bd);

// ============================================================================
// Joint translation operators
// ============================================================================

/// T_J = T_D^υ ⊗ T_G^κ (the defining Kronecker form).
JointOperator jto_kronecker(const TranslationOperator& tg, int m, double upsilon);

/// Same operator assembled from the joint spectrum: Ψ_J·Diag(exp(-iζ))·Ψ_J*
/// with ζ[j·N+i] = κ·ϖ_i + υ·ω_j. Kept independent of jto_kronecker so the
/// two routes cross-check each other.
JointOperator jto_spectral(const SpectralBasis& bg, const SpectralBasis& bd,
                           const FrequencySpec& fg, double kappa, double upsilon);

/// Two-sided application T_G^κ·X·(T_D^T)^υ; the only path for large N·M.
TimeVertexSignal translate_joint(const TranslationOperator& tg, double upsilon,
                                 const TimeVertexSignal& x);

ComplexVector apply_joint(const JointOperator& op, const ComplexVector& x);

// ============================================================================
// Segarra joint shift and its bivariate reformulation
// ============================================================================

/// S_J = W_D ⊕ W_G: the adjacency of the joint graph, kept as a reference
/// point precisely because it is not isometric. wd must be the adjacency of
/// an M-cycle.
JointOperator segarra_shift(const RealMatrix& wg, const RealMatrix& wd);

/// (Φ_D ⊗ Φ_G)·(Γ_D^υ ⊕ Γ_G^κ)·(Φ_D ⊗ Φ_G)* with elementwise eigenvalue
/// powers (0^0 = 1); κ, υ nonnegative integers.
JointOperator segarra_bivariate(const SpectralBasis& bg_adj, const SpectralBasis& bd_adj,
                                int kappa, int upsilon);

/// | ‖T·x‖₂/‖x‖₂ − 1 |.
double isometry_defect(const JointOperator& op, const ComplexVector& x);

/// Cartesian product of g with the m-cycle time graph: W_J = W_D ⊕ W_G.
/// Its Laplacian is L_D ⊕ L_G, the joint Laplacian.
Graph joint_graph(const Graph& g, int m);

// ============================================================================
// Sample-moment stationarity diagnostic
// ============================================================================

struct JwssShiftResult {
  double kappa = 0.0;
  double upsilon = 0.0;
  double mean_dev = 0.0;    // ‖T_J·μ̂ − μ̂‖_∞
  double moment_dev = 0.0;  // ‖T_J·Ŝ·T_J* − Ŝ‖_max
  bool pass = false;
};

struct JwssReport {
  int sample_count = 0;
  double tol = 0.0;
  std::vector<JwssShiftResult> shifts;
  bool pass = false;
};

/// Finite-sample JWSS diagnostic: checks invariance of the sample mean and
/// the uncentered sample second moment under each requested joint shift.
/// tg_builder maps κ to the graph translation operator to use.
JwssReport jwss_check(const std::vector<TimeVertexSignal>& signals,
                      const std::vector<std::pair<double, double>>& shifts,
                      const std::function<TranslationOperator(double)>& tg_builder,
                      double tol);

}  // namespace isoshift
