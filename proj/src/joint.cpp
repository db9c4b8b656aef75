#include "isoshift/joint.hpp"

#include <cmath>
#include <stdexcept>

#include "isoshift/discrete_time.hpp"

namespace isoshift {

namespace {

void require_dense_ok(Eigen::Index n, Eigen::Index m, const char* what) {
  if (n * m > kMaxDenseJointDim)
    throw std::invalid_argument(std::string(what) + ": joint dimension " +
                                std::to_string(n * m) + " exceeds the dense limit " +
                                std::to_string(kMaxDenseJointDim) +
                                "; use translate_joint instead");
}

void require_dft(const SpectralBasis& bd, const char* what) {
  if (bd.source != BasisSource::Dft)
    throw std::invalid_argument(std::string(what) + ": time basis must be a DFT basis");
}

// The adjacency of an M-cycle: symmetric, zero diagonal, unit weights, each
// row with exactly two neighbours (one for M = 2, none for M = 1).
void require_cycle_adjacency(const RealMatrix& wd) {
  const Eigen::Index m = wd.rows();
  if (m < 1 || wd.cols() != m)
    throw std::invalid_argument("segarra_shift: time adjacency must be square");
  const int expected_per_row = m >= 3 ? 2 : (m == 2 ? 1 : 0);
  for (Eigen::Index i = 0; i < m; ++i) {
    int units = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
      const double v = wd(i, j);
      if (v == 1.0)
        ++units;
      else if (v != 0.0)
        throw std::invalid_argument("segarra_shift: time adjacency must be 0/1");
    }
    if (wd(i, i) != 0.0 || units != expected_per_row)
      throw std::invalid_argument(
          "segarra_shift: time adjacency is not an M-cycle (row " + std::to_string(i) +
          ")");
    for (Eigen::Index j = 0; j < m; ++j)
      if (wd(i, j) != wd(j, i))
        throw std::invalid_argument("segarra_shift: time adjacency must be symmetric");
  }
}

}  // namespace

const char* to_string(JointForm f) {
  switch (f) {
    case JointForm::Kronecker: return "kronecker";
    case JointForm::Spectral: return "spectral";
    case JointForm::Segarra: return "segarra";
    case JointForm::SegarraBivariate: return "segarra_bivariate";
  }
  return "?";
}

// ============================================================================
// Joint Fourier transform
// ============================================================================

TimeVertexSignal jft(const TimeVertexSignal& x, const SpectralBasis& bg,
                     const SpectralBasis& bd) {
  require_dft(bd, "jft");
  if (x.rows() != bg.n || x.cols() != bd.n)
    throw std::invalid_argument("jft: signal is " + std::to_string(x.rows()) + "x" +
                                std::to_string(x.cols()) + " but bases are " +
                                std::to_string(bg.n) + " and " + std::to_string(bd.n));
  return bg.psi.adjoint() * x * bd.psi.conjugate();
}

TimeVertexSignal ijft(const TimeVertexSignal& xhat, const SpectralBasis& bg,
                      const SpectralBasis& bd) {
  require_dft(bd, "ijft");
  if (xhat.rows() != bg.n || xhat.cols() != bd.n)
    throw std::invalid_argument("ijft: coefficients are " + std::to_string(xhat.rows()) +
                                "x" + std::to_string(xhat.cols()) + " but bases are " +
                                std::to_string(bg.n) + " and " + std::to_string(bd.n));
  return bg.psi * xhat * bd.psi.transpose();
}

ComplexMatrix joint_fourier_matrix(const SpectralBasis& bg, const SpectralBasis& bd) {
  require_dense_ok(bg.n, bd.n, "joint_fourier_matrix");
  return kron(bd.psi, bg.psi);
}

// ============================================================================
// Joint translation
// ============================================================================

JointOperator jto_kronecker(const TranslationOperator& tg, int m, double upsilon) {
  if (m < 1) throw std::invalid_argument("jto_kronecker: time length must be positive");
  require_dense_ok(tg.t.rows(), m, "jto_kronecker");
  JointOperator op;
  op.t = kron(dt_translation(m, upsilon), tg.t);
  op.kappa = tg.kappa;
  op.upsilon = upsilon;
  op.form = JointForm::Kronecker;
  return op;
}

JointOperator jto_spectral(const SpectralBasis& bg, const SpectralBasis& bd,
                           const FrequencySpec& fg, double kappa, double upsilon) {
  require_dft(bd, "jto_spectral");
  if (fg.values.size() != bg.n)
    throw std::invalid_argument("jto_spectral: frequency spec does not match graph basis");
  require_dense_ok(bg.n, bd.n, "jto_spectral");
  const Eigen::Index n = bg.n;
  const Eigen::Index m = bd.n;
  // ζ in vec order (graph index fastest): ζ[j·N+i] = κ·ϖ_i + υ·ω_j.
  RealVector zeta(n * m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      zeta[j * n + i] = kappa * fg.values[i] + upsilon * bd.lambda[j];
  const ComplexMatrix psi_j = kron(bd.psi, bg.psi);
  JointOperator op;
  op.t = psi_j * phase_diag(zeta, 1.0).asDiagonal() * psi_j.adjoint();
  op.kappa = kappa;
  op.upsilon = upsilon;
  op.form = JointForm::Spectral;
  return op;
}

TimeVertexSignal translate_joint(const TranslationOperator& tg, double upsilon,
                                 const TimeVertexSignal& x) {
  if (x.rows() != tg.t.rows())
    throw std::invalid_argument("translate_joint: signal has " + std::to_string(x.rows()) +
                                " rows but the graph operator is " +
                                std::to_string(tg.t.rows()) + "-dimensional");
  const ComplexMatrix td = dt_translation(static_cast<int>(x.cols()), upsilon);
  return tg.t * x * td.transpose();
}

ComplexVector apply_joint(const JointOperator& op, const ComplexVector& x) {
  if (x.size() != op.t.rows())
    throw std::invalid_argument("apply_joint: signal length " + std::to_string(x.size()) +
                                " does not match operator dimension " +
                                std::to_string(op.t.rows()));
  return op.t * x;
}

// ============================================================================
// Segarra joint shift
// ============================================================================

JointOperator segarra_shift(const RealMatrix& wg, const RealMatrix& wd) {
  if (wg.rows() != wg.cols() || wg.rows() < 1)
    throw std::invalid_argument("segarra_shift: graph adjacency must be square");
  require_cycle_adjacency(wd);
  require_dense_ok(wg.rows(), wd.rows(), "segarra_shift");
  const Eigen::Index n = wg.rows();
  const Eigen::Index m = wd.rows();
  const RealMatrix s = kron(wd, RealMatrix(RealMatrix::Identity(n, n))) +
                       kron(RealMatrix(RealMatrix::Identity(m, m)), wg);
  JointOperator op;
  op.t = s.cast<Complex>();
  op.kappa = 1.0;
  op.upsilon = 1.0;
  op.form = JointForm::Segarra;
  return op;
}

JointOperator segarra_bivariate(const SpectralBasis& bg_adj, const SpectralBasis& bd_adj,
                                int kappa, int upsilon) {
  if (kappa < 0 || upsilon < 0)
    throw std::invalid_argument("segarra_bivariate: powers must be nonnegative integers");
  require_dense_ok(bg_adj.n, bd_adj.n, "segarra_bivariate");
  const Eigen::Index n = bg_adj.n;
  const Eigen::Index m = bd_adj.n;
  auto int_pow = [](double base, int e) {
    double out = 1.0;  // 0^0 == 1 by the elementwise-power convention
    for (int k = 0; k < e; ++k) out *= base;
    return out;
  };
  RealVector diag(n * m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      diag[j * n + i] =
          int_pow(bd_adj.lambda[j], upsilon) + int_pow(bg_adj.lambda[i], kappa);
  const ComplexMatrix phi = kron(bd_adj.psi, bg_adj.psi);
  JointOperator op;
  op.t = phi * diag.cast<Complex>().asDiagonal() * phi.adjoint();
  op.kappa = kappa;
  op.upsilon = upsilon;
  op.form = JointForm::SegarraBivariate;
  return op;
}

double isometry_defect(const JointOperator& op, const ComplexVector& x) {
  const double norm = x.norm();
  if (norm == 0.0) throw std::invalid_argument("isometry_defect: zero signal");
  return std::abs((op.t * x).norm() / norm - 1.0);
}

Graph joint_graph(const Graph& g, int m) {
  const Graph cycle = make_cycle(m);
  const Eigen::Index n = g.size();
  RealMatrix w = kron(cycle.weights(), RealMatrix(RealMatrix::Identity(n, n))) +
                 kron(RealMatrix(RealMatrix::Identity(m, m)), g.weights());
  return Graph(std::move(w));
}

// ============================================================================
// JWSS diagnostic
// ============================================================================

JwssReport jwss_check(const std::vector<TimeVertexSignal>& signals,
                      const std::vector<std::pair<double, double>>& shifts,
                      const std::function<TranslationOperator(double)>& tg_builder,
                      double tol) {
  if (signals.size() < 2)
    throw std::invalid_argument("jwss_check: need at least 2 signals");
  if (shifts.empty()) throw std::invalid_argument("jwss_check: empty shift list");
  const Eigen::Index n = signals.front().rows();
  const Eigen::Index m = signals.front().cols();
  for (const auto& s : signals)
    if (s.rows() != n || s.cols() != m)
      throw std::invalid_argument("jwss_check: signals must share one shape");

  // Sample mean and uncentered second moment over vec'd signals, accumulated
  // in a fixed order for reproducibility.
  const Eigen::Index nm = n * m;
  ComplexVector mean = ComplexVector::Zero(nm);
  ComplexMatrix moment = ComplexMatrix::Zero(nm, nm);
  for (const auto& s : signals) {
    const ComplexVector x = s.reshaped();  // column-stacking vec
    mean += x;
    moment += x * x.adjoint();
  }
  const double k = static_cast<double>(signals.size());
  mean /= k;
  moment /= k;

  JwssReport report;
  report.sample_count = static_cast<int>(signals.size());
  report.tol = tol;
  report.pass = true;
  for (const auto& [kappa, upsilon] : shifts) {
    const JointOperator tj = jto_kronecker(tg_builder(kappa), static_cast<int>(m), upsilon);
    JwssShiftResult r;
    r.kappa = kappa;
    r.upsilon = upsilon;
    r.mean_dev = (tj.t * mean - mean).cwiseAbs().maxCoeff();
    r.moment_dev = max_abs(ComplexMatrix(tj.t * moment * tj.t.adjoint() - moment));
    r.pass = r.mean_dev <= tol && r.moment_dev <= tol;
    report.pass = report.pass && r.pass;
    report.shifts.push_back(r);
  }
  return report;
}

}  // namespace isoshift
