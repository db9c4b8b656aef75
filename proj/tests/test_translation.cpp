#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "isoshift/discrete_time.hpp"
#include "isoshift/graph.hpp"
#include "isoshift/random.hpp"
#include "isoshift/translation.hpp"
#include "test_util.hpp"

using namespace isoshift;
using isoshift::test::identity;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralBasis laplacian_basis(const Graph& g) {
  return eig_sym(laplacian(g), BasisSource::Laplacian);
}

SpectralBasis adjacency_basis(const Graph& g) {
  return eig_sym(g.weights(), BasisSource::Adjacency);
}

std::vector<Graph> test_graphs() {
  std::vector<Graph> out;
  out.push_back(make_path(2));
  out.push_back(make_cycle(4));
  out.push_back(make_cycle(8));
  out.push_back(make_grid(3, 3));
  out.push_back(make_erdos_renyi(10, 0.5, 7));
  return out;
}

RealVector default_phases(int n) {
  RealVector phi(n);
  for (int k = 0; k < n; ++k) phi[k] = (2.0 * k + 1.0) * kPi / n;
  return phi;
}

}  // namespace

// ============================================================================
// Frequency specifications
// ============================================================================

TEST_CASE("laplacian_sqrt frequencies on P2") {
  // Oracle: lambda = [0, 2] by hand, so the frequencies are [0, sqrt(2)].
  const FrequencySpec f = laplacian_sqrt_frequencies(laplacian_basis(make_path(2)));
  CHECK(f.values[0] == 0.0);
  CHECK(f.values[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("girault frequencies on P2 with the default rho") {
  // Oracle: pi*sqrt(2/2) = pi at the top eigenvalue.
  const FrequencySpec f = girault_frequencies(laplacian_basis(make_path(2)));
  CHECK(f.rho == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f.values[0] == 0.0);
  CHECK(f.values[1] == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("girault rejects rho below the largest eigenvalue") {
  const SpectralBasis b = laplacian_basis(make_path(2));
  CHECK_THROWS_AS(girault_frequencies(b, 1.0), std::invalid_argument);
  CHECK_NOTHROW(girault_frequencies(b, 3.5));
}

TEST_CASE("gavili_uniform frequencies cover 2*pi*l/N") {
  const FrequencySpec f =
      gavili_uniform_frequencies(adjacency_basis(make_cycle(4)), GaviliOrdering::Natural);
  RealVector expected(4);
  expected << 0, kPi / 2, kPi, 3 * kPi / 2;
  CHECK((f.values - expected).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("gavili_uniform default ordering gives phase 0 to the top adjacency mode") {
  const SpectralBasis b = adjacency_basis(make_path(3));
  const FrequencySpec f = gavili_uniform_frequencies(b);
  // Columns are ascending in eigenvalue, so the last column is the largest.
  CHECK(f.values[b.n - 1] == 0.0);
  CHECK(f.values[0] == doctest::Approx(2.0 * kPi * (b.n - 1) / b.n));
}

TEST_CASE("variant/basis compatibility is enforced") {
  const Graph p3 = make_path(3);
  CHECK_THROWS_AS(laplacian_sqrt_frequencies(adjacency_basis(p3)), std::invalid_argument);
  CHECK_THROWS_AS(girault_frequencies(adjacency_basis(p3)), std::invalid_argument);
  CHECK_THROWS_AS(gavili_uniform_frequencies(laplacian_basis(p3)), std::invalid_argument);
  CHECK_THROWS_AS(gavili_phase_frequencies(laplacian_basis(p3), default_phases(3)),
                  std::invalid_argument);
}

TEST_CASE("gavili phases must be distinct and within [0, 2*pi]") {
  const SpectralBasis b = adjacency_basis(make_path(3));
  RealVector bad(3);
  bad << 0.5, 0.5, 1.0;
  CHECK_THROWS_AS(gavili_phase_frequencies(b, bad), std::invalid_argument);
  bad << -0.1, 0.5, 1.0;
  CHECK_THROWS_AS(gavili_phase_frequencies(b, bad), std::invalid_argument);
  CHECK_NOTHROW(gavili_phase_frequencies(b, default_phases(3)));
}

TEST_CASE("trivial graph frequencies degenerate to zero") {
  const SpectralBasis b = laplacian_basis(make_path(1));
  CHECK(laplacian_sqrt_frequencies(b).values[0] == 0.0);
  CHECK(girault_frequencies(b).values[0] == 0.0);
}

// ============================================================================
// Translation operators
// ============================================================================

TEST_CASE("gto at kappa=0 is the identity") {
  const SpectralBasis b = laplacian_basis(make_cycle(4));
  const TranslationOperator op = gto(b, laplacian_sqrt_frequencies(b), 0.0);
  CHECK(max_abs_diff(op.t, identity(4)) <= 1e-12);
}

TEST_CASE("P2 gto at kappa=pi/sqrt(2) is the swap matrix") {
  // Oracle (hand spectral computation): frequencies are [0, sqrt(2)], so the
  // phases at kappa = pi/sqrt(2) are Diag(1, e^{-i*pi}) = Diag(1, -1).
  // Reconjugating with psi = [[1,1],[1,-1]]/sqrt(2) gives
  //   psi*Diag(1,-1)*psi^T = [[0,1],[1,0]].
  const SpectralBasis b = laplacian_basis(make_path(2));
  const TranslationOperator op =
      gto(b, laplacian_sqrt_frequencies(b), kPi / std::sqrt(2.0));
  ComplexMatrix swap(2, 2);
  swap << 0, 1,
          1, 0;
  CHECK(max_abs_diff(op.t, swap) <= 1e-10);

  ComplexVector e0(2);
  e0 << 1, 0;
  ComplexVector e1(2);
  e1 << 0, 1;
  CHECK((translate(op, e0) - e1).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("gto squared at kappa equals gto at 2*kappa") {
  const SpectralBasis b = laplacian_basis(make_grid(3, 3));
  const FrequencySpec f = laplacian_sqrt_frequencies(b);
  const TranslationOperator t1 = gto(b, f, 1.0);
  const TranslationOperator t2 = gto(b, f, 2.0);
  CHECK(max_abs_diff(ComplexMatrix(t1.t * t1.t), t2.t) <= 1e-9);
}

TEST_CASE("gto validates inputs") {
  const SpectralBasis b = laplacian_basis(make_path(3));
  FrequencySpec f = laplacian_sqrt_frequencies(b);
  CHECK_THROWS_AS(gto(b, f, std::nan("")), std::invalid_argument);
  f.values.resize(2);
  CHECK_THROWS_AS(gto(b, f, 1.0), std::invalid_argument);
}

TEST_CASE("every variant yields unitary operators across the graph grid") {
  for (const Graph& g : test_graphs()) {
    const SpectralBasis bl = laplacian_basis(g);
    const SpectralBasis ba = adjacency_basis(g);
    const FrequencySpec specs[] = {
        laplacian_sqrt_frequencies(bl),
        girault_frequencies(bl),
        gavili_uniform_frequencies(ba),
        gavili_phase_frequencies(ba, default_phases(g.size())),
    };
    const SpectralBasis* bases[] = {&bl, &bl, &ba, &ba};
    for (int v = 0; v < 4; ++v)
      for (double kappa : {0.5, 1.0, 2.7})
        CHECK(unitarity_defect(gto(*bases[v], specs[v], kappa).t) <= 1e-10);
  }
}

TEST_CASE("translations form a commuting one-parameter group") {
  for (const Graph& g : {make_cycle(8), make_grid(3, 3)}) {
    const SpectralBasis b = laplacian_basis(g);
    const FrequencySpec f = laplacian_sqrt_frequencies(b);
    const double k1 = 0.7, k2 = 1.9;
    const ComplexMatrix a = gto(b, f, k1).t;
    const ComplexMatrix c = gto(b, f, k2).t;
    const ComplexMatrix sum = gto(b, f, k1 + k2).t;
    CHECK(max_abs_diff(ComplexMatrix(a * c), sum) <= 1e-9);
    CHECK(max_abs_diff(ComplexMatrix(c * a), sum) <= 1e-9);
  }
}

TEST_CASE("translate preserves norms and fixes eigenvectors up to phase") {
  const SpectralBasis b = laplacian_basis(make_cycle(8));
  const FrequencySpec f = laplacian_sqrt_frequencies(b);
  const TranslationOperator op = gto(b, f, 1.3);
  const ComplexVector x = random_complex_vector(8, 99);
  CHECK(std::abs(translate(op, x).norm() - x.norm()) <= 1e-10);

  for (int k : {0, 2, 7}) {
    const ComplexVector shifted = translate(op, b.psi.col(k));
    const Complex phase = std::polar(1.0, -1.3 * f.values[k]);
    CHECK((shifted - phase * b.psi.col(k)).cwiseAbs().maxCoeff() <= 1e-10);
  }
  CHECK_THROWS_AS(translate(op, ComplexVector::Zero(5)), std::invalid_argument);
}

TEST_CASE("degenerate eigenspaces do not affect laplacian_sqrt and girault operators") {
  // C4 has a repeated eigenvalue lambda = 2; rotating the degenerate pair by
  // 45 degrees gives a second valid orthonormal basis. Operators built from
  // functions constant on eigenspaces must not see the difference.
  const Graph c4 = make_cycle(4);
  const SpectralBasis b1 = laplacian_basis(c4);
  REQUIRE(std::abs(b1.lambda[1] - 2.0) <= 1e-12);
  REQUIRE(std::abs(b1.lambda[2] - 2.0) <= 1e-12);

  SpectralBasis b2 = b1;
  const double c = std::cos(kPi / 4), s = std::sin(kPi / 4);
  const ComplexVector v1 = b1.psi.col(1), v2 = b1.psi.col(2);
  b2.psi.col(1) = c * v1 + s * v2;
  b2.psi.col(2) = -s * v1 + c * v2;
  REQUIRE(unitarity_defect(b2.psi) <= 1e-12);

  using SpecFn = FrequencySpec (*)(const SpectralBasis&);
  const SpecFn variants[] = {
      [](const SpectralBasis& b) { return laplacian_sqrt_frequencies(b); },
      [](const SpectralBasis& b) { return girault_frequencies(b); },
  };
  for (SpecFn make : variants) {
    const ComplexMatrix t1 = gto(b1, make(b1), 1.0).t;
    const ComplexMatrix t2 = gto(b2, make(b2), 1.0).t;
    CHECK(max_abs_diff(t1, t2) <= 1e-9);
  }
}

TEST_CASE("gavili_uniform on the DFT basis reproduces the circular shift") {
  // The discrete-time translation recovered as a graph translation: on the
  // cycle with the DFT basis, uniform phases at kappa = 1 give exactly the
  // shift permutation.
  for (int m : {4, 8}) {
    const SpectralBasis bd = dft_basis(m);
    const FrequencySpec f = gavili_uniform_frequencies(bd);
    const TranslationOperator op = gto(bd, f, 1.0);
    CHECK(max_abs_diff(op.t, shift_permutation(m).cast<Complex>()) <= 1e-10);
  }
}

// ============================================================================
// Power spectrum
// ============================================================================

TEST_CASE("power spectrum of an eigenvector is a coordinate vector") {
  const SpectralBasis b = laplacian_basis(make_cycle(8));
  for (int k : {0, 5}) {
    const RealVector ps = power_spectrum(b.psi.col(k), b);
    for (int j = 0; j < 8; ++j)
      CHECK(ps[j] == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-12));
  }
}

TEST_CASE("power spectrum is invariant under translation") {
  for (const Graph& g : test_graphs()) {
    const SpectralBasis b = laplacian_basis(g);
    const FrequencySpec f = laplacian_sqrt_frequencies(b);
    const TranslationOperator op = gto(b, f, 2.7);
    const ComplexVector x = random_complex_vector(g.size(), 7 + g.size());
    const RealVector before = power_spectrum(x, b);
    const RealVector after = power_spectrum(translate(op, x), b);
    CHECK((before - after).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("power spectrum of zero is zero") {
  const SpectralBasis b = laplacian_basis(make_path(3));
  CHECK(power_spectrum(ComplexVector::Zero(3), b).norm() == 0.0);
}
