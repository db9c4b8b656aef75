#include "isoshift/random.hpp"

#include <cmath>
#include <numbers>

namespace isoshift {

double gaussian(std::mt19937_64& g) {
  // Box-Muller on raw uniform bits; u1 nudged away from 0 for the log.
  const double u1 = std::max(uniform01(g), 0x1.0p-53);
  const double u2 = uniform01(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexVector random_complex_vector(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  ComplexVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = uniform_sym(g);
    const double im = uniform_sym(g);
    out[i] = Complex(re, im);
  }
  return out;
}

ComplexVector random_unit_vector(Eigen::Index n, std::uint64_t seed) {
  ComplexVector v = random_complex_vector(n, seed);
  return v / v.norm();
}

ComplexMatrix random_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                                    std::uint64_t seed) {
  std::mt19937_64 g(seed);
  ComplexMatrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = uniform_sym(g);
      const double im = uniform_sym(g);
      out(i, j) = Complex(re, im);
    }
  return out;
}

RealMatrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                  std::uint64_t seed, double sigma) {
  std::mt19937_64 g(seed);
  RealMatrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = sigma * gaussian(g);
  return out;
}

}  // namespace isoshift
