#pragma once

#include <cstdint>
#include <random>

#include "isoshift/types.hpp"

namespace isoshift {

// Seeded draws with platform-independent value sequences: doubles come from
// raw mt19937_64 bits, not from std::uniform_real_distribution (whose output
// is implementation-defined).

inline double uniform01(std::mt19937_64& g) { return (g() >> 11) * 0x1.0p-53; }

/// Uniform in [-1, 1].
inline double uniform_sym(std::mt19937_64& g) { return 2.0 * uniform01(g) - 1.0; }

/// Standard normal via Box-Muller.
double gaussian(std::mt19937_64& g);

ComplexVector random_complex_vector(Eigen::Index n, std::uint64_t seed);
ComplexVector random_unit_vector(Eigen::Index n, std::uint64_t seed);
ComplexMatrix random_complex_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed);
RealMatrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed,
                                  double sigma = 1.0);

}  // namespace isoshift
