#pragma once

#include "isoshift/types.hpp"

namespace isoshift {

/// Right-circular shift matrix [e_2, e_3, ..., e_M, e_1]: applying it maps
/// x[n] to x[(n-1) mod m].
RealMatrix shift_permutation(int m);

/// υ-translation in discrete time, Ψ_D·exp(-iυM_D)·Ψ_D*. Fractional υ gives
/// the bandlimited fractional shift; integer υ coincides with powers of
/// shift_permutation.
ComplexMatrix dt_translation(int m, double upsilon);

}  // namespace isoshift
