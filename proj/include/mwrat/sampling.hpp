#pragma once

// Seeded random instances for property checks.

#include "mwrat/lattice.hpp"
#include "mwrat/pencil.hpp"

#include <random>

namespace mwrat {

using Rng = std::mt19937_64;

Int random_int(Rng& rng, long lo, long hi);
/// Numerator in [-9, 9], denominator in [1, 6].
Rat random_rational(Rng& rng, bool nonzero = false);

/// Random valid coefficients; each optional coefficient is zero with probability 1/4.
PencilCoefficients random_pencil(int genus, Rng& rng);

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);
/// B·Bᵀ / den for a random nonsingular integer B.
RatMatrix random_positive_gram(Rng& rng, std::size_t n);
DivisorClass random_class(Rng& rng, const SurfaceModel& m, long bound);

}  // namespace mwrat
