#pragma once

// Deliberately naive reference implementations used to cross-check the fast paths.

#include "mwrat/pencil.hpp"

#include <vector>

namespace mwrat::oracle {

/// Invariant factors from determinantal divisors (gcd of all k×k minors), zeros omitted.
std::vector<Int> invariant_factors(const IntMatrix& m);

/// Every nonzero v with vᵀGv <= bound, from the box |v_i| <= sqrt(bound · (G⁻¹)_ii).
std::vector<IntVector> short_vectors(const RatMatrix& gram, const Rat& bound);

/// Number of integer points in the box that short_vectors scans.
Int box_size(const RatMatrix& gram, const Rat& bound);

/// Nonzero vectors of norm <= 2 in the complement of ⟨E_{4g+4}, F⟩ inside NS⁻ of the
/// maximal Σ_g model, by enumeration in NS coordinates.
std::size_t complement_root_count(int genus);

/// t·y·(4c_{0,1}y^{2g+1} − 4c_{2,0}c_{0,1}t − 4c_{0,1}t Σ_{j≥1} c_{2,j}y^j + t y (Σ_j c_{1,j}y^{j−1})²).
SparsePoly factored_discriminant(const PencilCoefficients& pc);

/// The Θ-Gram matrix of the Condition2a fiber written out entry by entry.
IntMatrix condition2a_gram(int genus);

}  // namespace mwrat::oracle
