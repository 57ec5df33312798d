#pragma once

// The genus-g pencil x²y^{2g+1} = t Σ c_{i,j} x^i y^j, its discriminant in x, the branch
// curve B of the associated double cover of Σ_0, and the coefficient transfer to
// the double-cover equation z² = t y B.

#include "mwrat/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace mwrat {

class PencilCoefficients {
public:
    using Key = std::pair<int, int>;

    /// Validates i ∈ {0,1,2}, 0 <= j <= i·g + 1, c_{1,0} = c_{0,0} = 0, c_{2,0} c_{0,1} != 0.
    /// Throws CoefficientError.
    PencilCoefficients(int genus, std::map<Key, Rat> c);

    int genus() const { return genus_; }
    const std::map<Key, Rat>& values() const { return c_; }
    Rat get(int i, int j) const;

private:
    int genus_;
    std::map<Key, Rat> c_;
};

class DoubleCoverCoefficients {
public:
    /// `b1[j-1]` holds b_{1,j} for j = 1..2g+1. Throws CoefficientError on a zero
    /// b_{0,2g+1} or b_{1,0}, or on a wrong number of b_{1,j}.
    DoubleCoverCoefficients(int genus, Rat b0_top, Rat b10, std::vector<Rat> b1);

    int genus() const { return genus_; }
    const Rat& b0_top() const { return b0_top_; }
    const Rat& b10() const { return b10_; }
    const std::vector<Rat>& b1() const { return b1_; }
    /// b_{1,j}, j in 1..2g+1.
    const Rat& b1(int j) const { return b1_.at(static_cast<std::size_t>(j - 1)); }

    bool operator==(const DoubleCoverCoefficients&) const = default;

private:
    int genus_;
    Rat b0_top_;
    Rat b10_;
    std::vector<Rat> b1_;
};

/// x² y^{2g+1} − t Σ c_{i,j} x^i y^j.
SparsePoly pencil_equation(const PencilCoefficients& pc);

/// b² − 4ac for p = a x² + b x + c. Throws ShapeError unless deg_x p = 2.
SparsePoly discriminant_in_x(const SparsePoly& p);

struct BranchDecomposition {
    Rat unit;
    int t_exp = 0;
    int y_exp = 0;
    SparsePoly branch;  ///< B, not divisible by t or y
    int genus = 0;      ///< from deg_y B = 2g+1
};

/// disc = unit · t · y · B with B of bidegree (1, 2g+1). `genus`, when given, fixes the
/// expected y-degree. Throws BranchShapeError.
BranchDecomposition branch_decomposition(const SparsePoly& disc, std::optional<int> genus = std::nullopt);

/// ord_y B(0, y). Throws InfiniteContactError when B(0, y) vanishes identically and
/// BranchShapeError when B(0, 0) != 0.
int contact_order_at_origin(const SparsePoly& branch);

/// Throws InternalConsistencyError if the re-expanded branch curve differs from the
/// one obtained through the discriminant.
DoubleCoverCoefficients pencil_to_double_cover(const PencilCoefficients& pc);

/// b_{0,2g+1} y^{2g+1} + b_{1,0} t + t y Σ b_{1,j} y^{j−1}.
SparsePoly double_cover_branch(const DoubleCoverCoefficients& dc);

/// ψ = z² − t y B.
SparsePoly double_cover_equation(const DoubleCoverCoefficients& dc);

/// Local equation t·y·B(t, y) of the branch curve at the origin.
SparsePoly branch_germ(const DoubleCoverCoefficients& dc);

}  // namespace mwrat
