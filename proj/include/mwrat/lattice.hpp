#pragma once

// Néron–Severi bookkeeping on blow-ups of Hirzebruch surfaces and exact integer
// lattice algebra (Smith form, saturation, orthogonal complements, duals,
// short-vector enumeration).
//
// Coordinates on NS(X) are fixed globally as (Δ, Γ, E_1, ..., E_n): a class
// aΔ + bΓ − Σ m_i E_i is stored as the vector (a, b, m_1, ..., m_n).

#include "mwrat/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mwrat {

/// Blow-up of the Hirzebruch surface Σ_d at n points, carrying a fibration of genus g.
struct SurfaceModel {
    int degree = 0;   ///< d
    int blowups = 0;  ///< n
    int genus = 1;    ///< g

    /// Validates d >= 0, n >= 0, g >= 1.
    static SurfaceModel make(int degree, int blowups, int genus);
    /// The model with n = 4g + 4 blow-ups (Picard number 4g + 6).
    static SurfaceModel maximal(int degree, int genus) { return make(degree, 4 * genus + 4, genus); }

    std::size_t picard_number() const { return 2 + static_cast<std::size_t>(blowups); }
    bool is_maximal() const { return blowups == 4 * genus + 4; }

    bool operator==(const SurfaceModel&) const = default;
};

class DivisorClass {
public:
    DivisorClass(SurfaceModel model, IntVector coeffs);

    static DivisorClass zero(const SurfaceModel& m);
    static DivisorClass delta(const SurfaceModel& m);
    static DivisorClass gamma(const SurfaceModel& m);
    /// The exceptional class E_i, 1-based.
    static DivisorClass exceptional(const SurfaceModel& m, int i);

    const SurfaceModel& model() const { return model_; }
    const IntVector& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    const Int& delta_coeff() const { return coeffs_[0]; }
    const Int& gamma_coeff() const { return coeffs_[1]; }
    /// m_i in aΔ + bΓ − Σ m_i E_i, 1-based.
    const Int& multiplicity(int i) const { return coeffs_.at(static_cast<std::size_t>(i) + 1); }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    friend DivisorClass operator*(const Int& k, const DivisorClass& d);

    bool operator==(const DivisorClass& o) const { return model_ == o.model_ && coeffs_ == o.coeffs_; }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }

    /// Human-readable form such as "2D + 5G - E1 - E2".
    std::string to_string() const;

private:
    void require_same_model(const DivisorClass& o) const;

    SurfaceModel model_;
    IntVector coeffs_;
};

/// Square symmetric integer matrix.
class GramMatrix {
public:
    GramMatrix() = default;
    /// Throws DimensionError if `entries` is not square and symmetric.
    explicit GramMatrix(IntMatrix entries);

    const IntMatrix& entries() const { return entries_; }
    std::size_t size() const { return entries_.rows(); }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    GramMatrix negated() const;
    Int determinant() const { return mwrat::determinant(entries_); }
    /// x^T G y
    Int pair(const IntVector& x, const IntVector& y) const;

    bool operator==(const GramMatrix& o) const { return entries_ == o.entries_; }

private:
    IntMatrix entries_;
};

/// Which sign of the intersection form a computation uses.
enum class FormSign {
    Intersection,  ///< the intersection form on NS(X)
    Negated,       ///< (−1) times the intersection form, NS(X)⁻
};

/// Intersection form in the (Δ, Γ, E_1..E_n) basis: Δ² = −d, Δ·Γ = 1, Γ² = 0, E_i² = −1.
GramMatrix intersection_form(const SurfaceModel& model, FormSign sign = FormSign::Intersection);

/// Throws DimensionError when the models differ.
Int intersect(const DivisorClass& a, const DivisorClass& b);
Int self_intersection(const DivisorClass& a);

/// K = −2Δ − (d+2)Γ + Σ E_i.
DivisorClass canonical_class(const SurfaceModel& model);
/// F = 2Δ + (d+g+1)Γ − Σ E_i; requires n = 4g + 4.
DivisorClass fiber_class(const SurfaceModel& model);
/// (D² + K·D)/2 + 1; ParityError when D² + K·D is odd.
Int adjunction_genus(const DivisorClass& d);

struct AbelianGroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  ///< invariant factors > 1, each dividing the next

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroupInvariants&) const = default;
    /// "trivial", "Z^12", "Z^3 + Z/2 + Z/4", ...
    std::string to_string() const;
};

struct SmithForm {
    IntMatrix U;  ///< unimodular, rows × rows
    IntMatrix S;  ///< diagonal, s_1 | s_2 | ...
    IntMatrix V;  ///< unimodular, cols × cols

    std::size_t rank() const;
    std::vector<Int> diagonal() const;
};

/// U·M·V = S with non-negative diagonal forming a divisibility chain.
SmithForm smith_normal_form(const IntMatrix& m);

/// Invariants of Z^cols / (row span of `embedding`).
AbelianGroupInvariants cokernel_invariants(const IntMatrix& embedding);

/// Row-style Hermite normal form; zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

class IntegerLattice {
public:
    IntegerLattice() = default;
    /// Rows of `basis` must be linearly independent; gram = basis · form · basisᵀ.
    IntegerLattice(IntMatrix basis, const GramMatrix& ambient_form);
    /// Lattice spanned by possibly dependent generators.
    static IntegerLattice span(const IntMatrix& generators, const GramMatrix& ambient_form);
    /// Lattice given by a Gram matrix alone, with the standard basis of Z^r.
    static IntegerLattice from_gram(const GramMatrix& gram);

    std::size_t rank() const { return basis_.rows(); }
    std::size_t ambient_rank() const { return ambient_rank_; }
    const IntMatrix& basis() const { return basis_; }
    const GramMatrix& gram() const { return gram_; }
    Int discriminant() const;  ///< |det gram|, 1 for rank 0

private:
    std::size_t ambient_rank_ = 0;
    IntMatrix basis_;
    GramMatrix gram_;
};

/// Saturated lattice {x : x·form·bᵀ = 0 for every basis row b}, with induced Gram.
IntegerLattice orthogonal_complement(const IntegerLattice& sub, const GramMatrix& ambient_form);

struct Saturation {
    IntegerLattice lattice;          ///< (T ⊗ Q) ∩ Z^N
    AbelianGroupInvariants quotient; ///< saturation / sub (finite)
};
Saturation saturate(const IntegerLattice& sub, const GramMatrix& ambient_form);
/// Saturation computed from raw generators.
Saturation saturate(const IntMatrix& generators, const GramMatrix& ambient_form);

struct DualLattice {
    RatMatrix gram;           ///< G⁻¹ in the dual basis
    Int discriminant;         ///< |det G| of the input lattice
    Rat dual_discriminant;    ///< |det G⁻¹| = 1 / discriminant
};
/// Throws DegeneracyError on a singular Gram.
DualLattice dual_gram(const IntegerLattice& lattice);
DualLattice dual_gram(const RatMatrix& gram);

/// Exact LDLᵀ: q(x) = Σ_i d_i (x_i + Σ_{j>i} mu(i,j) x_j)².
struct LdlFactor {
    RatVector d;
    RatMatrix mu;
};
/// std::nullopt unless the form is positive definite.
std::optional<LdlFactor> positive_ldl(const RatMatrix& gram);
bool is_positive_definite(const RatMatrix& gram);

/// All nonzero integer vectors v with vᵀ G v <= bound, sorted lexicographically.
/// Throws FormError unless G is positive definite.
std::vector<IntVector> short_vectors(const RatMatrix& gram, const Rat& bound);
std::vector<IntVector> short_vectors(const IntegerLattice& lattice, const Rat& bound);

}  // namespace mwrat
