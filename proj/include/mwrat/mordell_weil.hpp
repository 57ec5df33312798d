#pragma once

#include "mwrat/fiber.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mwrat {

/// Span of (O), F and every declared reducible-fiber component.
IntegerLattice trivial_lattice(const Scenario& s);

/// NS / T.
AbelianGroupInvariants mw_group(const Scenario& s);

/// T̂ / T.
AbelianGroupInvariants mw_torsion(const Scenario& s);

struct MWLReport {
    AbelianGroupInvariants group;
    IntegerLattice complement;  ///< L = (T⁻)⊥ inside NS⁻
    RatMatrix lattice_gram;     ///< Gram of L* = MWL
    Rat discriminant;           ///< det of lattice_gram
    std::size_t root_count = 0; ///< nonzero vectors of L* with norm <= 2
    std::optional<std::string> identified_as;
};

/// Throws FormError when the complement is not positive definite.
MWLReport mwl(const Scenario& s);

struct DnPlusIdentification {
    bool accepted = false;
    std::size_t rank = 0;
    std::string label;             ///< "D_n^+" or "D_8^+ = E_8" when accepted
    std::string failed_invariant;  ///< empty when accepted
    Int determinant;
    std::size_t root_count = 0;
    Int root_index;                ///< [L : span of roots], 0 when the roots do not span a full-rank sublattice
    Int root_determinant;
};

/// Recognition of D_n^+ by determinant, root count and the index of the root sublattice.
/// A rejection names the first failing invariant.
DnPlusIdentification identify_Dn_plus(const IntegerLattice& lattice);
DnPlusIdentification identify_Dn_plus(const GramMatrix& gram);

struct EquivalenceReport {
    bool mw_trivial = false;         ///< NS/T is trivial
    bool has_condition2a = false;    ///< some fiber classifies as Condition2a
    bool has_condition2b = false;    ///< some fiber contains the Condition2b subgraph
    bool agree = false;              ///< the three predicates coincide
    std::vector<FiberShape> shapes;  ///< one per declared reducible fiber
    AbelianGroupInvariants group;
    std::string certificate;         ///< empty when the predicates agree
};

EquivalenceReport theorem_equivalence_check(const Scenario& s);

struct GluingCheck {
    bool applicable = false;  ///< torsion-free MW group
    bool holds = false;
    Int trivial_discriminant; ///< |det T⁻|, computed on a basis of T
    Int complement_discriminant;
    Int index;                ///< [NS : T ⊕ L]
};

/// |disc T| · |disc L| = [NS : T ⊕ L]² when MW has no torsion.
GluingCheck gluing_identity(const Scenario& s);

}  // namespace mwrat
