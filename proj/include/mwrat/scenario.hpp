#pragma once

// Concrete fibration configurations: fiber components, sections and the fiber
// class on a blown-up Hirzebruch surface.

#include "mwrat/lattice.hpp"

#include <string>
#include <vector>

namespace mwrat {

struct NamedClass {
    std::string name;
    DivisorClass cls;
};

/// The declared components of one reducible fiber.
struct FiberComponents {
    std::vector<NamedClass> components;

    std::vector<DivisorClass> classes() const;
};

struct Scenario {
    std::string name;
    SurfaceModel model;
    DivisorClass fiber;                  ///< class of a general fiber F
    std::vector<DivisorClass> sections;  ///< (−1)-sections; sections[0] is the zero section (O)
    std::vector<FiberComponents> fibers; ///< reducible fibers only

    const DivisorClass& zero_section() const;
    /// v_t for every declared reducible fiber.
    std::vector<int> component_counts() const;
    /// Every declared component, fiber by fiber.
    std::vector<DivisorClass> all_components() const;
};

/// Single reducible fiber with trivial Mordell–Weil group on Σ_g blown up 4g+4 times:
/// Θ_k = E_{4g+3−k} − E_{4g+4−k} (k = 0..4g+2), Θ_{4g+3} = Γ − E_1 − E_2,
/// Θ_{4g+4} = Δ − E_1, zero section E_{4g+4}.
Scenario scenario_trivial_mw(int genus);

/// Σ_g blown up 4g+4 times with every fiber irreducible; zero section E_{4g+4}.
Scenario scenario_all_irreducible(int genus);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::vector<std::string> failures() const;
};

/// F² = 0, K·F = 2g−2, ρ = 4g+6, (K+F)² = 0, sections, components and cross-fiber orthogonality.
ValidationReport validate_scenario(const Scenario& s);

/// Integer change of coordinates on NS. `matrix` maps old coordinate vectors to new ones.
struct BasisIsometry {
    SurfaceModel source;
    SurfaceModel target;
    IntMatrix matrix;

    DivisorClass apply(const DivisorClass& d) const;
    Scenario apply(const Scenario& s) const;
    BasisIsometry inverse() const;
    Int determinant() const { return mwrat::determinant(matrix); }
};

/// Elementary transformation Σ_g ⇢ Σ_{g+1} centred at the point blown up by E_1, which
/// must lie on Δ: the scenario has to declare a component of class Δ − E_1.
/// New basis: Δ' = Δ − E_1, Γ' = Γ, E_1' = Γ − E_1, E_i' = E_i.
BasisIsometry elementary_transformation(const Scenario& s);

}  // namespace mwrat
