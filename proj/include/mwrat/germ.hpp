#pragma once

// Simple (ADE) plane-curve singularity recognition by exact normal-form reduction.

#include "mwrat/poly.hpp"

#include <string>
#include <vector>

namespace mwrat {

enum class GermKind { A, D, E, NotSimple, Unresolved };

struct GermClassification {
    GermKind kind = GermKind::NotSimple;
    int k = 0;  ///< index of A_k, D_k or E_k; 0 otherwise
    std::vector<std::string> coordinate_changes;

    std::string to_string() const;  ///< "A(1)", "D(8)", "E(6)", "NotSimple", "Unresolved"
    bool operator==(const GermClassification& o) const { return kind == o.kind && k == o.k; }
};

struct GermOptions {
    Var u = Var::T;
    Var v = Var::Y;
    int step_budget = 64;  ///< substitutions allowed before giving up with Unresolved
};

/// Requires f to involve only `u` and `v`, f(0,0) = 0 and order >= 2; throws ShapeError otherwise.
GermClassification classify_ade_germ(const SparsePoly& f, const GermOptions& options = {});

}  // namespace mwrat
