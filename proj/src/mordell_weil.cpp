#include "mwrat/mordell_weil.hpp"

#include "mwrat/errors.hpp"

#include <sstream>

namespace mwrat {

namespace {

IntMatrix trivial_generators(const Scenario& s) {
    std::vector<IntVector> rows{s.zero_section().coeffs(), s.fiber.coeffs()};
    for (const auto& c : s.all_components()) rows.push_back(c.coeffs());
    return IntMatrix::from_rows(rows);
}

Int abs_det(const IntMatrix& m) {
    Int d = determinant(m);
    return abs(d);
}

}  // namespace

IntegerLattice trivial_lattice(const Scenario& s) {
    return IntegerLattice::span(trivial_generators(s), intersection_form(s.model));
}

AbelianGroupInvariants mw_group(const Scenario& s) { return cokernel_invariants(trivial_generators(s)); }

AbelianGroupInvariants mw_torsion(const Scenario& s) {
    return saturate(trivial_generators(s), intersection_form(s.model)).quotient;
}

MWLReport mwl(const Scenario& s) {
    const GramMatrix ns_minus = intersection_form(s.model, FormSign::Negated);
    const IntegerLattice t = IntegerLattice::span(trivial_generators(s), ns_minus);
    MWLReport r;
    r.group = cokernel_invariants(t.basis());
    r.complement = orthogonal_complement(t, ns_minus);
    const RatMatrix g = to_rational(r.complement.gram().entries());
    if (!is_positive_definite(g) && g.rows() > 0)
        throw FormError("orthogonal complement of the trivial lattice is not positive definite");
    if (g.rows() == 0) {
        r.lattice_gram = RatMatrix();
        r.discriminant = 1;
        return r;
    }
    r.lattice_gram = dual_gram(g).gram;
    r.discriminant = determinant(r.lattice_gram);
    r.root_count = short_vectors(r.lattice_gram, Rat(2)).size();

    bool integral = true;
    IntMatrix ig(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (r.lattice_gram(i, j).get_den() != 1) integral = false;
            else ig(i, j) = r.lattice_gram(i, j).get_num();
        }
    if (integral) {
        const DnPlusIdentification id = identify_Dn_plus(GramMatrix(ig));
        if (id.accepted) r.identified_as = id.label;
    }
    return r;
}

DnPlusIdentification identify_Dn_plus(const GramMatrix& gram) {
    DnPlusIdentification id;
    const std::size_t n = gram.size();
    id.rank = n;
    const RatMatrix g = to_rational(gram.entries());
    if (n == 0) {
        id.failed_invariant = "rank: the zero lattice";
        return id;
    }
    if (!is_positive_definite(g)) throw FormError("identify_Dn_plus needs a positive definite lattice");
    id.determinant = gram.determinant();
    if (abs(id.determinant) != 1) {
        id.failed_invariant = "determinant: |det| = " + Int(abs(id.determinant)).get_str() + ", expected 1";
        return id;
    }

    std::vector<IntVector> roots;
    for (auto& v : short_vectors(g, Rat(2))) {
        const Int q = gram.pair(v, v);
        if (q == 1) {
            id.failed_invariant = "norm-1 vectors present";
            return id;
        }
        roots.push_back(std::move(v));
    }
    id.root_count = roots.size();

    const std::size_t nn = n;
    const std::size_t expected = 2 * nn * (nn - 1);
    const bool e8 = (n == 8 && id.root_count == 240);
    if (!e8 && id.root_count != expected) {
        id.failed_invariant = "root count: " + std::to_string(id.root_count) + ", expected " + std::to_string(expected);
        return id;
    }

    const IntMatrix span = hermite_normal_form(IntMatrix::from_rows(roots));
    if (span.rows() != n) {
        id.root_index = 0;
        id.failed_invariant = "roots span a sublattice of rank " + std::to_string(span.rows());
        return id;
    }
    id.root_index = abs_det(span);
    const IntMatrix root_gram = span * gram.entries() * span.transpose();
    id.root_determinant = abs_det(root_gram);
    if (e8) {
        if (id.root_index != 1) {
            id.failed_invariant = "240 roots that do not span the lattice";
            return id;
        }
        id.accepted = true;
        id.label = "D_8^+ = E_8";
        return id;
    }
    if (id.root_index != 2) {
        id.failed_invariant = "root sublattice index " + id.root_index.get_str() + ", expected 2";
        return id;
    }
    if (id.root_determinant != 4) {
        id.failed_invariant = "root sublattice determinant " + id.root_determinant.get_str() + ", expected 4";
        return id;
    }
    id.accepted = true;
    id.label = "D_" + std::to_string(n) + "^+";
    return id;
}

DnPlusIdentification identify_Dn_plus(const IntegerLattice& lattice) { return identify_Dn_plus(lattice.gram()); }

EquivalenceReport theorem_equivalence_check(const Scenario& s) {
    EquivalenceReport r;
    r.group = mw_group(s);
    r.mw_trivial = r.group.is_trivial();
    for (const auto& f : s.fibers) {
        const DualGraph graph = dual_graph(f.components);
        std::vector<Int> mult;
        try {
            mult = fiber_multiplicities(f.classes(), s.fiber);
        } catch (const NotAFiberError&) {
            mult.clear();
        }
        const FiberShape shape = classify_shape(graph, mult, s.model.genus);
        r.shapes.push_back(shape);
        if (shape.kind == ShapeKind::Condition2a) r.has_condition2a = true;
        if (s.model.genus >= 1 && contains_condition2b(graph, s.model.genus)) r.has_condition2b = true;
    }
    r.agree = (r.mw_trivial == r.has_condition2a) && (r.has_condition2a == r.has_condition2b);
    if (!r.agree) {
        std::ostringstream os;
        os << "scenario " << s.name << ": mw_trivial=" << (r.mw_trivial ? "true" : "false")
           << " condition2a=" << (r.has_condition2a ? "true" : "false") << " condition2b=" << (r.has_condition2b ? "true" : "false")
           << "; MW group " << r.group.to_string() << "; shapes:";
        for (const auto& sh : r.shapes) os << " [" << sh.to_string() << "]";
        r.certificate = os.str();
    }
    return r;
}

GluingCheck gluing_identity(const Scenario& s) {
    GluingCheck c;
    const GramMatrix form = intersection_form(s.model);
    const IntegerLattice t = trivial_lattice(s);
    c.applicable = mw_torsion(s).torsion.empty();
    const IntegerLattice l = orthogonal_complement(t, form);
    c.trivial_discriminant = t.discriminant();
    c.complement_discriminant = l.discriminant();
    IntMatrix both(t.rank() + l.rank(), form.size());
    for (std::size_t i = 0; i < t.rank(); ++i) both.set_row(i, t.basis().row(i));
    for (std::size_t i = 0; i < l.rank(); ++i) both.set_row(t.rank() + i, l.basis().row(i));
    if (both.rows() != form.size()) throw DegeneracyError("T + L does not have full rank");
    c.index = abs_det(both);
    c.holds = c.trivial_discriminant * c.complement_discriminant == c.index * c.index;
    return c;
}

}  // namespace mwrat
