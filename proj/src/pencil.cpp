#include "mwrat/pencil.hpp"

#include "mwrat/errors.hpp"

namespace mwrat {

namespace {

SparsePoly t_() { return SparsePoly::variable(Var::T); }
SparsePoly y_() { return SparsePoly::variable(Var::Y); }

std::string key_str(int i, int j) { return "c_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

}  // namespace

PencilCoefficients::PencilCoefficients(int genus, std::map<Key, Rat> c) : genus_(genus) {
    if (genus < 1) throw CoefficientError("genus must be at least 1");
    for (auto& [k, v] : c) {
        const auto [i, j] = k;
        if (i < 0 || i > 2) throw CoefficientError(key_str(i, j) + ": i must be 0, 1 or 2");
        if (j < 0 || j > i * genus + 1)
            throw CoefficientError(key_str(i, j) + ": j must lie in 0.." + std::to_string(i * genus + 1));
        if (sgn(v) != 0) c_.emplace(k, v);
    }
    if (sgn(get(0, 0)) != 0) throw CoefficientError("c_{0,0} must vanish");
    if (sgn(get(1, 0)) != 0) throw CoefficientError("c_{1,0} must vanish");
    if (sgn(get(2, 0)) == 0) throw CoefficientError("c_{2,0} must be nonzero");
    if (sgn(get(0, 1)) == 0) throw CoefficientError("c_{0,1} must be nonzero");
}

Rat PencilCoefficients::get(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Rat(0) : it->second;
}

DoubleCoverCoefficients::DoubleCoverCoefficients(int genus, Rat b0_top, Rat b10, std::vector<Rat> b1)
    : genus_(genus), b0_top_(std::move(b0_top)), b10_(std::move(b10)), b1_(std::move(b1)) {
    if (genus < 1) throw CoefficientError("genus must be at least 1");
    if (sgn(b0_top_) == 0) throw CoefficientError("b_{0,2g+1} must be nonzero");
    if (sgn(b10_) == 0) throw CoefficientError("b_{1,0} must be nonzero");
    if (b1_.size() != static_cast<std::size_t>(2 * genus + 1))
        throw CoefficientError("expected " + std::to_string(2 * genus + 1) + " coefficients b_{1,j}, got " +
                               std::to_string(b1_.size()));
}

SparsePoly pencil_equation(const PencilCoefficients& pc) {
    const int g = pc.genus();
    SparsePoly sum;
    for (const auto& [k, v] : pc.values()) sum.add_term(exponent(0, k.first, k.second), v);
    return SparsePoly::monomial(exponent(0, 2, 2 * g + 1), Rat(1)) - t_() * sum;
}

SparsePoly discriminant_in_x(const SparsePoly& p) {
    const int d = p.degree_in(Var::X);
    if (d != 2) throw ShapeError("discriminant_in_x needs degree 2 in x, got " + std::to_string(d));
    const SparsePoly a = p.coefficient_in(Var::X, 2);
    const SparsePoly b = p.coefficient_in(Var::X, 1);
    const SparsePoly c = p.coefficient_in(Var::X, 0);
    return b * b - SparsePoly::constant(Rat(4)) * a * c;
}

BranchDecomposition branch_decomposition(const SparsePoly& disc, std::optional<int> genus) {
    if (disc.is_zero()) throw BranchShapeError("discriminant vanishes identically");
    if (disc.involves(Var::X) || disc.involves(Var::Z))
        throw BranchShapeError("discriminant must be a polynomial in t and y only");
    BranchDecomposition r;
    r.unit = 1;
    r.t_exp = disc.min_degree_in(Var::T);
    r.y_exp = disc.min_degree_in(Var::Y);
    if (r.t_exp != 1)
        throw BranchShapeError("discriminant must be divisible by t exactly once, found t^" + std::to_string(r.t_exp));
    if (r.y_exp != 1)
        throw BranchShapeError("discriminant must be divisible by y exactly once, found y^" + std::to_string(r.y_exp));
    r.branch = disc.divide_by_monomial(exponent(1, 0, 1));

    const int dt = r.branch.degree_in(Var::T);
    const int dy = r.branch.degree_in(Var::Y);
    if (dt != 1) throw BranchShapeError("B must have degree 1 in t, got " + std::to_string(dt));
    if (genus) {
        if (dy != 2 * *genus + 1)
            throw BranchShapeError("B must have degree " + std::to_string(2 * *genus + 1) + " in y, got " +
                                   std::to_string(dy));
        r.genus = *genus;
    } else {
        if (dy < 3 || dy % 2 == 0)
            throw BranchShapeError("deg_y B must be 2g+1 with g >= 1, got " + std::to_string(dy));
        r.genus = (dy - 1) / 2;
    }
    return r;
}

int contact_order_at_origin(const SparsePoly& branch) {
    if (branch.involves(Var::X) || branch.involves(Var::Z))
        throw BranchShapeError("B must be a polynomial in t and y only");
    const SparsePoly on_fiber = branch.evaluate(Var::T, Rat(0));
    if (on_fiber.is_zero()) throw InfiniteContactError("B(0, y) vanishes identically");
    const int ord = on_fiber.min_degree_in(Var::Y);
    if (ord == 0) throw BranchShapeError("B does not pass through the origin");
    return ord;
}

DoubleCoverCoefficients pencil_to_double_cover(const PencilCoefficients& pc) {
    const int g = pc.genus();
    const Rat c01 = pc.get(0, 1);
    SparsePoly s1;
    for (int j = 1; j <= g + 1; ++j) s1.add_term(exponent(0, 0, j - 1), pc.get(1, j));
    SparsePoly rest = s1 * s1;
    for (int j = 1; j <= 2 * g + 1; ++j) rest.add_term(exponent(0, 0, j - 1), -4 * c01 * pc.get(2, j));

    std::vector<Rat> b1;
    for (int j = 1; j <= 2 * g + 1; ++j) b1.push_back(rest.coefficient(exponent(0, 0, j - 1)));
    if (rest.degree_in(Var::Y) > 2 * g) throw InternalConsistencyError("b_{1,j} polynomial has excess degree");
    DoubleCoverCoefficients dc(g, 4 * c01, -4 * pc.get(2, 0) * c01, std::move(b1));

    const BranchDecomposition bd = branch_decomposition(discriminant_in_x(pencil_equation(pc)), g);
    const SparsePoly expected = bd.branch * bd.unit;
    if (double_cover_branch(dc) != expected)
        throw InternalConsistencyError("transferred coefficients do not reproduce the branch curve: " +
                                       double_cover_branch(dc).to_string() + " vs " + expected.to_string());
    return dc;
}

SparsePoly double_cover_branch(const DoubleCoverCoefficients& dc) {
    const int g = dc.genus();
    SparsePoly b = SparsePoly::monomial(exponent(0, 0, 2 * g + 1), dc.b0_top());
    b.add_term(exponent(1, 0, 0), dc.b10());
    for (int j = 1; j <= 2 * g + 1; ++j) b.add_term(exponent(1, 0, j), dc.b1(j));
    return b;
}

SparsePoly double_cover_equation(const DoubleCoverCoefficients& dc) {
    const SparsePoly z = SparsePoly::variable(Var::Z);
    return z * z - t_() * y_() * double_cover_branch(dc);
}

SparsePoly branch_germ(const DoubleCoverCoefficients& dc) { return t_() * y_() * double_cover_branch(dc); }

}  // namespace mwrat
