#include "mwrat/germ.hpp"

#include "mwrat/errors.hpp"

#include <limits>

namespace mwrat {

std::string GermClassification::to_string() const {
    switch (kind) {
        case GermKind::A: return "A(" + std::to_string(k) + ")";
        case GermKind::D: return "D(" + std::to_string(k) + ")";
        case GermKind::E: return "E(" + std::to_string(k) + ")";
        case GermKind::NotSimple: return "NotSimple";
        case GermKind::Unresolved: return "Unresolved";
    }
    return "NotSimple";
}

namespace {

constexpr int kNone = std::numeric_limits<int>::max();

class Reducer {
public:
    Reducer(SparsePoly f, const GermOptions& opt) : f_(std::move(f)), opt_(opt) {}

    GermClassification run();

private:
    SparsePoly f_;
    GermOptions opt_;
    GermClassification out_;
    int steps_ = 0;

    Exponent ex(int a, int b) const {
        Exponent e{};
        e[static_cast<std::size_t>(opt_.u)] = a;
        e[static_cast<std::size_t>(opt_.v)] = b;
        return e;
    }
    Rat coeff(int a, int b) const { return f_.coefficient(ex(a, b)); }
    SparsePoly mono(int a, int b, const Rat& c) const { return SparsePoly::monomial(ex(a, b), c); }
    int u_exp(const Exponent& e) const { return e[static_cast<std::size_t>(opt_.u)]; }
    int v_exp(const Exponent& e) const { return e[static_cast<std::size_t>(opt_.v)]; }

    /// u ↦ a·u + b·v, v ↦ c·u + d·v.
    bool linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
    /// u ↦ u + coef·v^k.
    bool shift_u(const Rat& coef, int k);
    bool spend(std::string log);

    /// Lowest pure power of v, kNone if absent.
    int lowest_pure_v() const;
    /// Term u·v^b with the smallest b among those with weight test `offending(b)`.
    int lowest_uv(int min_b) const;

    GermClassification finish(GermKind kind, int k) {
        out_.kind = kind;
        out_.k = k;
        return out_;
    }
    GermClassification unresolved() { return finish(GermKind::Unresolved, 0); }

    GermClassification corank_one();
    GermClassification corank_two();
};

bool Reducer::spend(std::string log) {
    if (steps_ >= opt_.step_budget) return false;
    ++steps_;
    out_.coordinate_changes.push_back(std::move(log));
    return true;
}

bool Reducer::linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    const std::string u = var_name(opt_.u);
    const std::string v = var_name(opt_.v);
    auto form = [&](const Rat& p, const Rat& q) {
        return "(" + p.get_str() + ")*" + u + " + (" + q.get_str() + ")*" + v;
    };
    if (!spend(u + " -> " + form(a, b) + ", " + v + " -> " + form(c, d))) return false;
    std::array<std::optional<SparsePoly>, kVarCount> images;
    images[static_cast<std::size_t>(opt_.u)] = mono(1, 0, a) + mono(0, 1, b);
    images[static_cast<std::size_t>(opt_.v)] = mono(1, 0, c) + mono(0, 1, d);
    f_ = f_.compose(images);
    return true;
}

bool Reducer::shift_u(const Rat& coef, int k) {
    const std::string u = var_name(opt_.u);
    const std::string v = var_name(opt_.v);
    if (!spend(u + " -> " + u + " + (" + coef.get_str() + ")*" + v + "^" + std::to_string(k))) return false;
    f_ = f_.substitute(opt_.u, mono(1, 0, Rat(1)) + mono(0, k, coef));
    return true;
}

int Reducer::lowest_pure_v() const {
    int best = kNone;
    for (const auto& [e, c] : f_.terms())
        if (u_exp(e) == 0) best = std::min(best, v_exp(e));
    return best;
}

int Reducer::lowest_uv(int min_b) const {
    int best = kNone;
    for (const auto& [e, c] : f_.terms())
        if (u_exp(e) == 1 && v_exp(e) >= min_b) best = std::min(best, v_exp(e));
    return best;
}

// f = c·u² + higher. Terms u·v^b with 2b <= m obstruct A_{m-1}, where v^m is the
// lowest pure v-power; they are removed by completing the square.
GermClassification Reducer::corank_one() {
    const Rat c = coeff(2, 0);
    for (;;) {
        const int m = lowest_pure_v();
        const int b = lowest_uv(1);
        if (b == kNone || (m != kNone && 2 * b > m)) {
            if (m == kNone) return finish(GermKind::NotSimple, 0);
            return finish(GermKind::A, m - 1);
        }
        const Rat a = coeff(1, b);
        if (!shift_u(-a / (2 * c), b)) return unresolved();
    }
}

// Zero quadratic part: classify by the cubic form.
GermClassification Reducer::corank_two() {
    const SparsePoly cubic = f_.homogeneous_part(3);
    if (cubic.is_zero()) return finish(GermKind::NotSimple, 0);
    Rat a = coeff(3, 0), b = coeff(2, 1), c = coeff(1, 2), d = coeff(0, 3);
    const Rat disc = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
    if (sgn(disc) != 0) return finish(GermKind::D, 4);

    if (sgn(a) == 0) {
        if (sgn(d) != 0 || sgn(c) != 0) {
            // Swap u and v to bring a nonzero coefficient to u³ or u²v.
            if (!linear(Rat(0), Rat(1), Rat(1), Rat(0))) return unresolved();
            a = coeff(3, 0), b = coeff(2, 1), c = coeff(1, 2), d = coeff(0, 3);
        }
    }
    if (sgn(a) != 0) {
        const Rat h = b * b - 3 * a * c;
        if (sgn(h) == 0) {
            // a(u − r v)³: put U = u − r v.
            const Rat r = -b / (3 * a);
            if (!linear(Rat(1), r, Rat(0), Rat(1))) return unresolved();
        } else {
            // a(u − r v)²(u − s v): put U = u − r v, V = u − s v.
            const Rat r = (9 * a * d - b * c) / (2 * h);
            const Rat s = -b / a - 2 * r;
            const Rat w = r - s;
            // u = U + r·v, v = (V − U)/(r − s).
            if (!linear(Rat(1) - r / w, r / w, Rat(-1) / w, Rat(1) / w)) return unresolved();
        }
    }

    const SparsePoly normal = f_.homogeneous_part(3);
    const Rat lead = coeff(2, 1);
    if (normal == mono(2, 1, lead) && sgn(lead) != 0) {
        // c·u²v: obstructions are u·v^b with 2b <= m + 1.
        for (;;) {
            const int m = lowest_pure_v();
            const int bb = lowest_uv(3);
            if (bb == kNone || (m != kNone && 2 * bb > m + 1)) {
                if (m == kNone) return finish(GermKind::NotSimple, 0);
                return finish(GermKind::D, m + 1);
            }
            const Rat coef = coeff(1, bb);
            if (!shift_u(-coef / (2 * lead), bb - 1)) return unresolved();
        }
    }
    if (normal == mono(3, 0, coeff(3, 0)) && sgn(coeff(3, 0)) != 0) {
        if (sgn(coeff(0, 4)) != 0) return finish(GermKind::E, 6);
        if (sgn(coeff(1, 3)) != 0) return finish(GermKind::E, 7);
        if (sgn(coeff(0, 5)) != 0) return finish(GermKind::E, 8);
        return finish(GermKind::NotSimple, 0);
    }
    throw InternalConsistencyError("cubic normalization failed: " + normal.to_string());
}

GermClassification Reducer::run() {
    for (std::size_t i = 0; i < kVarCount; ++i) {
        const Var w = static_cast<Var>(i);
        if (w != opt_.u && w != opt_.v && f_.involves(w))
            throw ShapeError(std::string("germ involves the extra variable ") + var_name(w));
    }
    if (opt_.u == opt_.v) throw ShapeError("germ variables must differ");
    if (f_.is_zero()) throw ShapeError("the zero germ is not a curve");
    if (sgn(coeff(0, 0)) != 0) throw ShapeError("germ does not vanish at the origin");
    if (f_.order() < 2) throw ShapeError("germ is smooth (order 1) at the origin");

    const Rat a = coeff(2, 0), b = coeff(1, 1), c = coeff(0, 2);
    const Rat h = b * b - 4 * a * c;
    if (f_.order() == 2 && sgn(h) != 0) return finish(GermKind::A, 1);
    if (f_.order() == 2) {
        if (sgn(a) != 0) {
            // a(u + b/(2a) v)².
            if (!linear(Rat(1), -b / (2 * a), Rat(0), Rat(1))) return unresolved();
        } else {
            if (!linear(Rat(0), Rat(1), Rat(1), Rat(0))) return unresolved();
        }
        return corank_one();
    }
    return corank_two();
}

}  // namespace

GermClassification classify_ade_germ(const SparsePoly& f, const GermOptions& options) {
    return Reducer(f, options).run();
}

}  // namespace mwrat
