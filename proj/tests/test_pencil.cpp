#include "mwrat/errors.hpp"
#include "mwrat/germ.hpp"
#include "mwrat/oracle.hpp"
#include "mwrat/pencil.hpp"
#include "mwrat/sampling.hpp"

#include "doctest.h"

using namespace mwrat;

namespace {

const SparsePoly t = SparsePoly::variable(Var::T);
const SparsePoly x = SparsePoly::variable(Var::X);
const SparsePoly y = SparsePoly::variable(Var::Y);
const SparsePoly z = SparsePoly::variable(Var::Z);

SparsePoly c(long v) { return SparsePoly::constant(Rat(v)); }

SparsePoly random_poly(Rng& rng) {
    SparsePoly p;
    const int terms = static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i) {
        const Exponent e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                         static_cast<int>(rng() % 2)};
        p.add_term(e, random_rational(rng));
    }
    return p;
}

PencilCoefficients simple_pencil(int genus, std::map<PencilCoefficients::Key, Rat> extra = {}) {
    std::map<PencilCoefficients::Key, Rat> c{{{2, 0}, Rat(1)}, {{0, 1}, Rat(1)}};
    for (const auto& [k, v] : extra) c[k] = v;
    return PencilCoefficients(genus, c);
}

}  // namespace

TEST_CASE("polynomial basics") {
    const SparsePoly p = x.pow(2) * y - c(3) * t;
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(exponent(0, 2, 1)) == 1);
    CHECK(p.coefficient(exponent(1, 0, 0)) == -3);
    CHECK(p.degree_in(Var::X) == 2);
    CHECK(p.total_degree() == 3);
    CHECK(p.min_degree_in(Var::Y) == 0);
    CHECK(p.order() == 1);
    CHECK(p.coefficient_in(Var::X, 2) == y);
    CHECK(p.involves(Var::T));
    CHECK_FALSE(p.involves(Var::Z));
    CHECK((p - p).is_zero());
    CHECK(SparsePoly().degree_in(Var::T) == -1);
    CHECK(p.substitute(Var::T, y) == x.pow(2) * y - c(3) * y);
    CHECK(p.evaluate(Var::X, Rat(2)) == c(4) * y - c(3) * t);
    CHECK(p.homogeneous_part(3) == x.pow(2) * y);
    CHECK((t * y.pow(2) + t.pow(2) * y).divide_by_monomial(exponent(1, 0, 1)) == y + t);
    CHECK_THROWS_AS((t + y).divide_by_monomial(exponent(1, 0, 0)), ShapeError);
    CHECK((x.pow(2) - t).to_string() == "x^2 - t");
}

TEST_CASE("polynomial composition") {
    std::array<std::optional<SparsePoly>, kVarCount> images;
    images[static_cast<int>(Var::T)] = t + y;
    images[static_cast<int>(Var::Y)] = t - y;
    CHECK((t * y).compose(images) == t.pow(2) - y.pow(2));
}

TEST_CASE("property: polynomial ring laws") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const SparsePoly a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
        REQUIRE((a + b) + d == a + (b + d));
        REQUIRE((a * b) * d == a * (b * d));
        REQUIRE(a * (b + d) == a * b + a * d);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a * c(1) == a);
        REQUIRE((a * c(0)).is_zero());
    }
}

TEST_CASE("pencil coefficient validation") {
    CHECK_NOTHROW(simple_pencil(1));
    CHECK_THROWS_AS(simple_pencil(1, {{{0, 0}, Rat(1)}}), CoefficientError);
    CHECK_THROWS_AS(simple_pencil(1, {{{1, 0}, Rat(1)}}), CoefficientError);
    CHECK_THROWS_AS(simple_pencil(1, {{{2, 0}, Rat(0)}}), CoefficientError);
    CHECK_THROWS_AS(simple_pencil(1, {{{0, 1}, Rat(0)}}), CoefficientError);
    CHECK_THROWS_AS(simple_pencil(1, {{{1, 3}, Rat(1)}}), CoefficientError);
    CHECK_THROWS_AS(simple_pencil(1, {{{3, 0}, Rat(1)}}), CoefficientError);
    CHECK_NOTHROW(simple_pencil(1, {{{2, 3}, Rat(1)}, {{1, 2}, Rat(1)}}));
    CHECK(simple_pencil(2).get(1, 4) == 0);
}

TEST_CASE("pencil equation") {
    const SparsePoly p = pencil_equation(simple_pencil(1));
    CHECK(p == x.pow(2) * y.pow(3) - t * (x.pow(2) + y));
    for (int g = 1; g <= 3; ++g) {
        const auto pc = simple_pencil(g, {{{2, 1}, Rat(3)}, {{2, 2}, Rat(-1, 2)}});
        const SparsePoly lead = pencil_equation(pc).coefficient_in(Var::X, 2);
        SparsePoly expected = y.pow(2 * g + 1);
        for (int j = 0; j <= 2 * g + 1; ++j) expected -= t * SparsePoly::constant(pc.get(2, j)) * y.pow(j);
        CHECK(lead == expected);
    }
}

TEST_CASE("discriminant in x") {
    CHECK(discriminant_in_x(x.pow(2) - t * y) == c(4) * t * y);
    CHECK_THROWS_AS(discriminant_in_x(x.pow(3) + t), ShapeError);
    CHECK_THROWS_AS(discriminant_in_x(t + y), ShapeError);
    const SparsePoly d = discriminant_in_x(pencil_equation(simple_pencil(1)));
    CHECK(d == c(4) * t * y * (y.pow(3) - t));
}

TEST_CASE("property: discriminant equals the factored form") {
    for (int g = 1; g <= 3; ++g) {
        Rng rng(static_cast<std::uint64_t>(77 + g));
        for (int trial = 0; trial < 100; ++trial) {
            const auto pc = random_pencil(g, rng);
            REQUIRE(discriminant_in_x(pencil_equation(pc)) == oracle::factored_discriminant(pc));
        }
    }
}

TEST_CASE("branch decomposition") {
    const auto pc = simple_pencil(1, {{{1, 1}, Rat(1)}});
    const auto bd = branch_decomposition(discriminant_in_x(pencil_equation(pc)));
    CHECK(bd.branch == c(4) * y.pow(3) - c(4) * t + t * y);
    CHECK(bd.unit == 1);
    CHECK(bd.t_exp == 1);
    CHECK(bd.y_exp == 1);
    CHECK(bd.genus == 1);
    CHECK(bd.branch.degree_in(Var::T) == 1);
    CHECK(bd.branch.degree_in(Var::Y) == 3);
    CHECK_THROWS_AS(branch_decomposition(t.pow(2) * y * (y.pow(3) - t)), BranchShapeError);
    CHECK_THROWS_AS(branch_decomposition(t * y * (y.pow(3) - t), 2), BranchShapeError);
    CHECK_THROWS_AS(branch_decomposition(t * y * (y.pow(3) - t.pow(2))), BranchShapeError);
}

TEST_CASE("contact order") {
    CHECK(contact_order_at_origin(y + t) == 1);
    CHECK(contact_order_at_origin(y.pow(2) + t * y + t) == 2);
    CHECK_THROWS_AS(contact_order_at_origin(t * y + t), InfiniteContactError);
    CHECK_THROWS_AS(contact_order_at_origin(y + c(1)), BranchShapeError);
}

TEST_CASE("property: branch bidegree and contact order") {
    for (int g = 1; g <= 3; ++g) {
        Rng rng(static_cast<std::uint64_t>(500 + g));
        for (int trial = 0; trial < 100; ++trial) {
            const auto pc = random_pencil(g, rng);
            const auto bd = branch_decomposition(discriminant_in_x(pencil_equation(pc)), g);
            REQUIRE(bd.branch.degree_in(Var::T) == 1);
            REQUIRE(bd.branch.degree_in(Var::Y) == 2 * g + 1);
            REQUIRE(contact_order_at_origin(bd.branch) == 2 * g + 1);
            REQUIRE(bd.branch.evaluate(Var::T, Rat(0)) == SparsePoly::constant(4 * pc.get(0, 1)) * y.pow(2 * g + 1));
        }
    }
}

TEST_CASE("double cover transfer") {
    const auto dc = pencil_to_double_cover(simple_pencil(1, {{{1, 1}, Rat(1)}}));
    CHECK(dc.b0_top() == 4);
    CHECK(dc.b10() == -4);
    CHECK(dc.b1(1) == 1);
    CHECK(dc.b1(2) == 0);
    CHECK(dc.b1(3) == 0);

    const DoubleCoverCoefficients simple(1, Rat(1), Rat(1), {Rat(0), Rat(0), Rat(0)});
    CHECK(double_cover_equation(simple) == z.pow(2) - t * y * (y.pow(3) + t));
    CHECK(double_cover_branch(simple) == y.pow(3) + t);
    CHECK(branch_germ(simple) == t * y * (y.pow(3) + t));

    CHECK_THROWS_AS(DoubleCoverCoefficients(1, Rat(0), Rat(1), {Rat(0), Rat(0), Rat(0)}), CoefficientError);
    CHECK_THROWS_AS(DoubleCoverCoefficients(1, Rat(1), Rat(0), {Rat(0), Rat(0), Rat(0)}), CoefficientError);
    CHECK_THROWS_AS(DoubleCoverCoefficients(1, Rat(1), Rat(1), {Rat(0)}), CoefficientError);
}

TEST_CASE("property: the double cover restricts to minus the discriminant") {
    for (int g = 1; g <= 3; ++g) {
        Rng rng(static_cast<std::uint64_t>(900 + g));
        for (int trial = 0; trial < 100; ++trial) {
            const auto pc = random_pencil(g, rng);
            const auto dc = pencil_to_double_cover(pc);
            REQUIRE(dc.genus() == g);
            const SparsePoly psi = double_cover_equation(dc);
            REQUIRE(psi.evaluate(Var::Z, Rat(0)) == -discriminant_in_x(pencil_equation(pc)));
        }
    }
}

TEST_CASE("property: the branch germ is D(4g+4)") {
    for (int g = 1; g <= 3; ++g) {
        Rng rng(static_cast<std::uint64_t>(1300 + g));
        for (int trial = 0; trial < 10; ++trial) {
            const auto dc = pencil_to_double_cover(random_pencil(g, rng));
            GermOptions opt;
            opt.step_budget = 8 * (g + 1);
            const auto cls = classify_ade_germ(branch_germ(dc), opt);
            REQUIRE(cls.kind == GermKind::D);
            REQUIRE(cls.k == 4 * g + 4);
        }
    }
}
