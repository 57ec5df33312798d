#include "mwrat/errors.hpp"
#include "mwrat/germ.hpp"
#include "mwrat/sampling.hpp"

#include "doctest.h"

using namespace mwrat;

namespace {

const SparsePoly t = SparsePoly::variable(Var::T);
const SparsePoly y = SparsePoly::variable(Var::Y);

SparsePoly c(const Rat& v) { return SparsePoly::constant(v); }

std::string classify(const SparsePoly& f, int budget = 64) {
    GermOptions o;
    o.step_budget = budget;
    return classify_ade_germ(f, o).to_string();
}

SparsePoly linear_change(const SparsePoly& f, Rng& rng) {
    Rat a, b, d, e;
    do {
        a = random_rational(rng);
        b = random_rational(rng);
        d = random_rational(rng);
        e = random_rational(rng);
    } while (a * e - b * d == 0);
    std::array<std::optional<SparsePoly>, kVarCount> images;
    images[static_cast<int>(Var::T)] = c(a) * t + c(b) * y;
    images[static_cast<int>(Var::Y)] = c(d) * t + c(e) * y;
    return f.compose(images);
}

}  // namespace

TEST_CASE("simple germs") {
    CHECK(classify(t.pow(2) + y.pow(2)) == "A(1)");
    CHECK(classify(t * y) == "A(1)");
    CHECK(classify(t.pow(2) + y.pow(5)) == "A(4)");
    CHECK(classify(y * (t.pow(2) + y.pow(2))) == "D(4)");
    CHECK(classify(y * (t.pow(2) + y.pow(4))) == "D(6)");
    CHECK(classify(t.pow(3) + y.pow(4)) == "E(6)");
    CHECK(classify(t.pow(3) + t * y.pow(3)) == "E(7)");
    CHECK(classify(t.pow(3) + y.pow(5)) == "E(8)");
}

TEST_CASE("branch germs of the double cover") {
    for (int g = 1; g <= 3; ++g) {
        const SparsePoly f = t.pow(2) * y + t * y.pow(2 * g + 2);
        const auto cls = classify_ade_germ(f, GermOptions{Var::T, Var::Y, 8 * (g + 1)});
        CHECK(cls.kind == GermKind::D);
        CHECK(cls.k == 4 * g + 4);
        CHECK_FALSE(cls.coordinate_changes.empty());
        CHECK(cls.to_string() == "D(" + std::to_string(4 * g + 4) + ")");
    }
}

TEST_CASE("non-simple germs") {
    CHECK(classify(t.pow(2)) == "NotSimple");
    CHECK(classify(t.pow(3) + y.pow(6)) == "NotSimple");
    CHECK(classify(t.pow(4) + y.pow(4)) == "NotSimple");
    CHECK(classify((t + y.pow(2)).pow(2)) == "NotSimple");
    CHECK(classify(y * t.pow(2)) == "NotSimple");
}

TEST_CASE("step budget") {
    const SparsePoly f = t.pow(2) + c(2) * t * y.pow(2) + c(2) * t * y.pow(3) + y.pow(9);
    const auto full = classify_ade_germ(f);
    REQUIRE(full.coordinate_changes.size() >= 2);
    const auto limited = classify_ade_germ(f, GermOptions{Var::T, Var::Y, 1});
    CHECK(limited.kind == GermKind::Unresolved);
    CHECK(limited.to_string() == "Unresolved");
    CHECK(limited != full);
}

TEST_CASE("germ input errors") {
    const SparsePoly x = SparsePoly::variable(Var::X);
    CHECK_THROWS_AS(classify_ade_germ(t.pow(2) + x.pow(2)), ShapeError);
    CHECK_THROWS_AS(classify_ade_germ(t.pow(2) + c(1)), ShapeError);
    CHECK_THROWS_AS(classify_ade_germ(t + y.pow(2)), ShapeError);
    CHECK_THROWS_AS(classify_ade_germ(SparsePoly()), ShapeError);
}

TEST_CASE("custom local coordinates") {
    const SparsePoly x = SparsePoly::variable(Var::X);
    CHECK(classify_ade_germ(x.pow(2) + y.pow(3), GermOptions{Var::X, Var::Y, 64}).to_string() == "A(2)");
}

TEST_CASE("property: the type is invariant under linear coordinate changes") {
    const std::vector<std::pair<SparsePoly, std::string>> germs{
        {t.pow(2) + y.pow(2), "A(1)"},
        {t.pow(2) + y.pow(7), "A(6)"},
        {y * (t.pow(2) + y.pow(3)), "D(5)"},
        {t.pow(2) * y + t * y.pow(6), "D(12)"},
        {t.pow(3) + y.pow(4), "E(6)"},
        {t.pow(3) + t * y.pow(3), "E(7)"},
        {t.pow(3) + y.pow(5), "E(8)"},
        {t.pow(3) + y.pow(6), "NotSimple"},
    };
    Rng rng(99);
    for (const auto& [f, expected] : germs) {
        for (int trial = 0; trial < 8; ++trial) {
            const SparsePoly moved = linear_change(f, rng);
            CAPTURE(moved.to_string());
            REQUIRE(classify(moved) == expected);
        }
    }
}
