#include "mwrat/errors.hpp"
#include "mwrat/lattice.hpp"
#include "mwrat/oracle.hpp"
#include "mwrat/sampling.hpp"

#include "doctest.h"

#include <algorithm>

using namespace mwrat;

namespace {

IntMatrix d4_gram() {
    return IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
}

bool divisibility_chain(const std::vector<Int>& diag) {
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        if (diag[i] == 0) {
            if (diag[i + 1] != 0) return false;
        } else if (diag[i + 1] % diag[i] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("intersection form values") {
    const auto m = SurfaceModel::make(2, 12, 2);
    CHECK(intersect(DivisorClass::delta(m), DivisorClass::delta(m)) == -2);
    CHECK(intersect(DivisorClass::delta(m), DivisorClass::gamma(m)) == 1);
    CHECK(intersect(DivisorClass::gamma(m), DivisorClass::gamma(m)) == 0);
    CHECK(intersect(DivisorClass::exceptional(m, 3), DivisorClass::exceptional(m, 3)) == -1);
    CHECK(intersect(DivisorClass::exceptional(m, 3), DivisorClass::exceptional(m, 4)) == 0);
    for (int g = 1; g <= 3; ++g) {
        const auto mg = SurfaceModel::maximal(g, g);
        const auto F = fiber_class(mg);
        CHECK(self_intersection(F) == 0);
        CHECK(intersect(canonical_class(mg), F) == 2 * g - 2);
    }
}

TEST_CASE("model mismatch is a dimension error") {
    const auto a = DivisorClass::delta(SurfaceModel::make(1, 8, 1));
    const auto b = DivisorClass::delta(SurfaceModel::make(2, 8, 1));
    CHECK_THROWS_AS(intersect(a, b), DimensionError);
    CHECK_THROWS_AS(a + b, DimensionError);
}

TEST_CASE("surface model validation") {
    CHECK_THROWS_AS(SurfaceModel::make(-1, 0, 1), InvalidModelError);
    CHECK_THROWS_AS(SurfaceModel::make(0, -1, 1), InvalidModelError);
    CHECK_THROWS_AS(SurfaceModel::make(0, 0, 0), InvalidModelError);
    CHECK(SurfaceModel::maximal(2, 2).picard_number() == 14);
    CHECK(SurfaceModel::maximal(2, 2).is_maximal());
    CHECK_FALSE(SurfaceModel::make(2, 11, 2).is_maximal());
}

TEST_CASE("canonical class") {
    const auto m1 = SurfaceModel::make(1, 0, 1);
    CHECK(self_intersection(canonical_class(m1)) == 8);
    const auto m2 = SurfaceModel::make(2, 12, 2);
    CHECK(self_intersection(canonical_class(m2)) == -4);
    CHECK(10 - self_intersection(canonical_class(m2)) == 14);
    const auto m0 = SurfaceModel::make(0, 0, 1);
    CHECK(canonical_class(m0).coeffs() == IntVector{-2, -2});
    CHECK(self_intersection(canonical_class(m0)) == 8);
}

TEST_CASE("fiber class") {
    const auto f22 = fiber_class(SurfaceModel::maximal(2, 2));
    CHECK(f22.delta_coeff() == 2);
    CHECK(f22.gamma_coeff() == 5);
    for (int i = 1; i <= 12; ++i) CHECK(f22.multiplicity(i) == 1);
    CHECK(self_intersection(f22) == 0);

    const auto f11 = fiber_class(SurfaceModel::maximal(1, 1));
    CHECK(f11.gamma_coeff() == 3);
    CHECK(adjunction_genus(f11) == 1);

    const auto m33 = SurfaceModel::maximal(3, 3);
    CHECK(fiber_class(m33).gamma_coeff() == 7);
    CHECK(intersect(canonical_class(m33), fiber_class(m33)) == 4);

    CHECK_THROWS_AS(fiber_class(SurfaceModel::make(1, 7, 1)), InvalidModelError);
}

TEST_CASE("adjunction genus") {
    CHECK(adjunction_genus(fiber_class(SurfaceModel::maximal(2, 2))) == 2);
    CHECK(adjunction_genus(DivisorClass::delta(SurfaceModel::make(2, 0, 1))) == 0);
    CHECK(adjunction_genus(DivisorClass::exceptional(SurfaceModel::make(1, 4, 1), 1)) == 0);
}

TEST_CASE("exceptional classes and printing") {
    const auto m = SurfaceModel::make(1, 3, 1);
    const auto e2 = DivisorClass::exceptional(m, 2);
    CHECK(e2.multiplicity(2) == -1);
    CHECK(DivisorClass::delta(m).to_string().find('D') != std::string::npos);
    CHECK_THROWS(DivisorClass(m, IntVector{1, 2}));
}

TEST_CASE("property: intersect is symmetric and bilinear") {
    Rng rng(20261015);
    const auto m = SurfaceModel::make(3, 8, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_class(rng, m, 6);
        const auto b = random_class(rng, m, 6);
        const auto c = random_class(rng, m, 6);
        const Int k = random_int(rng, -5, 5);
        REQUIRE(intersect(a, b) == intersect(b, a));
        REQUIRE(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
        REQUIRE(intersect(k * a, c) == k * intersect(a, c));
    }
}

TEST_CASE("property: Picard number identity 10 - K^2 = 2 + n") {
    for (int d = 0; d <= 5; ++d)
        for (int n = 0; n <= 20; ++n) {
            const auto m = SurfaceModel::make(d, n, 1);
            CHECK(10 - self_intersection(canonical_class(m)) == static_cast<long>(m.picard_number()));
        }
}

TEST_CASE("property: NS- is unimodular") {
    for (int d = 0; d <= 4; ++d)
        for (int n : {0, 1, 8, 12, 16}) {
            const auto g = intersection_form(SurfaceModel::make(d, n, 1), FormSign::Negated);
            CHECK(abs(g.determinant()) == 1);
            CHECK(g == intersection_form(SurfaceModel::make(d, n, 1)).negated());
        }
}

TEST_CASE("gram matrix must be symmetric") {
    CHECK_THROWS_AS(GramMatrix(IntMatrix{{1, 2}, {3, 4}}), DimensionError);
    CHECK_THROWS_AS(GramMatrix(IntMatrix{{1, 2}}), DimensionError);
}

TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal() == std::vector<Int>{1, 6});
    CHECK(smith_normal_form(IntMatrix::identity(4)).S == IntMatrix::identity(4));
    CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).diagonal() == std::vector<Int>{2, 4});
    CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).diagonal() == oracle::invariant_factors(IntMatrix{{2, 4}, {6, 8}}));
}

TEST_CASE("property: smith normal form") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const IntMatrix m = random_int_matrix(rng, r, c, 6);
        const SmithForm f = smith_normal_form(m);
        REQUIRE(f.U * m * f.V == f.S);
        REQUIRE(abs(determinant(f.U)) == 1);
        REQUIRE(abs(determinant(f.V)) == 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) REQUIRE(f.S(i, j) == 0);
        const auto diag = f.diagonal();
        for (const auto& x : diag) REQUIRE(x >= 0);
        REQUIRE(divisibility_chain(diag));
        std::vector<Int> nonzero;
        for (const auto& x : diag)
            if (x != 0) nonzero.push_back(x);
        REQUIRE(nonzero == oracle::invariant_factors(m));
    }
}

TEST_CASE("cokernel invariants") {
    CHECK(cokernel_invariants(IntMatrix{{2, 1}, {1, 1}}).is_trivial());
    const auto g = cokernel_invariants(IntMatrix{{2, 0}});
    CHECK(g.free_rank == 1);
    CHECK(g.torsion == std::vector<Int>{2});
    CHECK(g.to_string() == "Z + Z/2");
    CHECK(AbelianGroupInvariants{}.to_string() == "trivial");
}

TEST_CASE("hermite normal form drops zero rows") {
    const IntMatrix h = hermite_normal_form(IntMatrix{{2, 4}, {1, 2}, {0, 0}});
    CHECK(h.rows() == 1);
    CHECK(h.row(0) == IntVector{1, 2});
}

TEST_CASE("lattices") {
    const GramMatrix e(IntMatrix::identity(3));
    CHECK_THROWS(IntegerLattice(IntMatrix{{1, 0, 0}, {2, 0, 0}}, e));
    const auto span = IntegerLattice::span(IntMatrix{{1, 0, 0}, {2, 0, 0}, {0, 1, 1}}, e);
    CHECK(span.rank() == 2);
    CHECK(span.gram().entries() == span.basis() * e.entries() * span.basis().transpose());
    CHECK(IntegerLattice::from_gram(GramMatrix(d4_gram())).discriminant() == 4);
}

TEST_CASE("saturation") {
    const GramMatrix e(IntMatrix::identity(2));
    const auto already = saturate(IntMatrix{{1, 0}}, e);
    CHECK(already.quotient.is_trivial());
    const auto doubled = saturate(IntMatrix{{2, 0}}, e);
    CHECK(doubled.lattice.basis() == IntMatrix{{1, 0}});
    CHECK(doubled.quotient.torsion == std::vector<Int>{2});
    CHECK(doubled.quotient.free_rank == 0);
}

TEST_CASE("orthogonal complements") {
    const GramMatrix e(IntMatrix::identity(3));
    const auto full = IntegerLattice(IntMatrix::identity(3), e);
    CHECK(orthogonal_complement(full, e).rank() == 0);
    const auto line = IntegerLattice(IntMatrix{{1, 1, 0}}, e);
    const auto comp = orthogonal_complement(line, e);
    CHECK(comp.rank() == 2);
    CHECK(comp.discriminant() == 2);
}

TEST_CASE("property: orthogonal complements are saturated") {
    Rng rng(11);
    const auto m = SurfaceModel::maximal(1, 1);
    const auto form = intersection_form(m, FormSign::Negated);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 1 + rng() % 4;
        const IntMatrix gens = random_int_matrix(rng, k, m.picard_number(), 3);
        const auto sub = IntegerLattice::span(gens, form);
        if (sub.rank() == 0) continue;
        const auto comp = orthogonal_complement(sub, form);
        REQUIRE(comp.rank() + sub.rank() == m.picard_number());
        if (comp.rank() == 0) continue;
        REQUIRE(saturate(comp, form).quotient.is_trivial());
        for (std::size_t i = 0; i < comp.rank(); ++i)
            for (std::size_t j = 0; j < sub.rank(); ++j) REQUIRE(form.pair(comp.basis().row(i), sub.basis().row(j)) == 0);
    }
}

TEST_CASE("dual lattices") {
    const auto a1 = dual_gram(IntegerLattice::from_gram(GramMatrix(IntMatrix{{2}})));
    CHECK(a1.gram(0, 0) == Rat(1, 2));
    CHECK(a1.discriminant == 2);
    const auto e8like = dual_gram(IntegerLattice::from_gram(GramMatrix(IntMatrix::identity(5))));
    CHECK(abs(determinant(e8like.gram)) == 1);
    const auto d4 = dual_gram(IntegerLattice::from_gram(GramMatrix(d4_gram())));
    CHECK(d4.dual_discriminant == Rat(1, 4));
    CHECK_THROWS_AS(dual_gram(IntegerLattice::from_gram(GramMatrix(IntMatrix{{1, 1}, {1, 1}}))), DegeneracyError);
}

TEST_CASE("property: the dual of the dual is the original Gram") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix b = random_int_matrix(rng, 4, 4, 4);
        if (determinant(b) == 0) continue;
        const IntMatrix g = b * b.transpose();
        const RatMatrix back = dual_gram(dual_gram(to_rational(g)).gram).gram;
        REQUIRE(back == to_rational(g));
        REQUIRE(dual_gram(to_rational(g)).discriminant == abs(determinant(g)));
    }
}

TEST_CASE("short vectors") {
    const auto a1 = short_vectors(RatMatrix{{2}}, Rat(2));
    REQUIRE(a1.size() == 2);
    CHECK(a1[0] == IntVector{-1});
    CHECK(a1[1] == IntVector{1});
    CHECK(short_vectors(to_rational(d4_gram()), Rat(2)).size() == 24);
    CHECK_THROWS_AS(short_vectors(RatMatrix{{1, 2}, {2, 1}}, Rat(2)), FormError);
    CHECK_FALSE(is_positive_definite(RatMatrix{{0}}));
}

TEST_CASE("property: short vectors match the box oracle and are closed under negation") {
    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const RatMatrix g = random_positive_gram(rng, n);
        const Rat bound(static_cast<long>(1 + rng() % 6));
        if (oracle::box_size(g, bound) > 200000) continue;
        const auto fast = short_vectors(g, bound);
        REQUIRE(std::is_sorted(fast.begin(), fast.end()));
        REQUIRE(fast == sorted(oracle::short_vectors(g, bound)));
        for (const auto& v : fast) {
            IntVector neg(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
            REQUIRE(std::binary_search(fast.begin(), fast.end(), neg));
        }
    }
}
