#include "mwrat/catalog.hpp"
#include "mwrat/errors.hpp"
#include "mwrat/fiber.hpp"
#include "mwrat/mordell_weil.hpp"

#include "doctest.h"

using namespace mwrat;

TEST_CASE("dual graph of the trivial-MW fiber") {
    const Scenario s = scenario_trivial_mw(1);
    const DualGraph g = dual_graph(s.fibers[0].components);
    CHECK(g.size() == 9);
    CHECK(g.is_tree());
    CHECK(g.is_connected());
    int trivalent = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        CHECK(g.degree(v) <= 3);
        if (g.degree(v) == 3) ++trivalent;
    }
    CHECK(trivalent == 1);
    CHECK(g.weight(7, 8) == 0);
    CHECK(g.weight(6, 8) == 1);
    CHECK(g.nodes[0].label == "Theta_0");
}

TEST_CASE("dual graph edge weights and errors") {
    const auto m = SurfaceModel::maximal(1, 1);
    const auto D = DivisorClass::delta(m), G = DivisorClass::gamma(m);
    const DualGraph twice = dual_graph(std::vector<DivisorClass>{D, Int(2) * G});
    REQUIRE(twice.edges.size() == 1);
    CHECK(twice.edges[0].multiplicity == 2);
    CHECK_FALSE(dual_graph(std::vector<DivisorClass>{D, G, D + Int(2) * G}).is_tree());
    const auto E1 = DivisorClass::exceptional(m, 1), E2 = DivisorClass::exceptional(m, 2);
    CHECK_THROWS_AS(dual_graph(std::vector<DivisorClass>{E1 - E2, E1}), InvalidComponentError);
}

TEST_CASE("fiber multiplicities") {
    const Scenario s1 = scenario_trivial_mw(1);
    CHECK(fiber_multiplicities(s1.fibers[0].classes(), s1.fiber) == std::vector<Int>{1, 2, 3, 4, 5, 6, 4, 3, 2});
    for (int g = 1; g <= 3; ++g) {
        const Scenario s = scenario_trivial_mw(g);
        const auto m = fiber_multiplicities(s.fibers[0].classes(), s.fiber);
        CHECK(m[4 * g + 2] == 2 * g + 2);
        CHECK(m[4 * g + 3] == 2 * g + 1);
        CHECK(m[4 * g + 4] == 2);
    }
    CHECK(fiber_multiplicities({s1.fiber}, s1.fiber) == std::vector<Int>{1});
}

TEST_CASE("fiber multiplicity failures") {
    const Scenario s = scenario_trivial_mw(1);
    const auto& F = s.fiber;
    const auto m = s.model;
    const auto E1 = DivisorClass::exceptional(m, 1), E2 = DivisorClass::exceptional(m, 2);
    CHECK_THROWS_AS(fiber_multiplicities({}, F), NotAFiberError);
    CHECK_THROWS_AS(fiber_multiplicities({E1 - E2}, F), NotAFiberError);
    CHECK_THROWS_AS(fiber_multiplicities({E1 - E2, E1 - E2, F - E1 + E2}, F), NotAFiberError);
    CHECK_THROWS_AS(fiber_multiplicities({Int(2) * F}, F), NotAFiberError);
    CHECK_THROWS_AS(fiber_multiplicities({F + E1 - E2, E1 - E2}, F), NotAFiberError);
    CHECK_NOTHROW(fiber_multiplicities({F - E1 + E2, E1 - E2}, F));
}

TEST_CASE("property: multiplicities make F numerically trivial on components") {
    for (const auto& e : scenario_catalog(1, 3)) {
        for (const auto& fc : e.scenario.fibers) {
            const auto cls = fc.classes();
            const auto mult = fiber_multiplicities(cls, e.scenario.fiber);
            for (std::size_t j = 0; j < cls.size(); ++j) {
                Int sum = 0;
                for (std::size_t k = 0; k < cls.size(); ++k) sum += mult[k] * intersect(cls[k], cls[j]);
                REQUIRE(sum == 0);
            }
        }
    }
}

TEST_CASE("shape classification") {
    for (int g = 1; g <= 3; ++g) {
        const Scenario s = scenario_trivial_mw(g);
        const DualGraph graph = dual_graph(s.fibers[0].components);
        const auto mult = fiber_multiplicities(s.fibers[0].classes(), s.fiber);
        const FiberShape shape = classify_shape(graph, mult);
        CHECK(shape.kind == ShapeKind::Condition2a);
        CHECK(shape.parameters == std::vector<int>{g});
        CHECK(contains_condition2b(graph, g));
        CHECK(canonical_tree_code(graph, mult) == canonical_tree_code(condition2a_graph(g).graph,
                                                                      condition2a_graph(g).multiplicities));
    }
    const auto r0 = ruling_chain_graph(0);
    CHECK(r0.graph.size() == 2);
    CHECK(classify_shape(r0.graph, r0.multiplicities).kind == ShapeKind::RulingChainA);
    CHECK(classify_shape(r0.graph, r0.multiplicities).parameters == std::vector<int>{0});
    const auto r3 = ruling_chain_graph(3);
    CHECK(classify_shape(r3.graph, r3.multiplicities) == FiberShape{ShapeKind::RulingChainA, {3}});
    for (int k = 2; k <= 5; ++k) {
        const auto f = ruling_fork_graph(k);
        CHECK(classify_shape(f.graph, f.multiplicities) == FiberShape{ShapeKind::RulingForkD, {k}});
    }
    CHECK_THROWS_AS(ruling_fork_graph(1), InvalidComponentError);
    CHECK(FiberShape{ShapeKind::Condition2a, {2}}.to_string() == "Condition2a fiber, g=2");
}

TEST_CASE("the extended E8 shape for genus one") {
    const auto w = condition2a_graph(1);
    for (const auto& n : w.graph.nodes) CHECK(n.self_intersection == -2);
    CHECK(condition2a_graph(2).graph.nodes.back().self_intersection == -3);
}

TEST_CASE("Condition2b subgraph without Condition2a") {
    const DualGraph sub = condition2b_graph(2);
    CHECK(sub.size() == 12);
    CHECK(contains_condition2b(sub, 2));
    CHECK_FALSE(contains_condition2b(sub, 3));
    CHECK(classify_shape(sub, {}, 2).kind == ShapeKind::Condition2bSubgraphOnly);
    CHECK(classify_shape(ruling_chain_graph(2).graph, {}).kind == ShapeKind::Other);
}

TEST_CASE("canonical tree code") {
    const auto a = ruling_fork_graph(3);
    DualGraph relabelled;
    const std::size_t n = a.graph.size();
    std::vector<Int> mult(n);
    for (std::size_t i = 0; i < n; ++i) {
        relabelled.nodes.push_back(a.graph.nodes[n - 1 - i]);
        mult[i] = a.multiplicities[n - 1 - i];
    }
    for (const auto& e : a.graph.edges) relabelled.edges.push_back({n - 1 - e.a, n - 1 - e.b, e.multiplicity});
    CHECK(canonical_tree_code(relabelled, mult) == canonical_tree_code(a.graph, a.multiplicities));
    CHECK(canonical_tree_code(a.graph, a.multiplicities) !=
          canonical_tree_code(ruling_chain_graph(4).graph, ruling_chain_graph(4).multiplicities));
    DualGraph cycle = ruling_chain_graph(2).graph;
    cycle.edges.push_back({0, cycle.size() - 1, 1});
    CHECK_FALSE(canonical_tree_code(cycle, {}).has_value());
}

TEST_CASE("rank formula") {
    CHECK(mw_rank_formula(10, {9}) == 0);
    for (int g = 1; g <= 3; ++g) CHECK(mw_rank_formula(4 * g + 6, {}) == 4 * g + 4);
    CHECK(mw_rank_formula(14, {3}) == 10);
    CHECK_THROWS_AS(mw_rank_formula(14, {0}), InvalidComponentError);
}

TEST_CASE("property: rank formula equals the MW free rank over the catalog") {
    for (const auto& e : scenario_catalog(1, 3)) {
        CAPTURE(e.name);
        const int formula = mw_rank_formula(static_cast<int>(e.scenario.model.picard_number()),
                                            e.scenario.component_counts());
        CHECK(mw_group(e.scenario).free_rank == static_cast<std::size_t>(formula));
    }
}

TEST_CASE("DOT export") {
    const std::string dot = to_dot({condition2a_graph(1), ruling_chain_graph(0)}, "demo");
    CHECK(dot.rfind("graph demo {", 0) == 0);
    CHECK(dot.find("subgraph cluster_0") != std::string::npos);
    CHECK(dot.find("subgraph cluster_1") != std::string::npos);
    CHECK(dot.find("label=\"m=6, s=-2\"") != std::string::npos);
    CHECK(dot.find("f0_5 -- f0_7;") != std::string::npos);
    CHECK(dot.back() == '\n');
    const auto m = SurfaceModel::maximal(1, 1);
    const DualGraph twice =
        dual_graph(std::vector<DivisorClass>{DivisorClass::delta(m), Int(2) * DivisorClass::gamma(m)});
    CHECK(to_dot({{twice, {}}}).find("label=\"2\"") != std::string::npos);
}
