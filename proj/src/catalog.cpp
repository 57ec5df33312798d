#include "mwrat/catalog.hpp"

#include "mwrat/errors.hpp"

namespace mwrat {

namespace {

struct Builder {
    SurfaceModel m;
    DivisorClass F;

    explicit Builder(int g) : m(SurfaceModel::maximal(g, g)), F(fiber_class(m)) {}

    DivisorClass E(int i) const { return DivisorClass::exceptional(m, i); }
    DivisorClass G() const { return DivisorClass::gamma(m); }
    DivisorClass O() const { return E(m.blowups); }

    /// Components plus the residual F − Σ components, named Theta_1.. and Theta_0.
    FiberComponents fiber(const std::vector<DivisorClass>& parts) const {
        FiberComponents fc;
        DivisorClass residual = F;
        for (const auto& p : parts) residual -= p;
        fc.components.push_back({"Theta_0", residual});
        for (std::size_t i = 0; i < parts.size(); ++i)
            fc.components.push_back({"Theta_" + std::to_string(i + 1), parts[i]});
        return fc;
    }

    /// E_a − E_{a+1}, …, E_{b−1} − E_b.
    std::vector<DivisorClass> chain(int a, int b) const {
        std::vector<DivisorClass> out;
        for (int i = a; i < b; ++i) out.push_back(E(i) - E(i + 1));
        return out;
    }

    CatalogEntry entry(const std::string& name, std::vector<FiberComponents> fibers) const {
        Scenario s{name, m, F, {O()}, std::move(fibers)};
        int rank = static_cast<int>(m.blowups);
        for (const auto& f : s.fibers) rank -= static_cast<int>(f.components.size()) - 1;
        return CatalogEntry{name, std::move(s), false, rank};
    }
};

}  // namespace

std::vector<CatalogEntry> scenario_catalog(int g_min, int g_max) {
    if (g_min < 1 || g_max < g_min) throw ConfigurationError("invalid genus range");
    std::vector<CatalogEntry> out;
    for (int g = g_min; g <= g_max; ++g) {
        const std::string tag = "g" + std::to_string(g);
        const Scenario trivial = scenario_trivial_mw(g);
        out.push_back({trivial.name, trivial, true, 0});
        const Scenario irreducible = scenario_all_irreducible(g);
        out.push_back({irreducible.name, irreducible, false, 4 * g + 4});

        Scenario moved = elementary_transformation(trivial).apply(trivial);
        moved.name = "trivial_mw_" + tag + "_on_sigma" + std::to_string(g + 1);
        out.push_back({moved.name, moved, true, 0});

        const Builder b(g);
        const DivisorClass ruling_piece = b.G() - b.E(1) - b.E(2);
        out.push_back(b.entry("I2_gamma_" + tag, {b.fiber({ruling_piece})}));
        out.push_back(b.entry("I2_exceptional_" + tag, {b.fiber(b.chain(1, 2))}));
        out.push_back(b.entry("I3_chain_" + tag, {b.fiber(b.chain(1, 3))}));
        out.push_back(b.entry("two_fibers_" + tag, {b.fiber({ruling_piece}), b.fiber({b.G() - b.E(3) - b.E(4)})}));
        out.push_back(b.entry("I4_cycle_" + tag, {b.fiber(b.chain(1, 4))}));
        out.push_back(b.entry("I2_and_I3_" + tag, {b.fiber({ruling_piece}), b.fiber(b.chain(3, 5))}));
        out.push_back(b.entry("I6_cycle_" + tag, {b.fiber(b.chain(1, 6))}));
        out.push_back(b.entry("three_fibers_" + tag, {b.fiber({ruling_piece}), b.fiber({b.G() - b.E(3) - b.E(4)}),
                                                      b.fiber({b.G() - b.E(5) - b.E(6)})}));
    }
    return out;
}

Scenario synthetic_index_two_scenario(int genus) {
    const Builder b(genus);
    const DivisorClass doubled = Int(2) * (b.E(1) - b.E(2));
    FiberComponents fc;
    fc.components.push_back({"Theta_1", doubled});
    return Scenario{"index_two_g" + std::to_string(genus), b.m, b.F, {b.O()}, {fc}};
}

}  // namespace mwrat
