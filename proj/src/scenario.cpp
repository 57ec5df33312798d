#include "mwrat/scenario.hpp"

#include "mwrat/errors.hpp"

#include <sstream>

namespace mwrat {

std::vector<DivisorClass> FiberComponents::classes() const {
    std::vector<DivisorClass> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.cls);
    return out;
}

const DivisorClass& Scenario::zero_section() const {
    if (sections.empty()) throw ConfigurationError("scenario '" + name + "' declares no zero section");
    return sections.front();
}

std::vector<int> Scenario::component_counts() const {
    std::vector<int> counts;
    for (const auto& f : fibers) counts.push_back(static_cast<int>(f.components.size()));
    return counts;
}

std::vector<DivisorClass> Scenario::all_components() const {
    std::vector<DivisorClass> out;
    for (const auto& f : fibers)
        for (const auto& c : f.components) out.push_back(c.cls);
    return out;
}

Scenario scenario_trivial_mw(int genus) {
    if (genus < 1) throw InvalidModelError("genus must be at least 1");
    const SurfaceModel m = SurfaceModel::maximal(genus, genus);
    const int n = m.blowups;
    auto E = [&](int i) { return DivisorClass::exceptional(m, i); };

    FiberComponents fiber;
    for (int k = 0; k <= n - 2; ++k)
        fiber.components.push_back({"Theta_" + std::to_string(k), E(n - 1 - k) - E(n - k)});
    fiber.components.push_back({"Theta_" + std::to_string(n - 1), DivisorClass::gamma(m) - E(1) - E(2)});
    fiber.components.push_back({"Theta_" + std::to_string(n), DivisorClass::delta(m) - E(1)});

    Scenario s{"trivial_mw_g" + std::to_string(genus), m, fiber_class(m), {E(n)}, {fiber}};
    return s;
}

Scenario scenario_all_irreducible(int genus) {
    if (genus < 1) throw InvalidModelError("genus must be at least 1");
    const SurfaceModel m = SurfaceModel::maximal(genus, genus);
    return Scenario{"all_irreducible_g" + std::to_string(genus), m, fiber_class(m),
                    {DivisorClass::exceptional(m, m.blowups)}, {}};
}

bool ValidationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.name + ": " + c.detail);
    return out;
}

ValidationReport validate_scenario(const Scenario& s) {
    ValidationReport r;
    auto add = [&](std::string name, bool ok, std::string detail) {
        r.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    auto str = [](const Int& v) { return v.get_str(); };

    const SurfaceModel& m = s.model;
    const int g = m.genus;
    const auto rho = static_cast<long>(m.picard_number());
    add("picard-number", rho == 4 * g + 6, "rho = " + std::to_string(rho) + ", 4g+6 = " + std::to_string(4 * g + 6));

    bool same_model = s.fiber.model() == m;
    for (const auto& x : s.sections) same_model = same_model && x.model() == m;
    for (const auto& x : s.all_components()) same_model = same_model && x.model() == m;
    add("model-consistency", same_model, same_model ? "all classes on the declared model" : "class on a foreign model");
    if (!same_model) return r;

    const DivisorClass& F = s.fiber;
    const DivisorClass K = canonical_class(m);
    const Int f2 = self_intersection(F);
    const Int kf = intersect(K, F);
    const Int kf2 = self_intersection(K + F);
    add("fiber-self-intersection", f2 == 0, "F^2 = " + str(f2));
    add("canonical-degree", kf == 2 * g - 2, "K.F = " + str(kf) + ", 2g-2 = " + std::to_string(2 * g - 2));
    add("adjoint-square", kf2 == 0, "(K+F)^2 = " + str(kf2));
    {
        const Int twice = f2 + kf;
        const bool even = mpz_even_p(twice.get_mpz_t()) != 0;
        const Int genus = even ? Int(twice / 2 + 1) : Int(0);
        add("fiber-genus", even && genus == g, even ? "p_a(F) = " + str(genus) : "F^2 + K.F is odd");
    }

    add("zero-section", !s.sections.empty(), s.sections.empty() ? "no sections declared" : "present");
    for (std::size_t i = 0; i < s.sections.size(); ++i) {
        const Int sf = intersect(s.sections[i], F);
        const Int ss = self_intersection(s.sections[i]);
        add("section[" + std::to_string(i) + "]", sf == 1 && ss == -1,
            "s.F = " + str(sf) + ", s^2 = " + str(ss));
    }

    for (std::size_t f = 0; f < s.fibers.size(); ++f) {
        for (const auto& c : s.fibers[f].components) {
            const Int cf = intersect(c.cls, F);
            add("fiber[" + std::to_string(f) + "]." + c.name + ".F", cf == 0, "Theta.F = " + str(cf));
        }
        for (std::size_t h = f + 1; h < s.fibers.size(); ++h) {
            bool orth = true;
            for (const auto& a : s.fibers[f].components)
                for (const auto& b : s.fibers[h].components) orth = orth && intersect(a.cls, b.cls) == 0;
            add("fibers[" + std::to_string(f) + "," + std::to_string(h) + "].disjoint", orth,
                orth ? "components of distinct fibers are disjoint" : "components of distinct fibers meet");
        }
    }
    return r;
}

DivisorClass BasisIsometry::apply(const DivisorClass& d) const {
    if (!(d.model() == source)) throw DimensionError("class does not live on the isometry's source model");
    return DivisorClass(target, matrix * d.coeffs());
}

Scenario BasisIsometry::apply(const Scenario& s) const {
    Scenario out{s.name, target, apply(s.fiber), {}, {}};
    for (const auto& x : s.sections) out.sections.push_back(apply(x));
    for (const auto& f : s.fibers) {
        FiberComponents fc;
        for (const auto& c : f.components) fc.components.push_back({c.name, apply(c.cls)});
        out.fibers.push_back(std::move(fc));
    }
    return out;
}

BasisIsometry BasisIsometry::inverse() const {
    const RatMatrix inv = mwrat::inverse(to_rational(matrix));
    IntMatrix m(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            if (inv(i, j).get_den() != 1) throw ConfigurationError("basis change is not unimodular");
            m(i, j) = inv(i, j).get_num();
        }
    return BasisIsometry{target, source, std::move(m)};
}

BasisIsometry elementary_transformation(const Scenario& s) {
    const SurfaceModel& m = s.model;
    if (m.degree != m.genus)
        throw ConfigurationError("elementary transformation expects the Sigma_g model (d = g), got d = " +
                                 std::to_string(m.degree));
    if (m.blowups < 1) throw ConfigurationError("elementary transformation needs E_1");
    const DivisorClass strict_delta = DivisorClass::delta(m) - DivisorClass::exceptional(m, 1);
    bool on_delta = false;
    for (const auto& c : s.all_components()) on_delta = on_delta || c == strict_delta;
    for (const auto& c : s.sections) on_delta = on_delta || c == strict_delta;
    if (!on_delta) throw ConfigurationError("E_1 is not declared to lie over a point of Delta (no class Delta - E_1)");

    // new = M · old on (a, b, m_1): a' = a, b' = a + b − m_1, m_1' = a − m_1.
    IntMatrix M = IntMatrix::identity(m.picard_number());
    M(1, 0) = 1;
    M(1, 2) = -1;
    M(2, 0) = 1;
    M(2, 2) = -1;
    return BasisIsometry{m, SurfaceModel::make(m.degree + 1, m.blowups, m.genus), std::move(M)};
}

}  // namespace mwrat
