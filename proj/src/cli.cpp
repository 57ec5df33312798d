#include "mwrat/cli.hpp"

#include "mwrat/catalog.hpp"
#include "mwrat/errors.hpp"
#include "mwrat/json_io.hpp"
#include "mwrat/oracle.hpp"
#include "mwrat/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <regex>

namespace mwrat {

namespace {

struct ScenarioSource {
    bool trivial = false;
    bool irreducible = false;
    int genus = 0;
    std::string path;

    void attach(CLI::App* app) {
        app->add_flag("--trivial-scenario", trivial, "built-in scenario with trivial Mordell-Weil group");
        app->add_flag("--irreducible-scenario", irreducible, "built-in scenario with all fibers irreducible");
        app->add_option("--g", genus, "genus for the built-in scenarios");
        app->add_option("--scenario", path, "scenario JSON file");
    }

    Scenario load() const {
        const int chosen = (trivial ? 1 : 0) + (irreducible ? 1 : 0) + (path.empty() ? 0 : 1);
        if (chosen != 1)
            throw InputError("choose exactly one of --trivial-scenario, --irreducible-scenario, --scenario");
        if (!path.empty()) return scenario_from_json(load_json_file(path));
        if (genus < 1) throw InputError("--g must be a positive genus");
        return trivial ? scenario_trivial_mw(genus) : scenario_all_irreducible(genus);
    }
};

struct Format {
    std::string report = "text";
    bool json_flag = false;

    void attach(CLI::App* app) {
        app->add_option("--report", report, "output format")->check(CLI::IsMember({"text", "json"}));
        app->add_flag("--json", json_flag, "machine-readable JSON output");
    }
    bool json() const { return json_flag || report == "json"; }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string text_rat(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_den() == 1 ? c.get_num().get_str() : rational_string(c);
}

Json validation_json(const ValidationReport& v) {
    Json f = Json::array();
    for (const auto& s : v.failures()) f.push_back(s);
    return Json{{"passed", v.all_passed()}, {"failures", f}};
}

void print_validation(std::ostream& out, const ValidationReport& v) {
    if (v.all_passed()) {
        out << "validation: ok (" << v.checks.size() << " checks)\n";
        return;
    }
    out << "validation: FAILED\n";
    for (const auto& c : v.checks)
        if (!c.passed) out << "  FAIL " << c.name << ": " << c.detail << "\n";
}

std::string model_str(const SurfaceModel& m) {
    return "Sigma_" + std::to_string(m.degree) + " blown up at " + std::to_string(m.blowups) + " points (rho = " +
           std::to_string(m.picard_number()) + ", genus " + std::to_string(m.genus) + ")";
}

int cmd_mw(const ScenarioSource& src, const Format& fmt, std::ostream& out) {
    const Scenario s = src.load();
    const ValidationReport v = validate_scenario(s);
    if (!v.all_passed()) {
        if (fmt.json()) {
            out << Json{{"scenario", s.name}, {"validation", validation_json(v)}}.dump(2) << "\n";
        } else {
            out << "scenario: " << s.name << "\n";
            print_validation(out, v);
        }
        return kExitVerificationFailed;
    }
    const AbelianGroupInvariants group = mw_group(s);
    const AbelianGroupInvariants torsion = mw_torsion(s);
    const int formula = mw_rank_formula(static_cast<int>(s.model.picard_number()), s.component_counts());
    const MWLReport report = mwl(s);
    const EquivalenceReport eq = theorem_equivalence_check(s);
    const IntegerLattice t = trivial_lattice(s);
    std::vector<Int> factors;
    for (const auto& d : smith_normal_form(t.gram().entries()).diagonal())
        if (sgn(d) != 0) factors.push_back(d);
    const bool consistent = eq.agree && group.free_rank == static_cast<std::size_t>(formula);

    if (fmt.json()) {
        Json inv = Json::array();
        for (const auto& f : factors) inv.push_back(f.get_str());
        Json j;
        j["scenario"] = s.name;
        j["model"] = Json{{"degree", s.model.degree}, {"n", s.model.blowups}, {"genus", s.model.genus}};
        j["validation"] = validation_json(v);
        j["trivial_lattice"] = Json{{"rank", t.rank()}, {"invariant_factors", inv}, {"gram", to_json(t.gram().entries())}};
        j["mw_group"] = to_json(group);
        j["torsion"] = to_json(torsion);
        j["rank_formula"] = formula;
        j["mwl"] = Json{{"rank", report.lattice_gram.rows()},
                        {"gram", to_json(report.lattice_gram)},
                        {"discriminant", rational_string(report.discriminant)},
                        {"root_count", report.root_count},
                        {"identified_as", report.identified_as ? Json(*report.identified_as) : Json(nullptr)}};
        Json shapes = Json::array();
        for (const auto& sh : eq.shapes) shapes.push_back(sh.to_string());
        j["equivalence"] = Json{{"mw_trivial", eq.mw_trivial},
                                {"condition2a", eq.has_condition2a},
                                {"condition2b", eq.has_condition2b},
                                {"agree", eq.agree},
                                {"fiber_shapes", shapes},
                                {"certificate", eq.certificate}};
        out << j.dump(2) << "\n";
    } else {
        out << "scenario: " << s.name << "\n";
        out << "model: " << model_str(s.model) << "\n";
        print_validation(out, v);
        out << "trivial lattice: rank " << t.rank() << ", discriminant " << t.discriminant() << "\n";
        out << "MW group: " << group.to_string() << "\n";
        out << "torsion: " << torsion.to_string() << "\n";
        out << "rank formula: " << formula << "\n";
        out << "MWL: rank " << report.lattice_gram.rows() << ", discriminant " << text_rat(report.discriminant)
            << ", vectors of norm <= 2: " << report.root_count << "\n";
        out << "identified as: " << report.identified_as.value_or("-") << "\n";
        out << "equivalence: mw_trivial=" << bool_str(eq.mw_trivial) << " condition2a=" << bool_str(eq.has_condition2a)
            << " condition2b=" << bool_str(eq.has_condition2b) << " -> " << (eq.agree ? "agree" : "DISAGREE") << "\n";
        if (!eq.agree) out << "certificate: " << eq.certificate << "\n";
    }
    return consistent ? kExitOk : kExitVerificationFailed;
}

struct FiberAnalysis {
    std::string name;
    bool ok = true;
    std::vector<std::string> failures;
    std::optional<DualGraph> graph;
    std::vector<Int> multiplicities;
    std::optional<FiberShape> shape;
};

std::vector<FiberAnalysis> analyze_fibers(const Scenario& s) {
    std::vector<FiberAnalysis> out;
    for (std::size_t f = 0; f < s.fibers.size(); ++f) {
        FiberAnalysis a;
        a.name = "fiber[" + std::to_string(f) + "]";
        try {
            a.graph = dual_graph(s.fibers[f].components);
        } catch (const InvalidComponentError& e) {
            a.ok = false;
            a.failures.push_back(a.name + ".dual-graph: " + e.what());
        }
        try {
            a.multiplicities = fiber_multiplicities(s.fibers[f].classes(), s.fiber);
        } catch (const NotAFiberError& e) {
            a.ok = false;
            a.failures.push_back(a.name + ".multiplicities: " + e.what());
        }
        if (a.graph && !a.multiplicities.empty()) {
            // Σ m_k Θ_k·Θ_j = 0 for every component.
            for (std::size_t j = 0; j < a.graph->size(); ++j) {
                Int sum = 0;
                for (std::size_t k = 0; k < a.graph->size(); ++k)
                    sum += a.multiplicities[k] *
                           (k == j ? a.graph->nodes[k].self_intersection : a.graph->weight(k, j));
                if (sum != 0) {
                    a.ok = false;
                    a.failures.push_back(a.name + ".numerically-trivial: F.Theta_" + std::to_string(j) + " = " +
                                         sum.get_str());
                }
            }
        }
        if (a.graph) a.shape = classify_shape(*a.graph, a.multiplicities, s.model.genus);
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<WeightedGraph> dot_input(const std::vector<FiberAnalysis>& fibers) {
    std::vector<WeightedGraph> out;
    for (const auto& f : fibers)
        if (f.graph) out.push_back({*f.graph, f.multiplicities});
    return out;
}

void write_dot(const std::string& path, const std::string& dot, std::ostream& out) {
    if (path == "-") {
        out << dot;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError(path + ": cannot open for writing");
    file << dot;
}

int cmd_fiber(const ScenarioSource& src, const Format& fmt, const std::string& dot_path, std::ostream& out) {
    const Scenario s = src.load();
    const ValidationReport v = validate_scenario(s);
    const auto fibers = analyze_fibers(s);
    bool ok = v.all_passed();
    for (const auto& f : fibers) ok = ok && f.ok;
    const int formula = mw_rank_formula(static_cast<int>(s.model.picard_number()), s.component_counts());

    if (fmt.json()) {
        Json arr = Json::array();
        for (std::size_t i = 0; i < fibers.size(); ++i) {
            const auto& f = fibers[i];
            Json nodes = Json::array(), edges = Json::array(), mult = Json::array(), fails = Json::array();
            if (f.graph) {
                for (const auto& n : f.graph->nodes)
                    nodes.push_back(Json{{"label", n.label}, {"self_intersection", n.self_intersection.get_str()}});
                for (const auto& e : f.graph->edges)
                    edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"multiplicity", e.multiplicity.get_str()}});
            }
            for (const auto& m : f.multiplicities) mult.push_back(m.get_str());
            for (const auto& x : f.failures) fails.push_back(x);
            arr.push_back(Json{{"nodes", nodes},
                               {"edges", edges},
                               {"multiplicities", mult},
                               {"shape", f.shape ? Json(f.shape->to_string()) : Json(nullptr)},
                               {"failures", fails}});
        }
        out << Json{{"scenario", s.name},
                    {"validation", validation_json(v)},
                    {"rank_formula", formula},
                    {"fibers", arr},
                    {"passed", ok}}
                   .dump(2)
            << "\n";
    } else {
        out << "scenario: " << s.name << "\n";
        print_validation(out, v);
        out << "reducible fibers: " << fibers.size() << ", rank formula: " << formula << "\n";
        for (const auto& f : fibers) {
            out << f.name << ":";
            if (f.graph) out << " " << f.graph->size() << " components, " << f.graph->edges.size() << " edges";
            out << "\n";
            if (!f.multiplicities.empty()) {
                out << "  multiplicities:";
                for (const auto& m : f.multiplicities) out << " " << m;
                out << "\n";
            }
            if (f.shape) out << "  shape: " << f.shape->to_string() << "\n";
            for (const auto& x : f.failures) out << "  FAIL " << x << "\n";
        }
        out << (ok ? "all fiber checks passed" : "fiber checks FAILED") << "\n";
    }
    if (!dot_path.empty()) write_dot(dot_path, to_dot(dot_input(fibers), "fibers"), out);
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_export(const ScenarioSource& src, const std::string& dot_path, std::ostream& out) {
    if (dot_path.empty()) throw InputError("export needs --dot <path>");
    const Scenario s = src.load();
    write_dot(dot_path, to_dot(dot_input(analyze_fibers(s)), "fibers"), out);
    return kExitOk;
}

PencilCoefficients load_pencil(const std::string& path, int genus) {
    if (path.empty()) throw InputError("--coeffs <file> is required");
    return pencil_from_json(load_json_file(path), genus > 0 ? std::optional<int>(genus) : std::nullopt);
}

int cmd_pencil_disc(const std::string& path, int genus, const Format& fmt, std::ostream& out) {
    const PencilCoefficients pc = load_pencil(path, genus);
    const int g = pc.genus();
    const SparsePoly p = pencil_equation(pc);
    const SparsePoly disc = discriminant_in_x(p);
    const bool matches = disc == oracle::factored_discriminant(pc);
    const BranchDecomposition bd = branch_decomposition(disc, g);
    const int contact = contact_order_at_origin(bd.branch);
    const bool contact_ok = contact == 2 * g + 1;
    if (fmt.json()) {
        out << Json{{"genus", g},
                    {"pencil", poly_to_json(p)},
                    {"discriminant", poly_to_json(disc)},
                    {"matches_factored_form", matches},
                    {"branch", Json{{"unit", rational_string(bd.unit)},
                                    {"t_exp", bd.t_exp},
                                    {"y_exp", bd.y_exp},
                                    {"B", poly_to_json(bd.branch)},
                                    {"bidegree", Json::array({bd.branch.degree_in(Var::T), bd.branch.degree_in(Var::Y)})}}},
                    {"contact_order", contact}}
                   .dump(2)
            << "\n";
    } else {
        out << "genus: " << g << "\n";
        out << "pencil: " << p.to_string() << "\n";
        out << "discriminant: " << disc.to_string() << "\n";
        out << "factored form: " << (matches ? "equal" : "DIFFERENT") << "\n";
        out << "branch: unit " << text_rat(bd.unit) << ", t^" << bd.t_exp << " y^" << bd.y_exp << ", B = "
            << bd.branch.to_string() << "\n";
        out << "bidegree of B: (" << bd.branch.degree_in(Var::T) << ", " << bd.branch.degree_in(Var::Y) << ")\n";
        out << "contact order at origin: " << contact << "\n";
    }
    return matches && contact_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_pencil_transfer(const std::string& path, int genus, const Format& fmt, std::ostream& out) {
    const PencilCoefficients pc = load_pencil(path, genus);
    const DoubleCoverCoefficients dc = pencil_to_double_cover(pc);
    const SparsePoly psi = double_cover_equation(dc);
    if (fmt.json()) {
        Json j = double_cover_to_json(dc);
        j["psi"] = poly_to_json(psi);
        out << j.dump(2) << "\n";
    } else {
        out << "genus: " << dc.genus() << "\n";
        out << "b_{0," << 2 * dc.genus() + 1 << "} = " << text_rat(dc.b0_top()) << "\n";
        out << "b_{1,0} = " << text_rat(dc.b10()) << "\n";
        for (int j = 1; j <= 2 * dc.genus() + 1; ++j)
            out << "b_{1," << j << "} = " << text_rat(dc.b1(j)) << "\n";
        out << "psi = " << psi.to_string() << "\n";
    }
    return kExitOk;
}

Var parse_var(const std::string& s) {
    if (s == "t") return Var::T;
    if (s == "x") return Var::X;
    if (s == "y") return Var::Y;
    if (s == "z") return Var::Z;
    throw InputError("unknown variable '" + s + "'");
}

int cmd_pencil_ade(const std::string& path, const std::string& vars, int budget, const Format& fmt, std::ostream& out) {
    if (path.empty()) throw InputError("--germ <file> is required");
    const SparsePoly f = poly_from_json(load_json_file(path));
    static const std::regex pair_re(R"(\s*([txyz])\s*,\s*([txyz])\s*)");
    std::smatch m;
    if (!std::regex_match(vars, m, pair_re)) throw InputError("--vars expects two variables such as t,y");
    GermOptions opt;
    opt.u = parse_var(m[1]);
    opt.v = parse_var(m[2]);
    if (budget < 1) throw InputError("--budget must be positive");
    opt.step_budget = budget;
    const GermClassification c = classify_ade_germ(f, opt);
    if (fmt.json()) {
        Json log = Json::array();
        for (const auto& s : c.coordinate_changes) log.push_back(s);
        out << Json{{"germ", poly_to_json(f)}, {"classification", c.to_string()}, {"coordinate_changes", log}}.dump(2)
            << "\n";
    } else {
        out << "germ: " << f.to_string() << "\n";
        out << "classification: " << c.to_string() << "\n";
        for (const auto& s : c.coordinate_changes) out << "  " << s << "\n";
    }
    return kExitOk;
}

std::pair<int, int> parse_genus_range(const std::string& s) {
    static const std::regex re(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw InputError("--g expects N or A..B, got '" + s + "'");
    const int a = std::stoi(m[1]);
    const int b = m[2].matched ? std::stoi(m[2]) : a;
    if (a < 1 || b < a) throw InputError("invalid genus range '" + s + "'");
    return {a, b};
}

int cmd_verify_all(const std::string& range, std::uint64_t seed, const Format& fmt, std::ostream& out) {
    VerifyOptions o;
    std::tie(o.g_min, o.g_max) = parse_genus_range(range);
    o.seed = seed;
    auto results = run_acceptance(o);
    for (auto& r : run_supplementary(o)) results.push_back(std::move(r));
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (fmt.json()) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"primary", r.primary}, {"passed", r.passed},
                               {"detail", r.detail}});
        out << Json{{"genus_range", Json::array({o.g_min, o.g_max})}, {"seed", seed}, {"checks", arr}, {"passed", ok}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& r : results)
            out << (r.passed ? "PASS" : "FAIL") << " " << (r.primary ? "[PRIMARY] " : "[extra]   ") << r.id << ": "
                << r.detail << "\n";
        out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mordell-Weil groups and lattices of rational genus-g fibrations", "mwrat"};
    app.require_subcommand(1);

    ScenarioSource mw_src, fiber_src, export_src;
    Format mw_fmt, fiber_fmt, disc_fmt, ade_fmt, transfer_fmt, verify_fmt;
    std::string fiber_dot, export_dot, coeffs, germ_path, vars = "t,y", range;
    int pencil_genus = 0;
    int budget = 64;
    std::uint64_t seed = 0;

    CLI::App* mw = app.add_subcommand("mw", "Mordell-Weil group, torsion and lattice of a scenario");
    mw_src.attach(mw);
    mw_fmt.attach(mw);

    CLI::App* fiber = app.add_subcommand("fiber", "dual graphs, multiplicities and shapes of reducible fibers");
    fiber_src.attach(fiber);
    fiber_fmt.attach(fiber);
    fiber->add_option("--dot", fiber_dot, "also write the dual graphs as DOT ('-' for stdout)");

    CLI::App* exp = app.add_subcommand("export", "export fiber dual graphs");
    export_src.attach(exp);
    exp->add_option("--dot", export_dot, "DOT output path ('-' for stdout)");

    CLI::App* pencil = app.add_subcommand("pencil", "pencil discriminant, double cover and germ tools");
    pencil->require_subcommand(1);
    CLI::App* disc = pencil->add_subcommand("disc", "discriminant and branch curve of a pencil");
    disc->add_option("--g", pencil_genus, "genus (overrides the file)");
    disc->add_option("--coeffs", coeffs, "coefficient JSON file");
    disc_fmt.attach(disc);
    CLI::App* transfer = pencil->add_subcommand("transfer", "double-cover coefficients of a pencil");
    transfer->add_option("--g", pencil_genus, "genus (overrides the file)");
    transfer->add_option("--coeffs", coeffs, "coefficient JSON file");
    transfer_fmt.attach(transfer);
    CLI::App* ade = pencil->add_subcommand("ade", "classify a plane-curve germ");
    ade->add_option("--germ", germ_path, "polynomial JSON file");
    ade->add_option("--vars", vars, "local coordinates, default t,y");
    ade->add_option("--budget", budget, "coordinate-change budget, default 64");
    ade_fmt.attach(ade);

    CLI::App* verify = app.add_subcommand("verify-all", "run every acceptance check");
    verify->add_option("--g", range, "genus or range A..B")->required();
    verify->add_option("--seed", seed, "seed for randomized checks")->required();
    verify_fmt.attach(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (mw->parsed()) return cmd_mw(mw_src, mw_fmt, out);
        if (fiber->parsed()) return cmd_fiber(fiber_src, fiber_fmt, fiber_dot, out);
        if (exp->parsed()) return cmd_export(export_src, export_dot, out);
        if (disc->parsed()) return cmd_pencil_disc(coeffs, pencil_genus, disc_fmt, out);
        if (transfer->parsed()) return cmd_pencil_transfer(coeffs, pencil_genus, transfer_fmt, out);
        if (ade->parsed()) return cmd_pencil_ade(germ_path, vars, budget, ade_fmt, out);
        if (verify->parsed()) return cmd_verify_all(range, seed, verify_fmt, out);
    } catch (const InternalConsistencyError& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    err << "error: no command\n";
    return kExitInputError;
}

}  // namespace mwrat
