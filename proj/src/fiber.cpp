#include "mwrat/fiber.hpp"

#include "mwrat/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace mwrat {

Int DualGraph::weight(std::size_t a, std::size_t b) const {
    for (const auto& e : edges)
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.multiplicity;
    return 0;
}

std::vector<std::size_t> DualGraph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& e : edges) {
        if (e.a == v) out.push_back(e.b);
        if (e.b == v) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool DualGraph::is_connected() const {
    if (nodes.empty()) return true;
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == nodes.size();
}

bool DualGraph::is_tree() const { return is_connected() && edges.size() + 1 == nodes.size(); }

DualGraph dual_graph(const std::vector<NamedClass>& components) {
    DualGraph g;
    for (const auto& c : components) g.nodes.push_back({c.name, self_intersection(c.cls)});
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j) {
            const Int w = intersect(components[i].cls, components[j].cls);
            if (sgn(w) < 0)
                throw InvalidComponentError("components " + components[i].name + " and " + components[j].name +
                                            " have negative intersection " + w.get_str());
            if (sgn(w) > 0) g.edges.push_back({i, j, w});
        }
    return g;
}

DualGraph dual_graph(const std::vector<DivisorClass>& components) {
    std::vector<NamedClass> named;
    for (std::size_t i = 0; i < components.size(); ++i)
        named.push_back({"Theta_" + std::to_string(i), components[i]});
    return dual_graph(named);
}

std::vector<Int> fiber_multiplicities(const std::vector<DivisorClass>& components, const DivisorClass& fiber) {
    if (components.empty()) throw NotAFiberError("no components given");
    const std::size_t k = components.size();
    const std::size_t n = fiber.size();
    // Solve Σ m_k Θ_k = F: the system is Θᵀ m = F, n equations in k unknowns.
    RatMatrix a(n, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (!(components[j].model() == fiber.model())) throw DimensionError("component on a different model");
        for (std::size_t i = 0; i < n; ++i) a(i, j) = components[j].coeffs()[i];
    }
    for (std::size_t i = 0; i < n; ++i) a(i, k) = fiber.coeffs()[i];

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        std::size_t p = r;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) continue;
        a.swap_rows(p, r);
        const Rat pv = a(r, c);
        for (std::size_t j = c; j <= k; ++j) a(r, j) /= pv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rat f = a(i, c);
            for (std::size_t j = c; j <= k; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < k) throw NotAFiberError("fiber components are linearly dependent");
    for (std::size_t i = r; i < n; ++i)
        if (sgn(a(i, k)) != 0) throw NotAFiberError("components do not sum to the fiber class");

    std::vector<Int> mult(k);
    for (std::size_t i = 0; i < r; ++i) {
        const Rat& v = a(i, k);
        if (v.get_den() != 1)
            throw NotAFiberError("non-integral multiplicity for component " + std::to_string(pivot_col[i]));
        if (sgn(v) <= 0)
            throw NotAFiberError("non-positive multiplicity " + v.get_str() + " for component " +
                                 std::to_string(pivot_col[i]));
        mult[pivot_col[i]] = v.get_num();
    }
    return mult;
}

std::string FiberShape::to_string() const {
    auto param = [&](std::size_t i) { return i < parameters.size() ? std::to_string(parameters[i]) : "?"; };
    switch (kind) {
        case ShapeKind::RulingChainA: return "ruling A_{k+2} with k=" + param(0);
        case ShapeKind::RulingForkD: return "ruling D_{k+1} with k=" + param(0);
        case ShapeKind::Condition2a: return "Condition2a fiber, g=" + param(0);
        case ShapeKind::Condition2bSubgraphOnly: return "contains the Condition2b subgraph only, g=" + param(0);
        case ShapeKind::Other: return "other";
    }
    return "other";
}

namespace {

void add_path_edge(DualGraph& g, std::size_t a, std::size_t b) { g.edges.push_back({a, b, Int(1)}); }

}  // namespace

WeightedGraph condition2a_graph(int genus) {
    if (genus < 1) throw InvalidModelError("genus must be at least 1");
    const std::size_t top = static_cast<std::size_t>(4 * genus + 4);
    WeightedGraph w;
    for (std::size_t k = 0; k <= top; ++k) {
        const Int self = (k == top) ? Int(-(genus + 1)) : Int(-2);
        w.graph.nodes.push_back({"Theta_" + std::to_string(k), self});
    }
    // Chain Θ_0 − … − Θ_{4g+1} − Θ_{4g+2} − Θ_{4g+4}, with Θ_{4g+3} hanging off Θ_{4g+1}.
    for (std::size_t k = 0; k + 1 <= top - 2; ++k) add_path_edge(w.graph, k, k + 1);
    add_path_edge(w.graph, top - 2, top);
    add_path_edge(w.graph, top - 3, top - 1);
    for (std::size_t k = 0; k + 3 <= top; ++k) w.multiplicities.emplace_back(static_cast<long>(k + 1));
    w.multiplicities.emplace_back(2 * genus + 2);
    w.multiplicities.emplace_back(2 * genus + 1);
    w.multiplicities.emplace_back(2);
    return w;
}

DualGraph condition2b_graph(int genus) {
    const WeightedGraph full = condition2a_graph(genus);
    DualGraph g;
    for (std::size_t k = 1; k < full.graph.nodes.size(); ++k) g.nodes.push_back(full.graph.nodes[k]);
    for (const auto& e : full.graph.edges)
        if (e.a != 0 && e.b != 0) g.edges.push_back({e.a - 1, e.b - 1, e.multiplicity});
    return g;
}

WeightedGraph ruling_chain_graph(int k) {
    if (k < 0) throw InvalidComponentError("k must be non-negative");
    WeightedGraph w;
    const std::size_t n = static_cast<std::size_t>(k) + 2;
    for (std::size_t i = 0; i < n; ++i) {
        const bool end = (i == 0 || i + 1 == n);
        w.graph.nodes.push_back({"C_" + std::to_string(i), end ? Int(-1) : Int(-2)});
        w.multiplicities.emplace_back(1);
        if (i > 0) add_path_edge(w.graph, i - 1, i);
    }
    return w;
}

WeightedGraph ruling_fork_graph(int k) {
    if (k < 2) throw InvalidComponentError("the D-type ruling fiber needs k >= 2");
    WeightedGraph w;
    // (−1) node of multiplicity 2, then k−2 (−2)-nodes of multiplicity 2; the last of these
    // (or the (−1) node itself when k = 2) carries two (−2) leaves of multiplicity 1.
    w.graph.nodes.push_back({"C_0", Int(-1)});
    w.multiplicities.emplace_back(2);
    for (int i = 1; i <= k - 2; ++i) {
        w.graph.nodes.push_back({"C_" + std::to_string(i), Int(-2)});
        w.multiplicities.emplace_back(2);
        add_path_edge(w.graph, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
    }
    const std::size_t branch = w.graph.nodes.size() - 1;
    for (int leaf = 0; leaf < 2; ++leaf) {
        w.graph.nodes.push_back({"C_" + std::to_string(w.graph.nodes.size()), Int(-2)});
        w.multiplicities.emplace_back(1);
        add_path_edge(w.graph, branch, w.graph.nodes.size() - 1);
    }
    return w;
}

std::optional<std::string> canonical_tree_code(const DualGraph& graph, const std::vector<Int>& multiplicities) {
    const std::size_t n = graph.size();
    if (n == 0 || !graph.is_tree()) return std::nullopt;
    if (!multiplicities.empty() && multiplicities.size() != n) throw DimensionError("multiplicity count mismatch");

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t v = 0; v < n; ++v) adj[v] = graph.neighbors(v);

    // Centers by repeated leaf stripping.
    std::vector<std::size_t> deg(n);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = adj[v].size();
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<std::size_t> next;
        for (std::size_t v : layer)
            for (std::size_t w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }

    auto label = [&](std::size_t v) {
        std::string s = graph.nodes[v].self_intersection.get_str();
        if (!multiplicities.empty()) s += "|" + multiplicities[v].get_str();
        return s;
    };
    std::function<std::string(std::size_t, std::size_t)> encode = [&](std::size_t v, std::size_t parent) {
        std::vector<std::string> kids;
        for (std::size_t w : adj[v])
            if (w != parent) kids.push_back(graph.weight(v, w).get_str() + ":" + encode(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(" + label(v);
        for (const auto& k : kids) s += k;
        return s + ")";
    };
    std::string best;
    for (std::size_t c : layer) {
        std::string code = encode(c, n);
        if (best.empty() || code < best) best = code;
    }
    return std::to_string(layer.size()) + best;
}

bool contains_condition2b(const DualGraph& graph, int genus) {
    const DualGraph pattern = condition2b_graph(genus);
    const std::size_t p = pattern.size();
    const std::size_t n = graph.size();
    if (p > n) return false;

    // Pattern nodes in BFS order from node 0; each has an already-placed parent.
    std::vector<std::size_t> order{0};
    std::vector<std::size_t> parent(p, p);
    std::vector<bool> queued(p, false);
    queued[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t w : pattern.neighbors(order[i]))
            if (!queued[w]) {
                queued[w] = true;
                parent[w] = order[i];
                order.push_back(w);
            }

    std::vector<std::size_t> image(p, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
        if (idx == p) return true;
        const std::size_t u = order[idx];
        std::vector<std::size_t> candidates;
        if (parent[u] == p) {
            candidates.resize(n);
            std::iota(candidates.begin(), candidates.end(), 0);
        } else {
            candidates = graph.neighbors(image[parent[u]]);
        }
        for (std::size_t v : candidates) {
            if (used[v] || graph.nodes[v].self_intersection != pattern.nodes[u].self_intersection) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) {
                const std::size_t q = order[j];
                const Int pw = pattern.weight(u, q);
                const Int gw = graph.weight(v, image[q]);
                ok = (pw == gw);
            }
            if (!ok) continue;
            used[v] = true;
            image[u] = v;
            if (place(idx + 1)) return true;
            used[v] = false;
            image[u] = n;
        }
        return false;
    };
    return place(0);
}

FiberShape classify_shape(const DualGraph& graph, const std::vector<Int>& multiplicities,
                          std::optional<int> genus_hint) {
    if (!graph.is_connected()) return {ShapeKind::Other, {}};
    const std::size_t n = graph.size();
    bool simple_edges = true;
    for (const auto& e : graph.edges) simple_edges = simple_edges && e.multiplicity == 1;

    if (simple_edges && graph.is_tree() && multiplicities.size() == n) {
        const auto code = canonical_tree_code(graph, multiplicities);
        auto same = [&](const WeightedGraph& ref) {
            return code && canonical_tree_code(ref.graph, ref.multiplicities) == code;
        };
        if (n >= 9 && (n - 5) % 4 == 0) {
            const int g = static_cast<int>((n - 5) / 4);
            if (same(condition2a_graph(g))) return {ShapeKind::Condition2a, {g}};
        }
        if (n >= 2 && same(ruling_chain_graph(static_cast<int>(n) - 2)))
            return {ShapeKind::RulingChainA, {static_cast<int>(n) - 2}};
        if (n >= 3 && same(ruling_fork_graph(static_cast<int>(n) - 1)))
            return {ShapeKind::RulingForkD, {static_cast<int>(n) - 1}};
    }

    std::vector<int> genera;
    if (genus_hint) {
        genera.push_back(*genus_hint);
    } else {
        for (int g = 1; static_cast<std::size_t>(4 * g + 4) <= n; ++g) genera.push_back(g);
    }
    for (int g : genera)
        if (g >= 1 && contains_condition2b(graph, g)) return {ShapeKind::Condition2bSubgraphOnly, {g}};
    return {ShapeKind::Other, {}};
}

int mw_rank_formula(int rho, const std::vector<int>& component_counts) {
    int r = rho - 2;
    for (int v : component_counts) {
        if (v < 1) throw InvalidComponentError("a fiber has at least one component");
        r -= v - 1;
    }
    return r;
}

std::string to_dot(const std::vector<WeightedGraph>& fibers, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t f = 0; f < fibers.size(); ++f) {
        const auto& w = fibers[f];
        os << "  subgraph cluster_" << f << " {\n";
        os << "    label=\"fiber " << f << "\";\n";
        for (std::size_t v = 0; v < w.graph.size(); ++v) {
            const std::string m = v < w.multiplicities.size() ? w.multiplicities[v].get_str() : "?";
            os << "    f" << f << "_" << v << " [label=\"m=" << m << ", s=" << w.graph.nodes[v].self_intersection
               << "\", tooltip=\"" << w.graph.nodes[v].label << "\"];\n";
        }
        for (const auto& e : w.graph.edges) {
            os << "    f" << f << "_" << e.a << " -- f" << f << "_" << e.b;
            if (e.multiplicity != 1) os << " [label=\"" << e.multiplicity << "\"]";
            os << ";\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace mwrat
