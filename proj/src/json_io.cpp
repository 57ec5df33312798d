#include "mwrat/json_io.hpp"

#include "mwrat/errors.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace mwrat {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing field \"" + key + "\"");
    return *it;
}

int small_int(const Json& j, const std::string& where) {
    const Int v = int_from_json(j, where);
    if (!v.fits_sint_p()) fail(where, "integer out of range");
    return static_cast<int>(v.get_si());
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // Translate the byte offset into line and column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                         e.what() + ")");
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
    return a;
}

Json to_json(const RatMatrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_string(m(r, c)));
        a.push_back(std::move(row));
    }
    return a;
}

Json to_json(const AbelianGroupInvariants& g) {
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(d.get_str());
    return Json{{"free_rank", g.free_rank}, {"torsion", t}, {"description", g.to_string()}};
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const InputError& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected an integer or a decimal string");
}

Rat rat_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(int_from_json(j, where));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const InputError& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected a rational as an integer or a \"p/q\" string");
}

IntVector int_vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(int_from_json(j[i], where + "/" + std::to_string(i)));
    return v;
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(int_vector_from_json(j[i], where + "/" + std::to_string(i)));
        if (rows.back().size() != rows.front().size()) fail(where + "/" + std::to_string(i), "ragged matrix row");
    }
    return IntMatrix::from_rows(rows);
}

Scenario scenario_from_json(const Json& j) {
    const std::string root = "scenario";
    if (!j.is_object()) fail(root, "expected an object");
    const int genus = small_int(field(j, "genus", root), root + "/genus");
    const int degree = small_int(field(j, "degree", root), root + "/degree");
    const int n = small_int(field(j, "n", root), root + "/n");
    SurfaceModel model;
    try {
        model = SurfaceModel::make(degree, n, genus);
    } catch (const Error& e) {
        fail(root, e.what());
    }
    const std::size_t width = model.picard_number();
    auto cls = [&](const Json& v, const std::string& where) {
        IntVector c = int_vector_from_json(v, where);
        if (c.size() != width)
            fail(where, "expected " + std::to_string(width) + " coordinates, got " + std::to_string(c.size()));
        return DivisorClass(model, std::move(c));
    };

    Scenario s{j.value("name", std::string("scenario")), model, cls(field(j, "fiber", root), root + "/fiber"), {}, {}};
    const Json& secs = field(j, "sections", root);
    if (!secs.is_array()) fail(root + "/sections", "expected an array");
    for (std::size_t i = 0; i < secs.size(); ++i)
        s.sections.push_back(cls(secs[i], root + "/sections/" + std::to_string(i)));

    const Json& fibs = field(j, "fibers", root);
    if (!fibs.is_array()) fail(root + "/fibers", "expected an array");
    for (std::size_t f = 0; f < fibs.size(); ++f) {
        const std::string where = root + "/fibers/" + std::to_string(f);
        const Json& comps = field(fibs[f], "components", where);
        if (!comps.is_array()) fail(where + "/components", "expected an array");
        const Json* names = fibs[f].contains("names") ? &fibs[f]["names"] : nullptr;
        if (names && (!names->is_array() || names->size() != comps.size()))
            fail(where + "/names", "expected one name per component");
        FiberComponents fc;
        for (std::size_t k = 0; k < comps.size(); ++k) {
            std::string name = "Theta_" + std::to_string(k);
            if (names) {
                if (!(*names)[k].is_string()) fail(where + "/names/" + std::to_string(k), "expected a string");
                name = (*names)[k].get<std::string>();
            }
            fc.components.push_back({name, cls(comps[k], where + "/components/" + std::to_string(k))});
        }
        s.fibers.push_back(std::move(fc));
    }
    return s;
}

Json scenario_to_json(const Scenario& s) {
    auto ints = [](const DivisorClass& d) {
        Json a = Json::array();
        for (const auto& x : d.coeffs()) {
            if (x.fits_slong_p()) a.push_back(x.get_si());
            else a.push_back(x.get_str());
        }
        return a;
    };
    Json j;
    j["name"] = s.name;
    j["genus"] = s.model.genus;
    j["degree"] = s.model.degree;
    j["n"] = s.model.blowups;
    j["fiber"] = ints(s.fiber);
    j["sections"] = Json::array();
    for (const auto& x : s.sections) j["sections"].push_back(ints(x));
    j["fibers"] = Json::array();
    for (const auto& f : s.fibers) {
        Json comps = Json::array();
        Json names = Json::array();
        for (const auto& c : f.components) {
            comps.push_back(ints(c.cls));
            names.push_back(c.name);
        }
        j["fibers"].push_back(Json{{"components", comps}, {"names", names}});
    }
    return j;
}

PencilCoefficients pencil_from_json(const Json& j, std::optional<int> genus) {
    const std::string root = "coefficients";
    if (!j.is_object()) fail(root, "expected an object");
    int g = 0;
    if (genus) {
        g = *genus;
    } else if (j.contains("genus")) {
        g = small_int(j["genus"], root + "/genus");
    } else {
        fail(root, "genus not given in the file or on the command line");
    }
    const Json& c = field(j, "c", root);
    if (!c.is_object()) fail(root + "/c", "expected an object keyed by \"i,j\"");
    static const std::regex key(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*)");
    std::map<PencilCoefficients::Key, Rat> values;
    for (auto it = c.begin(); it != c.end(); ++it) {
        std::smatch m;
        const std::string& k = it.key();
        if (!std::regex_match(k, m, key)) fail(root + "/c/" + k, "keys must look like \"i,j\"");
        values[{std::stoi(m[1]), std::stoi(m[2])}] = rat_from_json(it.value(), root + "/c/" + k);
    }
    try {
        return PencilCoefficients(g, std::move(values));
    } catch (const CoefficientError& e) {
        fail(root, e.what());
    }
}

Json pencil_to_json(const PencilCoefficients& pc) {
    Json c = Json::object();
    for (const auto& [k, v] : pc.values()) c[std::to_string(k.first) + "," + std::to_string(k.second)] = rational_string(v);
    return Json{{"genus", pc.genus()}, {"c", c}};
}

Json double_cover_to_json(const DoubleCoverCoefficients& dc) {
    const int g = dc.genus();
    Json b = Json::object();
    b["0," + std::to_string(2 * g + 1)] = rational_string(dc.b0_top());
    b["1,0"] = rational_string(dc.b10());
    for (int j = 1; j <= 2 * g + 1; ++j) b["1," + std::to_string(j)] = rational_string(dc.b1(j));
    return Json{{"genus", g}, {"b", b}};
}

SparsePoly poly_from_json(const Json& j) {
    const std::string root = "polynomial";
    if (!j.is_array()) fail(root, "expected an array of terms");
    SparsePoly p;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = root + "/" + std::to_string(i);
        const Json& e = field(j[i], "exp", where);
        if (!e.is_array() || e.empty() || e.size() > kVarCount)
            fail(where + "/exp", "expected 1 to 4 exponents (t, x, y, z)");
        Exponent ex{};
        for (std::size_t k = 0; k < e.size(); ++k) {
            ex[k] = small_int(e[k], where + "/exp/" + std::to_string(k));
            if (ex[k] < 0) fail(where + "/exp/" + std::to_string(k), "negative exponent");
        }
        p.add_term(ex, rat_from_json(field(j[i], "coef", where), where + "/coef"));
    }
    return p;
}

Json poly_to_json(const SparsePoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json ex = Json::array();
        for (int v : e) ex.push_back(v);
        a.push_back(Json{{"exp", ex}, {"coef", rational_string(c)}});
    }
    return a;
}

}  // namespace mwrat
