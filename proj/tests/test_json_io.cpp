#include "mwrat/catalog.hpp"
#include "mwrat/errors.hpp"
#include "mwrat/json_io.hpp"
#include "mwrat/sampling.hpp"

#include "doctest.h"

using namespace mwrat;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("matrices and rationals serialize as decimal strings") {
    CHECK(to_json(IntVector{1, -2}).dump() == R"(["1","-2"])");
    CHECK(to_json(IntMatrix{{1, 2}, {3, 4}}).dump() == R"([["1","2"],["3","4"]])");
    RatMatrix r(1, 2);
    r(0, 0) = Rat(1, 2);
    r(0, 1) = Rat(-3);
    CHECK(to_json(r).dump() == R"([["1/2","-3/1"]])");
    const Json g = to_json(AbelianGroupInvariants{2, {Int(2), Int(4)}});
    CHECK(g["free_rank"] == 2);
    CHECK(g["torsion"].dump() == R"(["2","4"])");
}

TEST_CASE("number readers") {
    CHECK(int_from_json(Json("123456789012345678901234567890"), "/x") == Int("123456789012345678901234567890"));
    CHECK(int_from_json(Json(-7), "/x") == -7);
    CHECK(rat_from_json(Json("6/4"), "/x") == Rat(3, 2));
    CHECK(rat_from_json(Json(5), "/x") == 5);
    CHECK(int_matrix_from_json(parse_json_text(R"([[1,"2"],[3,4]])"), "/m") == IntMatrix{{1, 2}, {3, 4}});
    CHECK(error_of([] { int_from_json(Json("abc"), "/c/0"); }).find("/c/0") != std::string::npos);
    CHECK(error_of([] { rat_from_json(Json("1/0"), "/r"); }).find("/r") != std::string::npos);
    CHECK(error_of([] { int_from_json(Json(1.5), "/f"); }).find("/f") != std::string::npos);
    CHECK(error_of([] { int_matrix_from_json(parse_json_text("[[1,2],[3]]"), "/m"); }).find("/m") != std::string::npos);
}

TEST_CASE("malformed JSON reports a location") {
    const std::string msg = error_of([] { parse_json_text("{\"a\": [1,2,}", "bad.json"); });
    CHECK(msg.rfind("bad.json:1:12", 0) == 0);
    CHECK(error_of([] { load_json_file("/nonexistent/file.json"); }).find("/nonexistent/file.json") != std::string::npos);
}

TEST_CASE("scenario round trip") {
    for (const auto& e : scenario_catalog(1, 2)) {
        const Json j = scenario_to_json(e.scenario);
        const Scenario back = scenario_from_json(parse_json_text(j.dump()));
        CHECK(back.name == e.scenario.name);
        CHECK(back.model == e.scenario.model);
        CHECK(back.fiber == e.scenario.fiber);
        CHECK(back.sections == e.scenario.sections);
        REQUIRE(back.fibers.size() == e.scenario.fibers.size());
        for (std::size_t f = 0; f < back.fibers.size(); ++f)
            for (std::size_t c = 0; c < back.fibers[f].components.size(); ++c) {
                CHECK(back.fibers[f].components[c].cls == e.scenario.fibers[f].components[c].cls);
                CHECK(back.fibers[f].components[c].name == e.scenario.fibers[f].components[c].name);
            }
        CHECK(scenario_to_json(back) == j);
    }
}

TEST_CASE("scenario schema errors") {
    CHECK(error_of([] { scenario_from_json(parse_json_text(R"({"degree":1})")); }).find("genus") != std::string::npos);
    const std::string wrong_length = error_of([] {
        scenario_from_json(parse_json_text(
            R"({"genus":1,"degree":1,"n":8,"fiber":[2,3,1,1,1,1,1,1,1,1],"sections":[[0,0,1]],"fibers":[]})"));
    });
    CHECK(wrong_length.find("/sections/0") != std::string::npos);
    const Scenario minimal = scenario_from_json(parse_json_text(
        R"({"genus":1,"degree":1,"n":8,"fiber":[2,3,1,1,1,1,1,1,1,1],"sections":[[0,0,0,0,0,0,0,0,0,-1]],"fibers":[]})"));
    CHECK(minimal.fibers.empty());
    CHECK(validate_scenario(minimal).all_passed());
}

TEST_CASE("pencil coefficients round trip") {
    Rng rng(41);
    for (int g = 1; g <= 3; ++g)
        for (int trial = 0; trial < 20; ++trial) {
            const auto pc = random_pencil(g, rng);
            const auto back = pencil_from_json(parse_json_text(pencil_to_json(pc).dump()));
            CHECK(back.genus() == pc.genus());
            CHECK(back.values() == pc.values());
        }
    const auto over = pencil_from_json(parse_json_text(R"({"genus":1,"c":{"2,0":"1","0,1":"1","2,3":"2/3"}})"), 2);
    CHECK(over.genus() == 2);
    CHECK(over.get(2, 3) == Rat(2, 3));
    CHECK_THROWS_AS(pencil_from_json(parse_json_text(R"({"c":{"2,0":"1","0,1":"1"}})")), InputError);
    CHECK(error_of([] { pencil_from_json(parse_json_text(R"({"genus":1,"c":{"2;0":"1"}})")); }).find("2;0") !=
          std::string::npos);
    CHECK(error_of([] { pencil_from_json(parse_json_text(R"({"genus":1,"c":{"0,0":"1","2,0":"1","0,1":"1"}})")); })
              .find("c_{0,0}") != std::string::npos);
}

TEST_CASE("double cover serialization") {
    const DoubleCoverCoefficients dc(1, Rat(4), Rat(-4), {Rat(1), Rat(0), Rat(1, 3)});
    const Json j = double_cover_to_json(dc);
    CHECK(j["genus"] == 1);
    CHECK(j["b"]["0,3"] == "4/1");
    CHECK(j["b"]["1,0"] == "-4/1");
    CHECK(j["b"]["1,3"] == "1/3");
}

TEST_CASE("polynomial round trip") {
    const SparsePoly t = SparsePoly::variable(Var::T), y = SparsePoly::variable(Var::Y);
    const SparsePoly f = t.pow(2) * y - SparsePoly::constant(Rat(1, 4)) * y.pow(9);
    CHECK(poly_from_json(parse_json_text(poly_to_json(f).dump())) == f);
    CHECK(poly_from_json(parse_json_text(R"([{"exp":[2],"coef":"1"},{"exp":[0,0,3],"coef":1}])")) == t.pow(2) + y.pow(3));
    CHECK(error_of([] { poly_from_json(parse_json_text(R"([{"exp":[1,2,3,4,5],"coef":"1"}])")); }).find("/0/exp") !=
          std::string::npos);
    CHECK_THROWS_AS(poly_from_json(parse_json_text(R"({"exp":[1]})")), InputError);
}
