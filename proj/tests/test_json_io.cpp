#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsf/json_io.hpp"

using namespace dsf;

namespace {

std::string error_of(const std::function<void()> &fn)
{
    try {
        fn();
    } catch (const parse_error &e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("algebra names parse and round trip")
{
    for (auto a : {SuperalgebraId::gl(6, 7), SuperalgebraId::sl(2, 1), SuperalgebraId::osp(11, 10), SuperalgebraId::pn(9),
                   SuperalgebraId::qn(4), SuperalgebraId::d21a(1, 2), SuperalgebraId::d21a(2, 3), SuperalgebraId::g3(),
                   SuperalgebraId::f4()})
        CHECK(parse_algebra(a.name()) == a);
    CHECK(parse_algebra(" gl( 2 | 3 ) ") == SuperalgebraId::gl(2, 3));
    CHECK(parse_algebra("D(2|1;1/2)") == SuperalgebraId::d21a(1, 2));
    CHECK_THROWS_AS(parse_algebra("D(2|1;2/4)"), domain_error);
}

TEST_CASE("algebra parse errors carry a column")
{
    CHECK(error_of([] { parse_algebra("gl(2,3)"); }).find("column 5") != std::string::npos);
    CHECK(error_of([] { parse_algebra("xyz"); }).find("column 1") != std::string::npos);
    CHECK(error_of([] { parse_algebra("p(3)x"); }).find("column 5") != std::string::npos);
    CHECK_THROWS_AS(parse_algebra("osp(3|3)"), domain_error);
}

TEST_CASE("weights parse")
{
    auto g = SuperalgebraId::gl(2, 1);
    CHECK(parse_weight(g, "3,0|1") == Weight::ints({3, 0}, {1}));
    CHECK(parse_weight(g, " 3 , 0 | -1 ") == Weight::ints({3, 0}, {-1}));
    CHECK(parse_weight(SuperalgebraId::pn(3), "0,1,2") == Weight::ints({0, 1, 2}));
    CHECK(parse_weight(SuperalgebraId::osp(3, 2), "1/2|0") == Weight({Half::from_twice(1)}, {Half(0)}));
    CHECK(parse_weight(SuperalgebraId::osp(1, 2), "|2") == Weight::ints({}, {2}));
    CHECK_THROWS_AS(parse_weight(g, "3|1"), parse_error);
    CHECK_THROWS_AS(parse_weight(g, "3,0|1|2"), parse_error);
    CHECK(error_of([&] { parse_weight(g, "3,x|1"); }).find("column 3") != std::string::npos);
    CHECK(error_of([&] { parse_weight(g, "3,1/3|1"); }).find("column 3") != std::string::npos);
    CHECK_THROWS_AS(parse_weight(g, "3,,0|1"), parse_error);
}

TEST_CASE("weight and character JSON")
{
    auto w = Weight({Half::from_twice(3), Half(-1)}, {Half(2)});
    auto j = weight_json(w);
    CHECK(j.dump() == R"({"eps":["3/2","-1"],"delta":["2"]})");
    CHECK(weight_from_json(j) == w);
    auto k = kac_supercharacter(SuperalgebraId::gl(2, 1), Weight::ints({2, 0}, {1}));
    CHECK(character_from_json(character_json(k)) == k);
    CHECK(character_from_json(json::parse(character_json(k).dump())) == k);
}

TEST_CASE("DS result JSON")
{
    auto R = ds1_simple(SuperalgebraId::osp(6, 6), Weight::ints({6, 2, -1}, {6, 2, 1}));
    auto j = ds_result_json(R);
    CHECK(j["input"]["algebra"] == "osp(6|6)");
    CHECK(j["input"]["convention"] == "dex");
    CHECK(j["output"].size() == 4);
    int plus = 0, minus = 0;
    for (auto &e : j["output"]) {
        plus += e["sign"] == "+";
        minus += e["sign"] == "-";
    }
    CHECK(plus == 2);
    CHECK(minus == 2);
    auto p = ds_result_json(ds1_simple(SuperalgebraId::pn(9), Weight::ints({0, 0, 1, 3, 3, 6, 8, 8, 8})));
    for (auto &e : p["output"])
        CHECK(e["sign"] == "none");
}

TEST_CASE("text output")
{
    auto R = ds1_simple(SuperalgebraId::osp(11, 10), Weight::ints({9, 8, 4, 1, 0}, {8, 7, 3, 0, 0}));
    auto t = ds_result_text(R, 1);
    CHECK(t.find("Pi L(9,4,1,0|8,3,0,0)^2") != std::string::npos);
    CHECK(t.find("  L(9,8,4,1|8,7,3,0)") != std::string::npos);
    CHECK(ds_result_text(ds1_simple(SuperalgebraId::gl(2, 1), Weight::ints({3, 0}, {1})), 1).find("  0\n") !=
          std::string::npos);
    CHECK(weight_text(Weight::ints({0, 1})) == "(0,1)");
    CHECK(character_text(SuperCharacter::one_minus(Weight::ints({-1}, {1}))) == "e(0|0) - e(-1|1)");
    CHECK(character_text(SuperCharacter()) == "0");
}

TEST_CASE("orbit tables")
{
    auto rows = orbit_table(SuperalgebraId::gl(2, 2));
    CHECK(rows.size() == 3);
    auto j = orbit_table_json(rows);
    CHECK(j[1]["orbit_count"] == 2);
    CHECK(j[2]["dims"][0] == 4);
    CHECK(orbit_table(SuperalgebraId::gl(2, 2), 1).size() == 1);
    CHECK_THROWS_AS(orbit_table(SuperalgebraId::gl(2, 2), 3), domain_error);
    auto t = orbit_table_text(SuperalgebraId::gl(2, 2), rows);
    CHECK(t.rfind("gl(2|2) defect 2\n", 0) == 0);
}

TEST_CASE("module JSON errors")
{
    auto g = SuperalgebraId::gl(1, 1);
    auto bad_rows = json::parse(R"({"basis":[{"weight":{"eps":["0"],"delta":["0"]},"parity":0}],
                                    "actions":{"E_1_1":[[1],[0]]}})");
    CHECK_THROWS_AS(module_from_json(g, bad_rows), domain_error);
    auto bad_weight = json::parse(R"({"basis":[{"weight":{"eps":["0","0"],"delta":["0"]},"parity":0}],"actions":{}})");
    CHECK_THROWS_AS(module_from_json(g, bad_weight), domain_error);
    auto mixed = json::parse(R"({"basis":[{"weight":{"eps":["0"],"delta":["0"]},"parity":0},
                                          {"weight":{"eps":["0"],"delta":["0"]},"parity":1}],
                                 "actions":{"E_1_2":[[1,1],[0,0]]}})");
    CHECK_THROWS_AS(module_from_json(g, mixed), domain_error);
}
