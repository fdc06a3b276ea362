#include <catch2/catch_amalgamated.hpp>

#include "acg/connectivity.hpp"
#include "acg/json_io.hpp"
#include "acg/text.hpp"
#include "helpers.hpp"

using namespace acg;
using testutil::at;
using testutil::setof;

TEST_CASE("group parsing") {
    CHECK(parse_group("4,2").factors() == std::vector<int>{4, 2});
    CHECK(parse_group(" 8 ").order() == 8);
    CHECK(parse_group("").order() == 1);
    CHECK_THROWS_AS(parse_group("4,x"), ParseError);
    CHECK_THROWS_AS(parse_group("4,1"), InvalidSpecError);
}

TEST_CASE("element parsing accepts indices, coordinates and tuples") {
    GroupSpec g = parse_group("4,2");
    CHECK(parse_element(g, "3,1") == at(g, {3, 1}));
    CHECK(parse_element(g, "(3,1)") == at(g, {3, 1}));
    CHECK(parse_element(g, "5") == 5);
    CHECK_THROWS_AS(parse_element(g, "9"), ParseError);
    CHECK_THROWS_AS(parse_element(g, "(4,0)"), ParseError);

    GroupSpec z7 = parse_group("7");
    CHECK(parse_element(z7, "3") == 3);
}

TEST_CASE("subset parsing") {
    GroupSpec z8 = parse_group("8");
    CHECK(parse_subset(z8, "{1,3,5}") == setof(z8, {1, 3, 5}));
    CHECK(parse_subset(z8, "{}").empty());
    CHECK(parse_subset(z8, "complement:{0}") == setof(z8, {1, 2, 3, 4, 5, 6, 7}));

    GroupSpec g = parse_group("4,2");
    CHECK(parse_subset(g, "{(1,0),(0,1)}") == setof(g, {at(g, {1, 0}), at(g, {0, 1})}));
    CHECK_THROWS_AS(parse_subset(g, "1,2"), ParseError);
    CHECK_THROWS_AS(parse_subset(g, "{1,"), ParseError);
}

TEST_CASE("rendering round-trips through the parser") {
    GroupSpec g = parse_group("4,2");
    IndexSet s = setof(g, {1, at(g, {1, 0}), at(g, {3, 1})});
    CHECK(parse_subset(g, subset_to_string(g, s)) == s);
    CHECK(parse_group(group_to_string(g)) == g);

    GroupSpec z5 = parse_group("5");
    CHECK(element_to_string(z5, 3) == "3");
    CHECK(element_to_string(g, at(g, {2, 1})) == "(2,1)");
}

TEST_CASE("report JSON round-trips byte-identically") {
    struct Case {
        std::string group, set;
    };
    for (const Case& c : {Case{"8", "{1}"},          // lambda-star branch with fragment
                          Case{"5", "{1,4}"},        // eta branch with fragment
                          Case{"4", "{1,3}"},        // degree branch
                          Case{"2,2", "complement:{0}"}, // complete
                          Case{"4,2", "{(1,0),(0,1),(1,1),(2,1),(3,1)}"}}) {
        GroupSpec g = parse_group(c.group);
        IndexSet s = parse_subset(g, c.set);
        KappaReport rep = kappa_formula(g, s);
        std::string dumped = report_to_string(rep);
        KappaReport parsed = report_from_string(dumped);
        CHECK(report_to_string(parsed) == dumped);
        CHECK(parsed.kappa == rep.kappa);
        CHECK(parsed.branch == rep.branch);
        CHECK(parsed.subset == rep.subset);
    }
}

TEST_CASE("report JSON carries the documented fields") {
    GroupSpec z8 = parse_group("8");
    ordered_json j = report_to_json(kappa_formula(z8, setof(z8, {1})));
    CHECK(j.at("kappa") == 0);
    CHECK(j.at("branch") == "lambda-star");
    CHECK(j.at("eta").is_null());
    CHECK(j.at("lambda") == 0);
    CHECK(j.at("lambda_star") == 0);
    CHECK(j.at("witness").at("subgroup") == ordered_json::array({0}));
    CHECK(j.at("witness").at("G0").size() == 8);
    CHECK(j.at("witness").at("g0") == 1);
    CHECK(j.at("fragment").at("vertices") == ordered_json::array({4, 5}));
    CHECK(j.at("fragment").at("boundary") == ordered_json::array());

    ordered_json jd = report_to_json(kappa_formula(z8, IndexSet(8)));
    CHECK(jd.at("branch") == "degree");
    CHECK(jd.at("witness").is_null());
    CHECK(jd.at("fragment").is_null());
}

TEST_CASE("malformed report documents are rejected") {
    CHECK_THROWS_AS(report_from_string("not json"), ParseError);
    CHECK_THROWS_AS(report_from_string("{\"group\":[4]}"), ParseError);
    GroupSpec z4 = parse_group("4");
    ordered_json j = report_to_json(kappa_formula(z4, setof(z4, {1, 3})));
    j["branch"] = "bogus";
    CHECK_THROWS_AS(report_from_json(j), ParseError);
}
