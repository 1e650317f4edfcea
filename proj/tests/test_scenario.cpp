#include <doctest.h>

#include "boundsat/encoder.hpp"
#include "boundsat/scenario.hpp"
#include "helpers.hpp"

using namespace boundsat;

namespace {
Scenario te() { return load_scenario(testutil::read_file(testutil::data_path("te.json"))); }
} // namespace

TEST_CASE("TE fixture loads with 12 variables and 3 disturbances") {
    Scenario s = te();
    CHECK(s.name == "TE");
    REQUIRE(s.variables.size() == 12);
    CHECK(s.variables.front().name == "FeedA");
    CHECK(s.variables.front().safe.lo == Rational(24));
    CHECK(s.variables.front().safe.hi == Rational(30));
    CHECK(s.variables.back().name == "Production");
    REQUIRE(s.disturbances.size() == 3);
    CHECK(s.disturbances[0].id == "IDV(1)");
    CHECK(s.disturbances[1].id == "IDV(11)");
    CHECK(s.disturbances[2].id == "IDV(13)");
    REQUIRE(s.domain_spec.has_value());
    CHECK(s.domain_spec->subdomains.size() == 4);
    CHECK(s.domain_spec->form == CompositionForm::AndOfOrs);
    CHECK(s.find_variable("ReactorPressure") != nullptr);
    CHECK(s.find_variable("FeedZ") == nullptr);
    CHECK(s.find_disturbance("IDV(11)") != nullptr);
    CHECK(s.find_disturbance("IDV(2)") == nullptr);
}

TEST_CASE("observed entries keep declaration order") {
    Scenario s = te();
    const DisturbanceCase* d = s.find_disturbance("IDV(1)");
    REQUIRE(d != nullptr);
    REQUIRE(d->observed.size() == 12);
    for (std::size_t i = 0; i < d->observed.size(); ++i)
        CHECK(d->observed[i].first == s.variables[i].name);
}

TEST_CASE("rejection cases") {
    CHECK_THROWS_AS(load_scenario("not json"), ScenarioError);
    CHECK_THROWS_AS(load_scenario("[1,2]"), ScenarioError);

    SUBCASE("unknown top-level field") {
        CHECK_THROWS_WITH_AS(
            load_scenario(R"({"name":"x","variables":[],"extra":1})"),
            doctest::Contains("unknown field 'extra'"), ScenarioError);
    }
    SUBCASE("unknown variable field") {
        CHECK_THROWS_AS(load_scenario(
                            R"({"name":"x","variables":[{"name":"A","unit":"%","safe":[0,1],"color":"red"}]})"),
                        ScenarioError);
    }
    SUBCASE("duplicate variable") {
        CHECK_THROWS_WITH_AS(
            load_scenario(R"({"name":"x","variables":[
                {"name":"A","unit":"%","safe":[0,1]},
                {"name":"A","unit":"%","safe":[0,1]}]})"),
            doctest::Contains("duplicate variable name 'A'"), ScenarioError);
    }
    SUBCASE("lo > hi") {
        CHECK_THROWS_WITH_AS(
            load_scenario(R"({"name":"x","variables":[{"name":"A","unit":"%","safe":[2,1]}]})"),
            doctest::Contains("lo > hi"), ScenarioError);
    }
    SUBCASE("floats must be decimal strings") {
        CHECK_THROWS_WITH_AS(
            load_scenario(R"({"name":"x","variables":[{"name":"A","unit":"%","safe":[0.5,1]}]})"),
            doctest::Contains("decimal string"), ScenarioError);
        Scenario ok = load_scenario(
            R"({"name":"x","variables":[{"name":"A","unit":"%","safe":["0.5",1]}]})");
        CHECK(ok.variables[0].safe.lo == Rational(1, 2));
    }
    SUBCASE("observed names must be declared") {
        CHECK_THROWS_WITH_AS(
            load_scenario(R"({"name":"x","variables":[{"name":"A","unit":"%","safe":[0,1]}],
                "disturbances":[{"id":"d","observed":{"FeedZ":[0,1]}}]})"),
            doctest::Contains("unknown variable 'FeedZ'"), ScenarioError);
    }
    SUBCASE("domain spec names must be declared") {
        CHECK_THROWS_WITH_AS(
            load_scenario(R"({"name":"x","variables":[{"name":"A","unit":"%","safe":[0,1]}],
                "domain_spec":{"subdomains":[{"name":"D1","terms":[[{"var":"B","side":"lower"}]]}],
                "composition":{"form":"and_of_ors","groups":[["D1"]]}}})"),
            doctest::Contains("unknown variable 'B'"), ScenarioError);
    }
    SUBCASE("duplicate disturbance id") {
        CHECK_THROWS_AS(load_scenario(R"({"name":"x","variables":[],
            "disturbances":[{"id":"d","observed":{}},{"id":"d","observed":{}}]})"),
                        ScenarioError);
    }
}

TEST_CASE("bound map numbers lower then upper in declaration order") {
    Scenario s = te();
    BoundMap m(s);
    REQUIRE(m.size() == 24);
    CHECK(m.at(1).variable == "FeedA");
    CHECK(m.at(1).side == Side::Lower);
    CHECK(m.at(2).variable == "FeedA");
    CHECK(m.at(2).side == Side::Upper);
    CHECK(m.at(7).variable == "FeedE");
    CHECK(m.at(8).side == Side::Upper);
    CHECK(m.var_for("FeedA", Side::Lower) == 1);
    CHECK(m.var_for("FeedE", Side::Upper) == 8);
    CHECK(m.var_for("Production", Side::Upper) == 24);
    CHECK(m.var_for("FeedZ", Side::Lower) == 0);
}

TEST_CASE("bound valuation under IDV(1)") {
    Scenario s = te();
    BoundMap m(s);
    std::vector<bool> val = valuate_bounds(s, *s.find_disturbance("IDV(1)"), m);
    REQUIRE(val.size() == 24);
    // FeedA observed [28,100] vs safe [24,30]
    CHECK(val[m.var_for("FeedA", Side::Lower) - 1]);
    CHECK_FALSE(val[m.var_for("FeedA", Side::Upper) - 1]);
    // FeedD observed [62,64] matches its safe interval exactly
    CHECK(val[m.var_for("FeedD", Side::Lower) - 1]);
    CHECK(val[m.var_for("FeedD", Side::Upper) - 1]);
    // Price observed [50,250] breaches both sides of [100,120]
    CHECK_FALSE(val[m.var_for("Price", Side::Lower) - 1]);
    CHECK_FALSE(val[m.var_for("Price", Side::Upper) - 1]);
}

TEST_CASE("unobserved variables valuate true") {
    Scenario s = load_scenario(R"({"name":"x","variables":[
        {"name":"A","unit":"%","safe":[0,1]},
        {"name":"B","unit":"%","safe":[0,1]}],
        "disturbances":[{"id":"d","observed":{"A":[5,6]}}]})");
    BoundMap m(s);
    std::vector<bool> val = valuate_bounds(s, s.disturbances[0], m);
    CHECK(val == std::vector<bool>{true, false, true, true});
}

TEST_CASE("containment is non-strict at the endpoints") {
    Scenario s = load_scenario(R"({"name":"x","variables":[
        {"name":"A","unit":"%","safe":["24.5","30.5"]}],
        "disturbances":[{"id":"d","observed":{"A":["24.5","30.5"]}}]})");
    BoundMap m(s);
    std::vector<bool> val = valuate_bounds(s, s.disturbances[0], m);
    CHECK(val == std::vector<bool>{true, true});
}
