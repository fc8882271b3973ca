#include <doctest.h>

#include "ech/errors.hpp"
#include "ech/index_calculus.hpp"
#include "ech/json_io.hpp"

using namespace ech;

TEST_CASE("complex values in JSON") {
    CHECK(complex_from_json(Json::array({"1/2", "-3"})) == ComplexQ{Rational(1, 2), Rational(-3)});
    CHECK(complex_from_json(Json(7)) == ComplexQ{7});
    CHECK(complex_from_json(Json("2-3i")) == ComplexQ{2, -3});
    CHECK(complex_from_json(Json::array({1, 2})) == ComplexQ{1, 2});
    // Binary floats are rejected in exact context.
    CHECK_THROWS_AS(complex_from_json(Json::array({0.1, 0})), Error);
    ComplexQ z{Rational(-3, 7), Rational(5)};
    CHECK(complex_from_json(complex_to_json(z)) == z);
}

TEST_CASE("curve documents round trip") {
    CurveData c;
    c.ends.push_back({make_hyperbolic("b0", 1, 2.5), 3, EndSign::negative});
    c.ends.push_back({make_hyperbolic("h", 0, 4.0), 1, EndSign::positive});
    c.genus = 1;
    c.rel_c1 = 2;
    c.rel_q = -3;
    c.delta = 1;
    Json doc = curve_to_json(c);
    CurveData back = curve_from_json(doc);
    CHECK(back.genus == c.genus);
    CHECK(back.rel_c1 == c.rel_c1);
    CHECK(back.rel_q == c.rel_q);
    CHECK(back.delta == c.delta);
    REQUIRE(back.ends.size() == c.ends.size());
    CHECK(fredholm_index(back) == fredholm_index(c));
    CHECK(ech_index(back) == ech_index(c));

    // Elliptic rotations travel as exact strings.
    CurveData ell;
    ell.ends.push_back({make_elliptic("e", Rational(2, 7), 1.0), 1, EndSign::positive});
    Json edoc = curve_to_json(ell);
    CHECK(curve_from_json(edoc).ends[0].orbit.elliptic_rotation() == Rational(2, 7));
}

TEST_CASE("gluing problems round trip") {
    GluingProblem p;
    p.cfg.p = {ComplexQ{0}, ComplexQ{1}, ComplexQ{2}, ComplexQ{Rational(7, 2)}};
    p.cfg.q = {ComplexQ{-5, 1}};
    p.cfg.theta = 0.25;
    p.cfg.big_t = 1.5;
    p.asym.alpha = {{ComplexQ{1}}, {ComplexQ{2}}, {ComplexQ{3}}, {ComplexQ{4}}};
    p.backend = "exact";
    p.restriction = std::vector<ComplexQ>{ComplexQ{1}, ComplexQ{2}};
    Json j = gluing_to_json(p);
    GluingProblem back = gluing_from_json(j);
    CHECK(back.cfg.p == p.cfg.p);
    CHECK(back.cfg.q == p.cfg.q);
    CHECK(back.asym.alpha == p.asym.alpha);
    CHECK(back.backend == "exact");
    REQUIRE(back.restriction.has_value());
    CHECK(*back.restriction == *p.restriction);

    Json bad = j;
    bad["backend"] = "fuzzy";
    CHECK_THROWS_AS(gluing_from_json(bad), Error);
    bad = j;
    bad["p"] = Json::array({Json::array({0, 0})});
    CHECK_THROWS_AS(gluing_from_json(bad), Error);
}

TEST_CASE("chain fixtures parse") {
    Json j = Json::parse(R"({
      "L": 10.0,
      "orbits": {
        "a": {"kind": "positive_hyperbolic", "rotation": 0, "action": 3.0},
        "b": {"kind": "negative_hyperbolic", "rotation": 1, "action": 1.0}
      },
      "generators": [
        {"orbits": [["a", 1]]},
        {"orbits": [["b", 1]], "action": 1.0}
      ],
      "diff": [[0, 1]],
      "cobordism": {"direct": [[0, 1]], "building": [], "building_alt": [[0, 1]]},
      "expect": {"complex_ok": true}
    })");
    ChainFixture f = chain_fixture_from_json(j, "inline");
    CHECK(f.source.generators.size() == 2);
    CHECK(f.source.diff.count({0, 1}) == 1);
    REQUIRE(f.cobordism.has_value());
    CHECK(f.cobordism->direct.count({0, 1}) == 1);
    REQUIRE(f.building_alt.has_value());
    CHECK(f.expect["complex_ok"].get<bool>());

    // A declared action that disagrees with the orbit data is a schema error.
    Json bad = j;
    bad["generators"][1]["action"] = 2.0;
    CHECK_THROWS_AS(chain_fixture_from_json(bad, "bad"), Error);
}
