#include <doctest.h>

#include "ech/errors.hpp"
#include "ech/index_calculus.hpp"

using namespace ech;

namespace {

CurveData trivial_cylinder() {
    ReebOrbitSpec b = make_hyperbolic("b", 1, 1.0);
    CurveData c;
    c.ends.push_back({b, 1, EndSign::positive});
    c.ends.push_back({b, 1, EndSign::negative});
    return c;
}

}  // namespace

TEST_CASE("Conley-Zehnder index of covers") {
    CHECK(cz_index(make_hyperbolic("a", 1), 3) == 3);
    CHECK(cz_index(make_hyperbolic("a", 0), 5) == 0);
    CHECK(cz_index(make_hyperbolic("a", -3), 2) == -6);
    // 2*floor(3 * 2/7) + 1 = 2*floor(6/7) + 1 = 1
    CHECK(cz_index(make_elliptic("e", Rational(2, 7)), 3) == 1);
    CHECK(cz_index(make_elliptic("e", Rational(2, 7)), 4) == 3);
    CHECK_THROWS_AS(cz_index(make_elliptic("e", Rational(1, 2)), 2), InvalidConfiguration);
    CHECK_THROWS_AS(cz_index(make_hyperbolic("a", 1), 0), PreconditionViolated);
}

TEST_CASE("orbit set totals") {
    ReebOrbitSpec neg = make_hyperbolic("n", 1, 1.0);
    OrbitSet s{{{neg, 3}}};
    CzTotals t = cz_totals(s);
    CHECK(t.mu == 3);
    CHECK(t.mu_i == 1 + 2 + 3);

    CHECK(cz_totals(OrbitSet{}).mu == 0);
    CHECK(cz_totals(OrbitSet{}).mu_i == 0);

    OrbitSet two{{{make_hyperbolic("p1", 0), 1}, {make_hyperbolic("p2", 0), 1}}};
    CHECK(cz_totals(two).mu == 0);
    CHECK(cz_totals(two).mu_i == 0);
}

TEST_CASE("Fredholm index") {
    // Pair of pants: one positive end at rotation 1, two negative at rotation 0.
    CurveData c;
    c.ends.push_back({make_hyperbolic("a", 1), 1, EndSign::positive});
    c.ends.push_back({make_hyperbolic("b", 0), 1, EndSign::negative});
    c.ends.push_back({make_hyperbolic("c", 0), 1, EndSign::negative});
    CHECK(fredholm_index(c) == 2);

    CHECK(fredholm_index(trivial_cylinder()) == 0);
    CHECK(cover_fredholm(0, 3, 2) == 2);
    CHECK(cover_fredholm(1, 1, 0) == 1);
    CHECK(cover_fredholm(2, 4, 5) == 13);

    CurveData ell = trivial_cylinder();
    ell.ends[0].orbit = make_elliptic("e", Rational(2, 7));
    CHECK_THROWS_AS(fredholm_index(ell), PreconditionViolated);
}

TEST_CASE("ECH index") {
    CHECK(ech_index(trivial_cylinder()) == 0);

    // Embedded plane over a negative hyperbolic orbit with rotation 1.
    CurveData plane;
    plane.ends.push_back({make_hyperbolic("g", 1), 1, EndSign::positive});
    plane.rel_q = -1;
    CHECK(ech_index(plane) == 0);
    CHECK(fredholm_index(plane) == 0);

    // Unbranched disconnected double cover: Q scales quadratically.
    CurveData cover;
    cover.components = 2;
    cover.ends.push_back({make_hyperbolic("g", 1), 1, EndSign::positive});
    cover.ends.push_back({make_hyperbolic("g", 1), 1, EndSign::positive});
    cover.rel_q = -4;
    CHECK(ech_index(cover) == -1);
    CHECK(ech_index(cover) == degenerate_cover_index(2));
}

TEST_CASE("degenerate cover index") {
    CHECK(degenerate_cover_index(1) == 0);
    CHECK(degenerate_cover_index(2) == -1);
    CHECK(degenerate_cover_index(5) == -10);
    CHECK_THROWS_AS(degenerate_cover_index(0), PreconditionViolated);
}

TEST_CASE("multiple cover lower bound") {
    CHECK(cover_index_lower_bound(0, 2, 0, 0, 1) == -1);
    CHECK(cover_index_lower_bound(0, 1, 7, 9, 11) == 0);
    CHECK(cover_index_lower_bound(1, 3, 1, 2, 2) == 15);
}

TEST_CASE("relative adjunction bookkeeping") {
    CHECK(adjunction_c1(0, 0, 0, 0) == 0);
    CHECK(adjunction_c1(-1, 2, 3, 1) == 2);
}

TEST_CASE("disjoint unions add indices") {
    CurveData a = trivial_cylinder();
    CurveData b;
    b.ends.push_back({make_hyperbolic("x", 2), 2, EndSign::positive});
    b.genus = 1;
    b.rel_c1 = 3;
    b.rel_q = -2;
    CurveData u = disjoint_union(a, b);
    CHECK(u.components == 2);
    CHECK(u.euler_characteristic() == a.euler_characteristic() + b.euler_characteristic());
    CHECK(fredholm_index(u) == fredholm_index(a) + fredholm_index(b));
    CHECK(ech_index(u) == ech_index(a) + ech_index(b));
}

TEST_CASE("formal gluing pairs matching ends") {
    CurveData top;
    top.ends.push_back({make_hyperbolic("a", 1), 1, EndSign::positive});
    top.ends.push_back({make_hyperbolic("g", 1), 1, EndSign::negative});
    top.ends.push_back({make_hyperbolic("g", 1), 1, EndSign::negative});
    CurveData bottom;
    bottom.ends.push_back({make_hyperbolic("g", 1), 1, EndSign::positive});
    bottom.ends.push_back({make_hyperbolic("g", 1), 1, EndSign::positive});
    bottom.ends.push_back({make_hyperbolic("z", 0), 1, EndSign::negative});
    CurveData g = formal_glue(top, bottom);
    CHECK(g.ends.size() == 2);
    CHECK(g.euler_characteristic() ==
          top.euler_characteristic() + bottom.euler_characteristic());
    CHECK(fredholm_index(g) == fredholm_index(top) + fredholm_index(bottom));
    CHECK(ech_index(g) == ech_index(top) + ech_index(bottom));

    bottom.ends[1].multiplicity = 2;
    CHECK_THROWS_AS(formal_glue(top, bottom), InvalidConfiguration);
}

TEST_CASE("trivialization shifts keep the indices") {
    CurveData c;
    c.ends.push_back({make_hyperbolic("a", 1), 2, EndSign::positive});
    c.ends.push_back({make_hyperbolic("a", 1), 1, EndSign::negative});
    c.ends.push_back({make_hyperbolic("b", 0), 1, EndSign::negative});
    c.rel_c1 = 2;
    c.rel_q = 1;
    for (long shift : {-2L, 1L, 3L}) {
        CurveData s = retrivialize(c, "a", shift);
        CHECK(fredholm_index(s) == fredholm_index(c));
        CHECK(ech_index(s) == ech_index(c));
        CHECK(s.ends[0].orbit.hyperbolic_rotation() == 1 + 2 * shift);
    }
}

TEST_CASE("kind and rotation parity are enforced") {
    ReebOrbitSpec bad;
    bad.id = "bad";
    bad.kind = OrbitKind::positive_hyperbolic;
    bad.rotation = 1L;
    CHECK_THROWS_AS(bad.validate(), InvalidConfiguration);
    bad.kind = OrbitKind::negative_hyperbolic;
    CHECK_NOTHROW(bad.validate());
    CHECK_THROWS_AS(make_elliptic("e", Rational(3, 2)), InvalidConfiguration);
}
