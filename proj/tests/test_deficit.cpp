#include <doctest.h>

#include "ech/deficit.hpp"
#include "ech/errors.hpp"
#include "ech/index_calculus.hpp"
#include "ech/sampling.hpp"

using namespace ech;

TEST_CASE("partition conditions table") {
    CHECK(partition_check(OrbitKind::negative_hyperbolic, {2, 2, 1}));
    CHECK(partition_check(OrbitKind::positive_hyperbolic, {1}));
    CHECK_FALSE(partition_check(OrbitKind::negative_hyperbolic, {3, 1, 1}));
    CHECK(partition_check(OrbitKind::negative_hyperbolic, {2, 2}));
    CHECK(partition_check(OrbitKind::negative_hyperbolic, {1}));
    CHECK_FALSE(partition_check(OrbitKind::negative_hyperbolic, {1, 1}));
    CHECK_FALSE(partition_check(OrbitKind::negative_hyperbolic, {2, 1, 1}));
    CHECK_FALSE(partition_check(OrbitKind::positive_hyperbolic, {2}));
    CHECK_THROWS_AS(partition_check(OrbitKind::elliptic, {1}), PreconditionViolated);
}

TEST_CASE("deficit at one orbit") {
    CHECK(deficit_at_orbit(OrbitKind::negative_hyperbolic, {1, 1, 1}) == 3);
    CHECK(deficit_at_orbit(OrbitKind::negative_hyperbolic, {2, 2, 1}) == 0);
    CHECK(deficit_at_orbit(OrbitKind::positive_hyperbolic, {1, 1}) == 0);
    CHECK(deficit_at_orbit(OrbitKind::negative_hyperbolic, {3, 1, 1}) == 4);
    CHECK(deficit_at_orbit(OrbitKind::positive_hyperbolic, {3, 2}) == 3);
    CHECK(deficit_at_orbit(OrbitKind::negative_hyperbolic, {4}) == 1);
}

TEST_CASE("deficit is blockwise permutation invariant") {
    Sampler rng(42);
    for (int t = 0; t < 200; ++t) {
        long m = rng.uniform(1, 25);
        std::vector<long> q = rng.partition(m);
        long base = deficit_at_orbit(OrbitKind::negative_hyperbolic, q);
        for (size_t i = q.size(); i > 1; --i)
            std::swap(q[i - 1], q[rng.uniform(0, static_cast<long>(i) - 1)]);
        CHECK(deficit_at_orbit(OrbitKind::negative_hyperbolic, q) == base);
    }
}

TEST_CASE("zero deficit is the partition table, exhaustively") {
    for (long m = 1; m <= 20; ++m)
        for (const auto& q : partitions_of(m))
            for (OrbitKind kind :
                 {OrbitKind::positive_hyperbolic, OrbitKind::negative_hyperbolic}) {
                CAPTURE(m);
                CHECK((deficit_at_orbit(kind, q) == 0) == partition_check(kind, q));
            }
}

TEST_CASE("total deficit groups ends by orbit and sign") {
    ReebOrbitSpec b = make_hyperbolic("b", 1, 1.0);
    ReebOrbitSpec h = make_hyperbolic("h", 0, 5.0);

    // All ends following the table: zero deficit.
    CurveData tame;
    tame.ends = {{b, 2, EndSign::negative},
                 {b, 1, EndSign::negative},
                 {h, 1, EndSign::positive},
                 {h, 1, EndSign::positive}};
    CHECK(deficit_total(tame) == 0);

    // n simple negative ends at one negative hyperbolic orbit: C(n,2).
    for (long n = 1; n <= 6; ++n) {
        CurveData c;
        c.ends.push_back({h, 1, EndSign::positive});
        for (long i = 0; i < n; ++i) c.ends.push_back({b, 1, EndSign::negative});
        CHECK(deficit_total(c) == n * (n - 1) / 2);
    }

    // Grouping is per sign: the same orbit on both sides contributes twice.
    CurveData both;
    both.ends = {{b, 3, EndSign::positive}, {b, 3, EndSign::negative}};
    CHECK(deficit_total(both) == 2 * deficit_at_orbit(OrbitKind::negative_hyperbolic, {3}));
}

TEST_CASE("index inequality slack") {
    ReebOrbitSpec b = make_hyperbolic("b", 1, 1.0);
    CurveData cyl;
    cyl.ends = {{b, 1, EndSign::positive}, {b, 1, EndSign::negative}};
    IndexInequality r = index_inequality_check(cyl);
    CHECK(r.holds);
    CHECK(r.slack == 0);

    // Prototypical one-level curve: equality with Delta = C(n,2).
    for (long n = 3; n <= 8; ++n) {
        CurveData u;
        u.ends.push_back({make_hyperbolic("h", 0, 50.0), 1, EndSign::positive});
        for (long i = 0; i < n; ++i) u.ends.push_back({b, 1, EndSign::negative});
        u.rel_c1 = 1;
        u.rel_q = n * n;
        REQUIRE(fredholm_index(u) == 1);
        REQUIRE(ech_index(u) == 1 + n * (n - 1) / 2);
        IndexInequality res = index_inequality_check(u);
        CHECK(res.holds);
        CHECK(res.slack == 0);
    }

    // Forced negative slack reports false.
    CurveData bad = cyl;
    bad.rel_q = -1;
    IndexInequality res = index_inequality_check(bad);
    CHECK_FALSE(res.holds);
    CHECK(res.slack == -1);
}

TEST_CASE("writhe identity evaluation") {
    WritheIdentitySides s = writhe_identity_sides(3, {1, 1, 1});
    CHECK(s.lhs == 6);
    CHECK(s.rhs == 6);
    CHECK(writhe_identity_check(1, {1}));
    CHECK(writhe_identity_check(5, {3, 1, 1}));
    CHECK(writhe_identity_check(5, {2, 2, 1}));
    CHECK(writhe_identity_check(4, {4}));

    // Known counterexample to the displayed identity: two odd parts > 1.
    WritheIdentitySides bad = writhe_identity_sides(6, {3, 3});
    CHECK(bad.lhs == 20);
    CHECK(bad.rhs == 18);
    CHECK_FALSE(writhe_identity_check(6, {3, 3}));

    CHECK_THROWS_AS(writhe_identity_check(4, {1, 1}), PreconditionViolated);
}

TEST_CASE("braid bound report") {
    ReebOrbitSpec b = make_hyperbolic("b", 1, 1.0);

    BraidData tight;
    tight.orbit = b;
    tight.q = {2};
    tight.rho = {1};
    tight.writhe = std::vector<long>{1};
    BraidBoundsReport rep = braid_bounds_check(tight);
    CHECK(rep.winding[0] == BraidBoundsReport::Status::equality);
    CHECK(rep.writhe[0] == BraidBoundsReport::Status::equality);
    CHECK(rep.all_hold());

    BraidData simple;
    simple.orbit = b;
    simple.q = {1};
    simple.rho = {1};
    simple.writhe = std::vector<long>{0};
    rep = braid_bounds_check(simple);
    CHECK(rep.winding[0] == BraidBoundsReport::Status::equality);
    CHECK(rep.writhe[0] == BraidBoundsReport::Status::equality);

    BraidData linked;
    linked.orbit = b;
    linked.q = {1, 1};
    linked.rho = {1, 1};
    linked.linking = std::vector<std::vector<long>>{{0, 0}, {0, 0}};
    rep = braid_bounds_check(linked);
    CHECK(rep.linking[0][1] == BraidBoundsReport::Status::fails);
    CHECK_FALSE(rep.all_hold());
    // No writhe data supplied: the bound is reported unchecked.
    CHECK(rep.writhe[0] == BraidBoundsReport::Status::unchecked);

    BraidData asym;
    asym.orbit = b;
    asym.q = {1, 1};
    asym.rho = {1, 1};
    asym.linking = std::vector<std::vector<long>>{{0, 1}, {0, 0}};
    CHECK_THROWS_AS(braid_bounds_check(asym), InvalidConfiguration);
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(12).size() == 77);
    for (const auto& q : partitions_of(9)) {
        long sum = 0;
        for (long v : q) sum += v;
        CHECK(sum == 9);
    }
}
