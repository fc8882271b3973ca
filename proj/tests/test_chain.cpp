#include <doctest.h>

#include "ech/chain.hpp"
#include "ech/errors.hpp"
#include "ech/index_calculus.hpp"
#include "ech/sampling.hpp"

using namespace ech;

namespace {

// Small complexes over distinct simple generators with strictly decreasing
// actions base > base-10 > ... so every differential direction is admissible.
ChainComplexData ladder(int n_generators, const CountTable& diff, double base = 100.0) {
    ChainComplexData c;
    c.action_bound = 1000.0;
    for (int i = 0; i < n_generators; ++i) {
        OrbitSet s;
        s.entries.push_back({make_hyperbolic("g" + std::to_string(i), (i % 2 == 0) ? 0 : 1,
                                             base - 10.0 * i),
                             1});
        c.generators.push_back(s);
    }
    c.diff = diff;
    return c;
}

}  // namespace

TEST_CASE("complex verification") {
    // Zero differential squares to zero.
    CHECK(verify_complex(ladder(3, {})).ok());

    // a -> b -> c with no cancelation: d^2 has coefficient 1 at (a, c).
    ComplexReport rep = verify_complex(ladder(3, {{0, 1}, {1, 2}}));
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.d_squared_violations.size() == 1);
    CHECK(rep.d_squared_violations[0] == std::pair<int, int>{0, 2});

    // Square with both compositions cancels mod 2.
    CHECK(verify_complex(ladder(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})).ok());

    // Multiplicity 2 on a hyperbolic orbit is inadmissible.
    ChainComplexData bad = ladder(2, {});
    bad.generators[0].entries[0].multiplicity = 2;
    rep = verify_complex(bad);
    CHECK_FALSE(rep.problems.empty());

    // Differentials must strictly decrease the action.
    ChainComplexData up = ladder(3, {{2, 0}});
    rep = verify_complex(up);
    CHECK_FALSE(rep.problems.empty());

    // Action bound is enforced.
    ChainComplexData over = ladder(2, {});
    over.action_bound = 50.0;
    rep = verify_complex(over);
    CHECK_FALSE(rep.problems.empty());
}

TEST_CASE("cobordism application is a mod-2 table sum") {
    CobordismData d;
    d.source = ladder(2, {});
    d.target = ladder(3, {});
    // All counts zero.
    CHECK(cobordism_apply(d, 0).empty());
    // Direct and building on the same pair cancel.
    d.direct = {{0, 1}};
    d.building = {{0, 1}};
    CHECK(cobordism_apply(d, 0).empty());
    // Mixed table, hand-computed.
    d.direct = {{0, 1}, {0, 2}};
    d.building = {{0, 2}, {1, 2}};
    CHECK(cobordism_apply(d, 0) == std::vector<int>{1});
    CHECK(cobordism_apply(d, 1) == std::vector<int>{2});
    CHECK_THROWS_AS(cobordism_apply(d, 5), PreconditionViolated);

    // Counts must respect the filtration: send g0 upward in action.
    CobordismData up;
    up.source = ladder(2, {});
    up.target = ladder(2, {});
    up.direct = {{1, 0}};
    CHECK_THROWS_AS(cobordism_apply(up, 1), InvalidConfiguration);
}

TEST_CASE("chain map verification") {
    // Zero maps pass trivially; the target sits strictly below in action.
    CobordismData d;
    d.source = ladder(2, {{0, 1}});
    d.target = ladder(2, {{0, 1}}, 95.0);
    CHECK(chain_map_check(d).ok());

    // Identity-like map on a 2x2 square commutes.
    d.direct = {{0, 0}, {1, 1}};
    CHECK(chain_map_check(d).ok());

    // Perturbing one building count breaks exactly one pair.
    d.building = {{1, 1}};
    ChainMapReport rep = chain_map_check(d);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0] == std::pair<int, int>{0, 1});

    // Data-level restriction independence: two tables, same map.
    CobordismData ind;
    ind.source = ladder(2, {});
    ind.target = ladder(3, {}, 95.0);
    ind.direct = {{0, 1}};
    ind.building = {{0, 2}};
    CountTable other{{0, 2}};
    CHECK(building_tables_agree(ind, other).empty());
    CountTable different{{1, 2}};
    CHECK(building_tables_agree(ind, different) == std::vector<int>{0, 1});
}

namespace {

ReebOrbitSpec exceptional_orbit() { return make_hyperbolic("g", 1, 1.0); }

// Building candidate around one exceptional orbit of multiplicity m. The
// intermediate set carries one extra simple orbit; without it the parity of
// the Fredholm index cannot reach the even target sum(2m_j - 4).
BuildingCandidate make_candidate(long m) {
    ReebOrbitSpec g = exceptional_orbit();
    ReebOrbitSpec d = make_hyperbolic("d", 0, 0.75);
    ReebOrbitSpec top_orbit = make_hyperbolic("a", 0, 200.0);
    ReebOrbitSpec bottom_orbit = make_hyperbolic("b", 0, 0.5);
    long target_ind = 2 * m - 4;
    long target_i = m * (m - 1) / 2;

    BuildingCandidate b;
    b.top.ends.push_back({top_orbit, 1, EndSign::positive});
    b.top.ends.push_back({g, 3, EndSign::negative});
    for (long i = 0; i < m - 3; ++i) b.top.ends.push_back({g, 1, EndSign::negative});
    b.top.ends.push_back({d, 1, EndSign::negative});
    b.top.rel_c1 = (target_ind - fredholm_index(b.top)) / 2;
    b.top.rel_q = target_i - ech_index(b.top);

    for (long i = 0; i < m; ++i) b.bottom.ends.push_back({g, 1, EndSign::positive});
    b.bottom.ends.push_back({d, 1, EndSign::positive});
    b.bottom.ends.push_back({bottom_orbit, 1, EndSign::negative});
    b.bottom.rel_c1 = (0 - fredholm_index(b.bottom)) / 2;
    b.bottom.rel_q = -target_i - ech_index(b.bottom);

    b.intermediate.entries.push_back({d, 1});
    b.intermediate.entries.push_back({g, m});
    b.exceptional.push_back({"g", m});
    return b;
}

}  // namespace

TEST_CASE("index-0 building conditions") {
    BuildingCandidate b = make_candidate(3);
    BuildingReport rep = ech_building_check(b);
    CHECK(rep.generators_ok);
    CHECK(rep.orbit_sets_match);
    CHECK(rep.partitions_ok);
    CHECK(rep.bottom_indices_ok);
    CHECK(rep.top_indices_ok);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.ok());
    // The four index equations: ind(u0)=0, I(u0)=-3, ind(u)=2, I(u)=3.
    CHECK(fredholm_index(b.bottom) == 0);
    CHECK(ech_index(b.bottom) == -3);
    CHECK(fredholm_index(b.top) == 2);
    CHECK(ech_index(b.top) == 3);

    // A (2,1) partition at the exceptional orbit violates the pattern.
    BuildingCandidate bad = make_candidate(3);
    bad.top.ends[1].multiplicity = 2;
    bad.top.ends.push_back({exceptional_orbit(), 1, EndSign::negative});
    CHECK_FALSE(ech_building_check(bad).partitions_ok);

    // No exceptional orbits at all: the degenerate flag trips.
    BuildingCandidate plain;
    ReebOrbitSpec a = make_hyperbolic("a", 0, 10.0);
    ReebOrbitSpec g = exceptional_orbit();
    plain.top.ends = {{a, 1, EndSign::positive}, {g, 1, EndSign::negative}};
    plain.bottom.ends = {{g, 1, EndSign::positive},
                         {make_hyperbolic("b", 0, 0.5), 1, EndSign::negative}};
    plain.intermediate.entries.push_back({g, 1});
    BuildingReport deg = ech_building_check(plain);
    CHECK(deg.degenerate);
    CHECK(deg.orbit_sets_match);

    // Multiplicity-2 exceptional orbits have no evaluation map.
    BuildingCandidate two = make_candidate(3);
    two.exceptional[0].multiplicity = 2;
    BuildingReport rep2 = ech_building_check(two);
    CHECK(rep2.no_evaluation_map);
    CHECK_FALSE(rep2.partitions_ok);
}

TEST_CASE("degeneration taxonomy") {
    ReebOrbitSpec g = exceptional_orbit();
    ReebOrbitSpec a = make_hyperbolic("a", 0, 300.0);

    // Intermediate set is a generator: both levels carry their forced index.
    // The bottom level is the embedded plane capping off g.
    DegenerationCandidate gen;
    gen.top.ends = {{a, 1, EndSign::positive}, {g, 1, EndSign::negative}};
    gen.top.rel_c1 = 1;
    gen.top.rel_q = 1;
    gen.bottom.ends = {{g, 1, EndSign::positive}};
    gen.bottom.rel_c1 = 0;
    gen.bottom.rel_q = -1;
    REQUIRE(fredholm_index(gen.top) == 1);
    REQUIRE(fredholm_index(gen.bottom) == 0);
    REQUIRE(ech_index(gen.top) == 1);
    REQUIRE(ech_index(gen.bottom) == 0);
    CHECK(degeneration_classify(gen) == DegenerationClass::ech_generator_class);

    // Triple degenerate cover downstairs: the exceptional route.
    DegenerationCandidate exc;
    exc.top.ends = {{a, 1, EndSign::positive},
                    {g, 1, EndSign::negative},
                    {g, 1, EndSign::negative},
                    {g, 1, EndSign::negative}};
    exc.top.rel_c1 = 1;
    exc.top.rel_q = 9;
    exc.bottom.components = 3;
    exc.bottom.ends = {{g, 1, EndSign::positive},
                       {g, 1, EndSign::positive},
                       {g, 1, EndSign::positive}};
    exc.bottom.rel_q = -9;
    exc.covers.push_back({"g", 3});
    REQUIRE(fredholm_index(exc.top) == 1);
    REQUIRE(fredholm_index(exc.bottom) == 0);
    REQUIRE(ech_index(exc.top) == 4);
    REQUIRE(ech_index(exc.bottom) == -3);
    CHECK(degeneration_classify(exc) == DegenerationClass::exceptional_class);

    // Multiplicity-2 positive hyperbolic intermediate, no degenerate cover:
    // the count cancels in pairs.
    ReebOrbitSpec h = make_hyperbolic("h", 0, 1.0);
    ReebOrbitSpec z1 = make_hyperbolic("z1", 1, 0.25);
    DegenerationCandidate pair;
    pair.top.ends = {{a, 1, EndSign::positive},
                     {h, 1, EndSign::negative},
                     {h, 1, EndSign::negative}};
    pair.top.rel_c1 = 0;
    pair.top.rel_q = 2;
    pair.bottom.ends = {{h, 1, EndSign::positive},
                        {h, 1, EndSign::positive},
                        {z1, 1, EndSign::negative}};
    pair.bottom.rel_c1 = 0;
    pair.bottom.rel_q = -1;
    REQUIRE(fredholm_index(pair.top) == 1);
    REQUIRE(fredholm_index(pair.bottom) == 0);
    CHECK(degeneration_classify(pair) == DegenerationClass::canceling_pair_class);

    // Index data inconsistent with a two-level degeneration.
    DegenerationCandidate wrong = gen;
    wrong.top.rel_c1 = 2;
    CHECK_THROWS_AS(degeneration_classify(wrong), InvalidConfiguration);
}

TEST_CASE("d^2 verdict against the dense matrix square") {
    Sampler rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(rng.uniform(4, 24));
        // Random strictly-lower-triangular-in-action differential.
        CountTable diff;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.uniform(0, 3) == 0) diff.insert({a, b});
        ChainComplexData c = ladder(n, diff, 500.0);
        ComplexReport rep = verify_complex(c);

        // Brute-force oracle: square the dense Z/2 matrix.
        std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
        for (auto [a, b] : diff) d[a][b] = 1;
        std::vector<std::pair<int, int>> want;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int acc = 0;
                for (int k = 0; k < n; ++k) acc ^= d[a][k] & d[k][b];
                if (acc) want.push_back({a, b});
            }
        CHECK(rep.d_squared_violations == want);
        CHECK(rep.ok() == want.empty());
    }
}

TEST_CASE("cross-module identity: building indices against deficit bookkeeping") {
    for (long m = 3; m <= 8; ++m) {
        BuildingCandidate b = make_candidate(m);
        BuildingReport rep = ech_building_check(b);
        CHECK(rep.ok());
        // ind(u) via cover bookkeeping: the inserted m-fold cover of the
        // trivial cylinder carries 2m - 4 branch points.
        CHECK(fredholm_index(b.top) == cover_fredholm(0, m, 2 * m - 4));
    }
}
