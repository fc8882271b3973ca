#include <doctest.h>

#include "ech/appendix.hpp"
#include "ech/errors.hpp"
#include "ech/sampling.hpp"
#include "ech/zero_set.hpp"

using namespace ech;

namespace {

AsymptoticData<ComplexQ> order1(const std::vector<ComplexQ>& alpha) {
    AsymptoticData<ComplexQ> asym;
    for (const auto& a : alpha) asym.alpha.push_back({a});
    return asym;
}

}  // namespace

TEST_CASE("zero-set puncture solve") {
    std::vector<ComplexQ> alpha{ComplexQ{1}, ComplexQ{2}, ComplexQ{3}, ComplexQ{4}};
    std::vector<ComplexQ> p = solve_z1(alpha, ComplexQ{0}, ComplexQ{1});
    CHECK(p[0] == ComplexQ{-2});
    CHECK(p[1] == ComplexQ{-1});
    for (const auto& r : z1_residuals(p, alpha)) CHECK(r.is_zero());

    // Substitution check from the linear relations:
    // (p_3-p_4) a_1 - (p_1-p_4) a_3 + (p_1-p_3) a_4 = (-1)(1) - (-3)(3) + (-2)(4) = 0.
    CHECK((p[2] - p[3]) * alpha[0] - (p[0] - p[3]) * alpha[2] + (p[0] - p[2]) * alpha[3] ==
          ComplexQ{0});

    CHECK_THROWS_AS(solve_z1({ComplexQ{1}, ComplexQ{2}, ComplexQ{2}}, ComplexQ{0}, ComplexQ{1}),
                    DegenerateInput);
    // Repeated leading coefficient forces p_k onto a fixed puncture.
    CHECK_THROWS_AS(solve_z1({ComplexQ{3}, ComplexQ{2}, ComplexQ{3}, ComplexQ{4}}, ComplexQ{0},
                             ComplexQ{1}),
                    InvalidConfiguration);
}

TEST_CASE("linearized section values") {
    Sampler rng(11);
    // Zero coefficients give the zero section.
    CoverConfig<ComplexQ> cfg = rng.cover_config(5);
    AsymptoticData<ComplexQ> zero;
    zero.alpha.assign(5, {ComplexQ{0}, ComplexQ{0}});
    CHECK(linearized_section(cfg, zero, 2).all_zero());

    // Solved configurations sit in the zero set; generic ones do not.
    for (int t = 0; t < 10; ++t) {
        auto [zcfg, zasym] = rng.z1_config(rng.uniform(4, 6), 1);
        CHECK(linearized_section(zcfg, zasym, 1).all_zero());
        CHECK(on_z1(zcfg, zasym));

        CoverConfig<ComplexQ> gcfg = rng.cover_config(rng.uniform(4, 6));
        AsymptoticData<ComplexQ> gasym = rng.asymptotic_data(gcfg.n(), 1);
        CHECK_FALSE(linearized_section(gcfg, gasym, 1).all_zero());
    }
}

TEST_CASE("order-m models exist exactly on the zero set") {
    Sampler rng(12);
    for (int t = 0; t < 8; ++t) {
        int n = rng.uniform(4, 6);
        int m = rng.uniform(1, 3);

        auto [zcfg, zasym] = rng.z1_config(n, m);
        OrderMModel m1 = order_m_model(zcfg, zasym, 1);
        CHECK(m1.exists);
        CHECK(m1.section_zero);

        auto [mcfg, masym] = rng.zm_config(n, m);
        OrderMModel mm = order_m_model(mcfg, masym, m);
        CHECK(mm.exists);

        CoverConfig<ComplexQ> gcfg = rng.cover_config(n);
        AsymptoticData<ComplexQ> gasym = rng.asymptotic_data(n, m);
        OrderMModel gm = order_m_model(gcfg, gasym, m);
        CHECK(gm.exists == gm.section_zero);
        CHECK_FALSE(gm.exists);

        CHECK(nullspace_equivalence_check(zcfg, zasym, 1));
        CHECK(nullspace_equivalence_check(mcfg, masym, m));
        CHECK(nullspace_equivalence_check(gcfg, gasym, m));
    }
}

TEST_CASE("model coefficient sums") {
    // alpha = 0 gives H = 0.
    Sampler rng(13);
    CoverConfig<ComplexQ> cfg = rng.cover_config(4);
    AsymptoticData<ComplexQ> zero;
    zero.alpha.assign(4, {ComplexQ{0}});
    for (const auto& h : h_coefficients(cfg, zero)) CHECK(h.is_zero());

    // Worked configuration: H sums to zero for every choice of q.
    std::vector<ComplexQ> alpha{ComplexQ{1}, ComplexQ{2}, ComplexQ{3}, ComplexQ{4}};
    CoverConfig<ComplexQ> z1cfg;
    z1cfg.p = solve_z1(alpha, ComplexQ{0}, ComplexQ{1});
    for (int qv : {5, -7, 11}) {
        z1cfg.q = {ComplexQ{qv}};
        std::vector<ComplexQ> h = h_coefficients(z1cfg, order1(alpha));
        ComplexQ sum{0};
        for (const auto& v : h) sum += v;
        CHECK(sum.is_zero());
    }
}

TEST_CASE("derived subset identities") {
    Sampler rng(14);
    // n = 3: vacuously true.
    auto [cfg3, asym3] = rng.z1_config(3, 1);
    CHECK(derived_identities_check(cfg3, asym3));

    // n = 4: the single identity sum H_i/(q_2 - p_i) = 0.
    auto [cfg4, asym4] = rng.z1_config(4, 1);
    CHECK(derived_identities_check(cfg4, asym4));

    // n = 6: all 2^3 - 1 subset identities hold exactly.
    auto [cfg6, asym6] = rng.z1_config(6, 1);
    CHECK(derived_identities_check(cfg6, asym6));

    // Off the zero set the precondition is rejected.
    CoverConfig<ComplexQ> gcfg = rng.cover_config(5);
    AsymptoticData<ComplexQ> gasym = rng.asymptotic_data(5, 1);
    CHECK_THROWS_AS(derived_identities_check(gcfg, gasym), PreconditionViolated);
}

TEST_CASE("factored model rewrite") {
    Sampler rng(15);
    for (int n : {3, 4, 5, 6}) {
        auto [cfg, asym] = rng.z1_config(n, 1);
        int probes = 0;
        while (probes < 5) {
            ComplexQ z = rng.complex_rational();
            bool hits = false;
            for (const auto& p : cfg.p) hits = hits || z == p;
            for (const auto& q : cfg.q) hits = hits || z == q;
            if (hits) continue;
            CHECK(model_rewrite_check(cfg, asym, z));
            ++probes;
        }
        // Both expressions vanish at the finite negative punctures.
        for (const auto& q : cfg.q) CHECK(model_rewrite_check(cfg, asym, q));
    }
}

TEST_CASE("graded section values are independent of theta and T") {
    // The common scalar w^l is carried symbolically, so the per-order
    // components and zero-set membership cannot see the rotation or the
    // gluing parameter.
    Sampler rng(17);
    auto [cfg, asym] = rng.zm_config(5, 2);
    Graded<ComplexQ> base = linearized_section(cfg, asym, 2);
    CoverConfig<ComplexQ> moved = cfg;
    moved.theta = cfg.theta + 1.0;
    moved.big_t = cfg.big_t + 3.0;
    Graded<ComplexQ> shifted = linearized_section(moved, asym, 2);
    CHECK(base.component == shifted.component);
    CHECK(base.all_zero() == shifted.all_zero());
}

TEST_CASE("graded model evaluation tracks the pole orders") {
    Sampler rng(16);
    auto [cfg, asym] = rng.zm_config(5, 3);
    ModelFunction<ComplexQ> g = build_model(cfg, asym, 3);
    for (const auto& q : cfg.q) {
        std::vector<ComplexQ> vals = g.eval_graded(q);
        REQUIRE(vals.size() == 3);
        for (const auto& v : vals) CHECK(v.is_zero());
    }
    CHECK_THROWS_AS(g.eval_graded(cfg.p[0]), DegenerateInput);
}
