#include "ech/zero_set.hpp"

#include <cmath>

namespace ech {

std::vector<CD> collapse(const Graded<CD>& g, double theta, double big_t) {
    if (g.component.empty()) return {};
    size_t dim = g.component[0].size();
    std::vector<CD> out(dim, CD{0});
    CD w = std::polar(std::exp(-big_t), theta);
    CD w_pow = CD{1};
    for (const auto& block : g.component) {
        w_pow *= w;
        for (size_t k = 0; k < dim; ++k) out[k] += w_pow * block[k];
    }
    return out;
}

CD eval_model(const ModelFunction<CD>& g, double theta, double big_t, CD z) {
    std::vector<CD> graded = g.eval_graded(z);
    CD w = std::polar(std::exp(-big_t), theta);
    CD out{0}, w_pow{1};
    for (const CD& v : graded) {
        w_pow *= w;
        out += w_pow * v;
    }
    return out;
}

bool on_z1(const CoverConfig<ComplexQ>& cfg, const AsymptoticData<ComplexQ>& asym) {
    cfg.validate();
    asym.validate(cfg.n(), 1);
    std::vector<ComplexQ> alpha1;
    alpha1.reserve(cfg.p.size());
    for (const auto& row : asym.alpha) alpha1.push_back(row[0]);
    for (const ComplexQ& v : z1_residuals(cfg.p, alpha1))
        if (!v.is_zero()) return false;
    return true;
}

OrderMModel order_m_model(const CoverConfig<ComplexQ>& cfg, const AsymptoticData<ComplexQ>& asym,
                          int m) {
    OrderMModel out;
    out.g = build_model(cfg, asym, m);

    // Zero of order 2 at infinity: h'(0) = w sum_i coeff[i][0].
    ComplexQ h_prime{0};
    for (int i = 0; i < cfg.n(); ++i) h_prime += out.g.coeff[i][0];
    bool ok = h_prime.is_zero();
    // Simple zeros at the finite negative punctures, order by order in w.
    for (const ComplexQ& qk : cfg.q) {
        if (!ok) break;
        for (const ComplexQ& v : out.g.eval_graded(qk))
            if (!v.is_zero()) {
                ok = false;
                break;
            }
    }
    out.exists = ok;
    out.section_zero = linearized_section(cfg, asym, m).all_zero();
    if (out.exists != out.section_zero)
        throw Error("model existence disagrees with the vanishing of the linearized section");
    return out;
}

bool derived_identities_check(const CoverConfig<ComplexQ>& cfg,
                              const AsymptoticData<ComplexQ>& asym) {
    cfg.validate();
    if (!on_z1(cfg, asym))
        throw PreconditionViolated("configuration is not on the order-1 zero set");
    int n = cfg.n();
    std::vector<ComplexQ> h = h_coefficients(cfg, asym);
    int nq = n - 3;
    // All nonempty subsets of the finite negative punctures.
    for (unsigned mask = 1; mask < (1u << nq); ++mask) {
        ComplexQ sum{0};
        for (int i = 0; i < n; ++i) {
            ComplexQ denom{1};
            for (int t = 0; t < nq; ++t)
                if (mask & (1u << t)) denom *= cfg.q[t] - cfg.p[i];
            sum += h[i] / denom;
        }
        if (!sum.is_zero()) return false;
    }
    return true;
}

bool model_rewrite_check(const CoverConfig<ComplexQ>& cfg, const AsymptoticData<ComplexQ>& asym,
                         const ComplexQ& z) {
    cfg.validate();
    if (!on_z1(cfg, asym))
        throw PreconditionViolated("configuration is not on the order-1 zero set");
    for (const ComplexQ& pi : cfg.p)
        if (z == pi) throw DegenerateInput("rewrite comparison point hits a puncture");

    // Route one: g/w = sum_i H_i/(z - p_i).
    std::vector<ComplexQ> h = h_coefficients(cfg, asym);
    ComplexQ lhs{0};
    for (int i = 0; i < cfg.n(); ++i) lhs += h[i] / (z - cfg.p[i]);
    // Route two: g/w = B(z) sum_i alpha_{i,1}/(A_i(p_i)(z - p_i)).
    ComplexQ sum{0};
    for (int i = 1; i <= cfg.n(); ++i)
        sum += asym.alpha[i - 1][0] /
               (prod_a_skip(cfg, i, cfg.p[i - 1]) * (z - cfg.p[i - 1]));
    ComplexQ rhs = prod_b(cfg, z) * sum;
    return lhs == rhs;
}

}  // namespace ech
