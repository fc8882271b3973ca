#pragma once

#include <type_traits>
#include <vector>

#include "ech/cover.hpp"

namespace ech {

// Value of the linearized obstruction section split by asymptotic order:
// the actual section value is sum_l w^l * component[l-1] with
// w = e^{i theta} e^{-T}. Carrying w symbolically keeps membership in the
// zero sets an exact, (theta, T)-independent statement over Q(i).
template <typename K>
struct Graded {
    std::vector<std::vector<K>> component;

    bool all_zero() const {
        for (const auto& block : component)
            for (const auto& v : block)
                if (!(v == K{0})) return false;
        return true;
    }
};

std::vector<CD> collapse(const Graded<CD>& g, double theta, double big_t);

// Section value sum_{l<=m} B_l v_l with v_l = w^l (r_i^l alpha_{i,l})_i,
// returned per order with the w^l factor stripped.
template <typename K>
Graded<K> linearized_section(const CoverConfig<K>& cfg, const AsymptoticData<K>& asym, int m) {
    cfg.validate();
    asym.validate(cfg.n(), m);
    int n = cfg.n();
    RCoefficients<K> r = r_coefficients(cfg);
    Graded<K> out;
    out.component.reserve(m);
    for (int ell = 1; ell <= m; ++ell) {
        std::vector<std::vector<K>> b = derivative_matrix(cfg, ell);
        std::vector<K> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = pow_int_generic(r.positive[i], static_cast<unsigned>(ell)) * asym.alpha[i][ell - 1];
        std::vector<K> row(n - 2, K{0});
        for (int k = 0; k < n - 2; ++k)
            for (int i = 0; i < n; ++i) row[k] += b[k][i] * v[i];
        out.component.push_back(std::move(row));
    }
    return out;
}

// The order-1 zero set written as linear relations in the punctures:
//   (p_{n-1} - p_n) a_k - (p_k - p_n) a_{n-1} + (p_k - p_{n-1}) a_n = 0,
// one residual per k = 1..n-2.
template <typename K>
std::vector<K> z1_residuals(const std::vector<K>& p, const std::vector<K>& alpha1) {
    int n = static_cast<int>(p.size());
    if (static_cast<int>(alpha1.size()) < n)
        throw InvalidConfiguration("need one leading coefficient per end");
    std::vector<K> res;
    res.reserve(n - 2);
    for (int k = 1; k <= n - 2; ++k)
        res.push_back((p[n - 2] - p[n - 1]) * alpha1[k - 1] -
                      (p[k - 1] - p[n - 1]) * alpha1[n - 2] +
                      (p[k - 1] - p[n - 2]) * alpha1[n - 1]);
    return res;
}

bool on_z1(const CoverConfig<ComplexQ>& cfg, const AsymptoticData<ComplexQ>& asym);

// Free punctures p_1..p_{n-2} forced by the order-1 zero set once p_{n-1},
// p_n and the leading coefficients are chosen:
//   p_k = [a_k (p_{n-1} - p_n) + p_n a_{n-1} - p_{n-1} a_n] / (a_{n-1} - a_n).
// Throws DegenerateInput when a_{n-1} = a_n (no unique solution) and
// InvalidConfiguration when the solved punctures collide.
template <typename K>
std::vector<K> solve_z1(const std::vector<K>& alpha1, const K& p_nm1, const K& p_n) {
    int n = static_cast<int>(alpha1.size());
    if (n < 3) throw InvalidConfiguration("need at least 3 leading coefficients");
    if (p_nm1 == p_n) throw InvalidConfiguration("fixed punctures must be distinct");
    K denom = alpha1[n - 2] - alpha1[n - 1];
    if (denom == K{0})
        throw DegenerateInput("leading coefficients at the fixed ends coincide; no unique solution");
    std::vector<K> out(n);
    for (int k = 1; k <= n - 2; ++k)
        out[k - 1] =
            (alpha1[k - 1] * (p_nm1 - p_n) + p_n * alpha1[n - 2] - p_nm1 * alpha1[n - 1]) / denom;
    out[n - 2] = p_nm1;
    out[n - 1] = p_n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (out[i] == out[j])
                throw InvalidConfiguration("zero-set solution forces coincident punctures");
    if constexpr (std::is_same_v<K, ComplexQ>) {
        for (const K& v : z1_residuals(out, alpha1))
            if (!v.is_zero()) throw Error("zero-set solution failed its own residual check");
    }
    return out;
}

// H_i = r_i alpha_{i,1}; on the order-1 zero set these sum to zero.
template <typename K>
std::vector<K> h_coefficients(const CoverConfig<K>& cfg, const AsymptoticData<K>& asym) {
    asym.validate(cfg.n(), 1);
    RCoefficients<K> r = r_coefficients(cfg);
    std::vector<K> h(cfg.n());
    for (int i = 0; i < cfg.n(); ++i) h[i] = r.positive[i] * asym.alpha[i][0];
    return h;
}

// Meromorphic model with a pole of order <= m at each positive puncture:
//   g(z) = sum_i sum_l w^l coeff[i][l-1] / (z - p_i)^l,
// where coeff[i][l-1] = r_i^l alpha_{i,l} and w = e^{i theta} e^{-T} is kept
// as a symbolic scalar per order.
template <typename K>
struct ModelFunction {
    int order = 1;
    std::vector<K> poles;
    std::vector<std::vector<K>> coeff;

    // Per-order values of g(z), the w^l factors stripped.
    std::vector<K> eval_graded(const K& z) const {
        std::vector<K> out(order, K{0});
        for (int ell = 1; ell <= order; ++ell)
            for (size_t i = 0; i < poles.size(); ++i) {
                K diff = z - poles[i];
                if (diff == K{0}) throw DegenerateInput("model evaluated at a pole");
                out[ell - 1] += coeff[i][ell - 1] / pow_int_generic(diff, static_cast<unsigned>(ell));
            }
        return out;
    }
};

CD eval_model(const ModelFunction<CD>& g, double theta, double big_t, CD z);

template <typename K>
ModelFunction<K> build_model(const CoverConfig<K>& cfg, const AsymptoticData<K>& asym, int m) {
    cfg.validate();
    asym.validate(cfg.n(), m);
    RCoefficients<K> r = r_coefficients(cfg);
    ModelFunction<K> g;
    g.order = m;
    g.poles = cfg.p;
    g.coeff.assign(cfg.n(), std::vector<K>(m));
    for (int i = 0; i < cfg.n(); ++i)
        for (int ell = 1; ell <= m; ++ell)
            g.coeff[i][ell - 1] =
                pow_int_generic(r.positive[i], static_cast<unsigned>(ell)) * asym.alpha[i][ell - 1];
    return g;
}

struct OrderMModel {
    bool exists = false;        // h'(0) = 0 and g(q_2) = ... = g(q_{n-2}) = 0
    bool section_zero = false;  // linearized section vanishes (same statement)
    ModelFunction<ComplexQ> g;
};

// Builds the candidate model and decides existence by the zero-of-order-2
// at infinity and the simple zeros at the finite negative punctures. The
// equivalence with the vanishing of the linearized section is asserted.
OrderMModel order_m_model(const CoverConfig<ComplexQ>& cfg, const AsymptoticData<ComplexQ>& asym,
                          int m);

// On the order-1 zero set, sum_i H_i / prod_t (q_{k_t} - p_i) = 0 for every
// nonempty subset {k_1..k_j} of the finite negative punctures.
bool derived_identities_check(const CoverConfig<ComplexQ>& cfg,
                              const AsymptoticData<ComplexQ>& asym);

// On the order-1 zero set the model factors through B(z):
//   g(z) = w B(z) sum_i alpha_{i,1} / (A_i(p_i) (z - p_i)).
bool model_rewrite_check(const CoverConfig<ComplexQ>& cfg, const AsymptoticData<ComplexQ>& asym,
                         const ComplexQ& z);

}  // namespace ech
