#pragma once

#include <complex>
#include <vector>

#include "ech/errors.hpp"
#include "ech/rational.hpp"

namespace ech {

using CD = std::complex<double>;

// Branched covers of the trivial cylinder with n positive ends of
// multiplicity 1, one multiplicity-3 negative end at infinity, and n-3
// finite simple negative ends. The cover map is z -> e^{i theta} B(z)/A(z).
// theta lives in R/6piZ and T >= 0 is the gluing parameter; the exact
// backend never evaluates them, carrying w = e^{i theta} e^{-T} symbolically.
template <typename K>
struct CoverConfig {
    std::vector<K> p;  // n >= 3 positive punctures
    std::vector<K> q;  // q_2 .. q_{n-2}; the multiplicity-3 puncture q_1 is at infinity
    double theta = 0.0;
    double big_t = 0.0;

    int n() const { return static_cast<int>(p.size()); }

    void validate() const {
        int nn = n();
        if (nn < 3) throw InvalidConfiguration("cover needs at least 3 positive punctures");
        if (static_cast<int>(q.size()) != nn - 3)
            throw InvalidConfiguration("cover needs exactly n-3 finite negative punctures");
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] == p[j]) throw InvalidConfiguration("positive punctures must be distinct");
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = i + 1; j < q.size(); ++j)
                if (q[i] == q[j]) throw InvalidConfiguration("negative punctures must be distinct");
        for (const K& pi : p)
            for (const K& qj : q)
                if (pi == qj)
                    throw InvalidConfiguration("positive and negative punctures must be disjoint");
    }
};

// Leading asymptotic coefficients alpha[i][l-1] for end i+1, order l, and
// optional perturbation terms d[i][l-1] of the same shape.
template <typename K>
struct AsymptoticData {
    std::vector<std::vector<K>> alpha;
    std::vector<std::vector<K>> d;  // empty means identically zero

    int orders() const { return alpha.empty() ? 0 : static_cast<int>(alpha[0].size()); }

    void validate(int n, int m) const {
        if (static_cast<int>(alpha.size()) != n)
            throw InvalidConfiguration("asymptotic data needs one coefficient row per end");
        for (const auto& row : alpha)
            if (static_cast<int>(row.size()) < m)
                throw InvalidConfiguration("asymptotic data is missing orders");
        if (!d.empty()) {
            if (d.size() != alpha.size())
                throw InvalidConfiguration("perturbation rows must match coefficient rows");
            for (const auto& row : d)
                if (row.size() < static_cast<size_t>(m))
                    throw InvalidConfiguration("perturbation data is missing orders");
        }
    }

    K perturbation(int i, int ell) const {
        if (d.empty()) return K{0};
        return d[i][ell - 1];
    }
};

template <typename K>
K pow_int_generic(K base, unsigned exp) {
    K out{1};
    while (exp > 0) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

// Pointwise products over the puncture configuration:
//   A(z)  = prod_i (z - p_i)              A_k(z)  = A without the p_k factor
//   AA(z) = prod_{i <= n-2} (z - p_i)     AA_k(z) = AA without the p_k factor
//   B(z)  = prod_{j >= 2} (z - q_j)       B_k(z)  = B without the q_k factor
// Indices are 1-based to match the configuration layout.
template <typename K>
K prod_a(const CoverConfig<K>& cfg, const K& z) {
    K out{1};
    for (const K& pi : cfg.p) out *= z - pi;
    return out;
}

template <typename K>
K prod_a_skip(const CoverConfig<K>& cfg, int k, const K& z) {
    K out{1};
    for (int i = 1; i <= cfg.n(); ++i)
        if (i != k) out *= z - cfg.p[i - 1];
    return out;
}

template <typename K>
K prod_aa(const CoverConfig<K>& cfg, const K& z) {
    K out{1};
    for (int i = 1; i <= cfg.n() - 2; ++i) out *= z - cfg.p[i - 1];
    return out;
}

template <typename K>
K prod_aa_skip(const CoverConfig<K>& cfg, int k, const K& z) {
    K out{1};
    for (int i = 1; i <= cfg.n() - 2; ++i)
        if (i != k) out *= z - cfg.p[i - 1];
    return out;
}

template <typename K>
K prod_b(const CoverConfig<K>& cfg, const K& z) {
    K out{1};
    for (const K& qj : cfg.q) out *= z - qj;
    return out;
}

template <typename K>
K prod_b_skip(const CoverConfig<K>& cfg, int k, const K& z) {
    K out{1};
    for (int j = 2; j <= cfg.n() - 2; ++j)
        if (j != k) out *= z - cfg.q[j - 2];
    return out;
}

// r_i = B(p_i)/A_i(p_i) for i = 1..n; r_{-1} = 1; r_{-j} = A(q_j)/B_j(q_j).
template <typename K>
struct RCoefficients {
    std::vector<K> positive;  // r_1 .. r_n
    std::vector<K> negative;  // r_{-1} = 1, r_{-2} .. r_{-(n-2)}
};

template <typename K>
RCoefficients<K> r_coefficients(const CoverConfig<K>& cfg) {
    cfg.validate();
    RCoefficients<K> r;
    int n = cfg.n();
    r.positive.reserve(n);
    for (int i = 1; i <= n; ++i)
        r.positive.push_back(prod_b(cfg, cfg.p[i - 1]) / prod_a_skip(cfg, i, cfg.p[i - 1]));
    r.negative.push_back(K{1});
    for (int j = 2; j <= n - 2; ++j)
        r.negative.push_back(prod_a(cfg, cfg.q[j - 2]) / prod_b_skip(cfg, j, cfg.q[j - 2]));
    return r;
}

// Q_k(z) = AA_k(z)/B(z). Pole error at the finite negative punctures.
template <typename K>
K replacement_form_eval(const CoverConfig<K>& cfg, int k, const K& z) {
    if (k < 1 || k > cfg.n() - 2) throw PreconditionViolated("replacement index out of range");
    K denom = prod_b(cfg, z);
    if (denom == K{0}) throw DegenerateInput("replacement form has a pole at z");
    return prod_aa_skip(cfg, k, z) / denom;
}

// (n-2) x n matrix with entry (k, j) = Q_k^{(l-1)}(p_j)/(l-1)!, computed from
// the partial fraction decomposition
//   Q_k(z) = 1 - sum_t [AA_k(q_t)/B_t(q_t)] / (q_t - z),
// whose derivatives are [l = 1 keeps the constant term]
//   Q_k^{(l-1)}(z)/(l-1)! = delta_{l,1} - sum_t [AA_k(q_t)/B_t(q_t)] / (q_t - z)^l.
template <typename K>
std::vector<std::vector<K>> derivative_matrix(const CoverConfig<K>& cfg, int ell) {
    cfg.validate();
    if (ell < 1) throw PreconditionViolated("derivative order must be >= 1");
    int n = cfg.n();
    std::vector<std::vector<K>> out(n - 2, std::vector<K>(n, K{0}));
    for (int k = 1; k <= n - 2; ++k) {
        // Residue weights AA_k(q_t)/B_t(q_t) of Q_k at the finite q's.
        std::vector<K> weight;
        weight.reserve(cfg.q.size());
        for (int t = 2; t <= n - 2; ++t)
            weight.push_back(prod_aa_skip(cfg, k, cfg.q[t - 2]) /
                             prod_b_skip(cfg, t, cfg.q[t - 2]));
        for (int j = 1; j <= n; ++j) {
            K v = (ell == 1) ? K{1} : K{0};
            for (int t = 2; t <= n - 2; ++t) {
                K diff = cfg.q[t - 2] - cfg.p[j - 1];
                v -= weight[t - 2] / pow_int_generic(diff, static_cast<unsigned>(ell));
            }
            out[k - 1][j - 1] = v;
        }
    }
    return out;
}

// Float-only pieces: the cover map itself and the asymptotic markers.
CD cover_map_eval(const CoverConfig<CD>& cfg, CD z);

struct Markers {
    std::vector<CD> tau_positive;   // tau_1 .. tau_n = e^{i theta} r_i/|r_i|
    std::vector<CD> tau_negative;   // tau_{-2} .. tau_{-(n-2)} = e^{-i theta} r_{-j}/|r_{-j}|
    CD tau_neg1_cubed;              // tau_{-1}^3 = e^{-i theta}
};
Markers markers(const CoverConfig<CD>& cfg);

CoverConfig<CD> to_float(const CoverConfig<ComplexQ>& cfg);
AsymptoticData<CD> to_float(const AsymptoticData<ComplexQ>& asym);

}  // namespace ech
