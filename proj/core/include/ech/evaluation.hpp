#pragma once

#include <array>
#include <optional>
#include <type_traits>

#include "ech/zero_set.hpp"

namespace ech {

// Scale-free parts of the model evaluation map on the order-1 zero set.
// The multiplicity-3 entry equals sum_i p_i H_i and assembles with the
// factor e^{-s/3} e^{i theta/3} e^{-T}; the multiplicity-1 entries assemble
// with e^{-s} e^{-T}.
//
// The multiplicity-3 normalization adopted here matches the degree count:
// mev_1 = e^{-s/3} e^{-2i theta/3} h''(0)/2 with h''(0) the honest second
// derivative 2 w sum_i p_i H_i. The alternative normalization that quotes
// the prefactor e^{i theta/3} for h''(0) itself differs by the global unit
// e^{-2i theta/3}; moduli agree either way.
template <typename K>
struct MevCoefficients {
    K mult3{};
    std::vector<K> mult1;
};

// Closed forms, valid on the order-1 zero set:
//   mult1[k] = [(a_{n-1} - a_n) q_k - (p_n a_{n-1} - p_{n-1} a_n)] / (p_{n-1} - p_n)
//   mult3    = (a_{n-1} - a_n) / (p_{n-1} - p_n).
// The sign convention is pinned by direct differentiation of the model (the
// determinant reduction already carries the parity of n, so no extra sign
// survives the cofactor sum). The mult3 line is where sum_i p_i H_i
// telescopes once the leading coefficients are affine in the punctures
// (power sums of degree < n-1 against the Lagrange weights vanish);
// evaluating through the slope stays conditioned when the negative
// punctures are large, where the literal sum cancels catastrophically.
template <typename K>
MevCoefficients<K> mev_coefficients(const CoverConfig<K>& cfg, const AsymptoticData<K>& asym) {
    cfg.validate();
    asym.validate(cfg.n(), 1);
    int n = cfg.n();
    if constexpr (std::is_same_v<K, ComplexQ>) {
        std::vector<K> alpha1;
        for (const auto& row : asym.alpha) alpha1.push_back(row[0]);
        for (const K& v : z1_residuals(cfg.p, alpha1))
            if (!v.is_zero())
                throw PreconditionViolated("configuration is not on the order-1 zero set");
    }
    MevCoefficients<K> out;
    K a_nm1 = asym.alpha[n - 2][0];
    K a_n = asym.alpha[n - 1][0];
    K denom = cfg.p[n - 2] - cfg.p[n - 1];
    out.mult3 = (a_nm1 - a_n) / denom;
    out.mult1.reserve(cfg.q.size());
    for (const K& qk : cfg.q)
        out.mult1.push_back(
            ((a_nm1 - a_n) * qk - (cfg.p[n - 1] * a_nm1 - cfg.p[n - 2] * a_n)) / denom);
    return out;
}

// Independent route: mult3 as the quadratic Taylor coefficient of
// h(zeta) = g(1/zeta) and mult1[k] = r_{-k} (g/w)'(q_k) by direct
// differentiation of the partial-fraction model.
template <typename K>
MevCoefficients<K> mev_coefficients_direct(const CoverConfig<K>& cfg,
                                           const AsymptoticData<K>& asym) {
    cfg.validate();
    asym.validate(cfg.n(), 1);
    int n = cfg.n();
    std::vector<K> h = h_coefficients(cfg, asym);
    MevCoefficients<K> out;
    // h(zeta)/w = sum_i H_i zeta/(1 - p_i zeta); coefficient of zeta^2 is
    // sum_i p_i H_i once the zeta^1 coefficient sum_i H_i vanishes.
    out.mult3 = K{0};
    for (int i = 0; i < n; ++i) out.mult3 += cfg.p[i] * h[i];
    RCoefficients<K> r = r_coefficients(cfg);
    for (int k = 2; k <= n - 2; ++k) {
        K der{0};
        for (int i = 0; i < n; ++i) {
            K diff = cfg.q[k - 2] - cfg.p[i];
            der -= h[i] / (diff * diff);
        }
        out.mult1.push_back(r.negative[k - 1] * der);
    }
    return out;
}

// Assembled model evaluation map at (s, theta, T) from the configuration.
// Entry 0 is the multiplicity-3 end; entries 1..n-3 follow q_2..q_{n-2}.
// The configuration must satisfy the order-1 zero-set relations to relative
// tolerance z1_tol.
std::vector<CD> mev(const CoverConfig<CD>& cfg, const AsymptoticData<CD>& asym, double s,
                    double z1_tol = 1e-9);

// Evaluation map of the truncated full model (perturbation terms d included),
// orders 1..truncation, with the same s-scaling as mev.
std::vector<CD> full_model_ev(const CoverConfig<CD>& cfg, const AsymptoticData<CD>& asym,
                              int truncation = 3, double s = 0.0);

// (end, order) pairs where the perturbation term fails to be dominated by
// its coefficient: |d_{i,l}| >= |alpha_{i,l}| e^{-l T}. A data-quality
// warning, never an error.
std::vector<std::pair<int, int>> perturbation_warnings(const AsymptoticData<CD>& asym,
                                                       double big_t);

// Geometric estimate of the orders dropped by the truncation, from the
// decay ratio of consecutive terms at each simple negative end. Infinity
// when the ratio does not contract.
double full_model_tail_estimate(const CoverConfig<CD>& cfg, const AsymptoticData<CD>& asym,
                                int truncation);

// Asymptotic restriction c in (C*)^{n-2}: admissible iff all entries are
// nonzero and pairwise distinct (off the big diagonal).
bool admissible_check(const std::vector<CD>& c);
bool admissible_check(const std::vector<ComplexQ>& c);

struct SolveOptions {
    double s_min = -50.0;
    double s_max = 50.0;
    int grid = 10000;
    double refine_tol = 1e-12;
    double residual_tol = 1e-9;
};

struct RestrictionSolution {
    double s = 0.0;
    double theta = 0.0;              // in [0, 6pi)
    std::vector<CD> q;               // solved finite negative punctures
    std::vector<CD> mev_value;       // re-assembled evaluation at the solution
    double residual = 0.0;           // max relative deviation from c
};

struct RestrictionSolveResult {
    std::vector<CD> p;               // punctures forced by the zero set
    std::vector<RestrictionSolution> solutions;
    int parity = 0;                  // number of solutions mod 2
};

// Solves mev = c over (q, s, theta) at fixed T: substitutes the linear
// closed form q_k(s), brackets |mev_1(s)| = |c_1| on a sign-change grid in
// s, bisects each bracket, then fixes theta uniquely in R/6piZ.
// Throws InadmissibleRestriction or NumericRangeError (with diagnostics).
RestrictionSolveResult solve_restriction(const std::vector<CD>& c, const std::vector<CD>& alpha1,
                                         CD p_nm1, CD p_n, double big_t,
                                         const SolveOptions& opts = {});

// Conditioning of the float re-verification for one restriction problem:
// the spread of the solved punctures around their confluence point,
// relative to the anchor scale. When this ratio drops toward machine
// epsilon over tolerance, no double-precision substitution can certify the
// solution; samplers reject such draws (the solver itself still reports
// honest diagnostics on them). Returns +infinity when n = 3.
double restriction_conditioning(const std::vector<CD>& c, const std::vector<CD>& alpha1, CD p_nm1,
                                CD p_n, double big_t);

// Zeros of the rank-1 auxiliary section theta -> <a2 - a1, e^{-i theta/2}>
// on R/4piZ. Always two zeros; the geometric count is over-counted by the
// marker choice at the multiplicity-2 end, reported as overcount = 2.
struct AuxGluingZeros {
    std::array<double, 2> theta{};   // increasing, in [0, 4pi)
    int overcount = 2;
};
AuxGluingZeros aux_gluing_zeros(CD a1, CD a2);

// Winding/degeneracy budget |#zeros| + sum k_i + sum k_{-j} <= n - 3.
bool winding_budget_check(int n, long zero_count, const std::vector<long>& k_pos,
                          const std::vector<long>& k_neg);

// Cokernel rank equals the branch-point count; the bundle over the n-end
// moduli space has rank 2n - 4.
long coker_rank(long branch_count);
long mn_rank(int n);

struct ReplacementSpaceDim {
    long dim = 0;    // complex dimension of the replacement space
    long codim = 0;  // real codimension k - l of the image subspace
};
// variant 1: all negative ends simple; variant 2: one triple negative end.
ReplacementSpaceDim replacement_space_dim(long g, long n, long k, long ell, int variant);

}  // namespace ech
