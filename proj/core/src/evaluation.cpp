#include "ech/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ech {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double relative_error(CD got, CD want) {
    double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

double wrap(double angle, double period) {
    double a = std::fmod(angle, period);
    if (a < 0) a += period;
    return a;
}

}  // namespace

std::vector<CD> mev(const CoverConfig<CD>& cfg, const AsymptoticData<CD>& asym, double s,
                    double z1_tol) {
    std::vector<CD> alpha1;
    alpha1.reserve(cfg.p.size());
    for (const auto& row : asym.alpha) alpha1.push_back(row[0]);
    double scale = 0.0;
    for (const CD& a : alpha1) scale = std::max(scale, std::abs(a));
    for (const CD& r : z1_residuals(cfg.p, alpha1))
        if (std::abs(r) > z1_tol * std::max(scale, 1e-300))
            throw PreconditionViolated("configuration is not on the order-1 zero set");

    MevCoefficients<CD> coeff = mev_coefficients(cfg, asym);
    std::vector<CD> out;
    out.reserve(coeff.mult1.size() + 1);
    out.push_back(std::polar(std::exp(-s / 3.0 - cfg.big_t), cfg.theta / 3.0) * coeff.mult3);
    double factor = std::exp(-s - cfg.big_t);
    for (const CD& v : coeff.mult1) out.push_back(factor * v);
    return out;
}

std::vector<CD> full_model_ev(const CoverConfig<CD>& cfg, const AsymptoticData<CD>& asym,
                              int truncation, double s) {
    cfg.validate();
    if (truncation < 1) throw PreconditionViolated("truncation must be >= 1");
    asym.validate(cfg.n(), truncation);
    int n = cfg.n();
    double big_t = cfg.big_t;

    auto coeff = [&](int i, int ell) {
        return asym.alpha[i - 1][ell - 1] * std::exp(-ell * big_t) + asym.perturbation(i - 1, ell);
    };

    std::vector<CD> out;
    // Multiplicity-3 entry: orders 1 and 2 survive the quadratic expansion
    // at infinity.
    CD e1{0};
    for (int i = 1; i <= n; ++i) {
        CD ri = prod_b(cfg, cfg.p[i - 1]) / prod_a_skip(cfg, i, cfg.p[i - 1]);
        e1 += std::polar(1.0, cfg.theta / 3.0) * cfg.p[i - 1] * ri * coeff(i, 1);
        if (truncation >= 2)
            e1 += std::polar(1.0, 4.0 * cfg.theta / 3.0) * ri * ri * coeff(i, 2);
    }
    out.push_back(std::exp(-s / 3.0) * e1);

    for (int k = 2; k <= n - 2; ++k) {
        CD qk = cfg.q[k - 2];
        CD acc{0};
        for (int i = 1; i <= n; ++i) {
            CD a_i_qk = prod_a_skip(cfg, i, qk);
            CD a_i_pi = prod_a_skip(cfg, i, cfg.p[i - 1]);
            CD b_k_pi = prod_b_skip(cfg, k, cfg.p[i - 1]);
            CD ratio = b_k_pi / a_i_pi;
            CD ratio_pow = CD{1};
            for (int ell = 1; ell <= truncation; ++ell) {
                ratio_pow *= ratio;
                double sign = (ell % 2 == 1) ? 1.0 : -1.0;
                acc += sign * static_cast<double>(ell) * a_i_qk * ratio_pow * coeff(i, ell) *
                       std::polar(1.0, (ell - 1) * cfg.theta);
            }
        }
        out.push_back(std::exp(-s) * acc / prod_b_skip(cfg, k, qk));
    }
    return out;
}

bool admissible_check(const std::vector<CD>& c) {
    for (const CD& v : c)
        if (v == CD{0}) return false;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (c[i] == c[j]) return false;
    return true;
}

bool admissible_check(const std::vector<ComplexQ>& c) {
    for (const ComplexQ& v : c)
        if (v.is_zero()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (c[i] == c[j]) return false;
    return true;
}

RestrictionSolveResult solve_restriction(const std::vector<CD>& c, const std::vector<CD>& alpha1,
                                         CD p_nm1, CD p_n, double big_t,
                                         const SolveOptions& opts) {
    int n = static_cast<int>(alpha1.size());
    if (static_cast<int>(c.size()) != n - 2)
        throw InvalidConfiguration("restriction needs n-2 entries");
    if (!admissible_check(c))
        throw InadmissibleRestriction("restriction lies on the big diagonal or hits zero");

    RestrictionSolveResult result;
    result.p = solve_z1(alpha1, p_nm1, p_n);

    CD a_nm1 = alpha1[n - 2];
    CD a_n = alpha1[n - 1];
    CD slope = a_nm1 - a_n;  // nonzero; solve_z1 would have thrown
    CD q_const = (p_n * a_nm1 - p_nm1 * a_n) / slope;

    // Inverting the multiplicity-1 closed form: q_k is affine in e^s.
    auto q_at = [&](double s) {
        std::vector<CD> q;
        q.reserve(n - 3);
        for (int k = 2; k <= n - 2; ++k)
            q.push_back(std::exp(s + big_t) * (p_nm1 - p_n) * c[k - 1] / slope + q_const);
        return q;
    };

    // Scale-free multiplicity-3 coefficient; on the zero set it is the
    // s-independent slope of the leading coefficients.
    CD mult3 = slope / (p_nm1 - p_n);

    // |mev_1(s)| = |c_1| as a log-difference; the norm argument guarantees
    // an odd number of sign changes.
    auto objective = [&](double s) {
        return std::log(std::abs(mult3)) - s / 3.0 - big_t - std::log(std::abs(c[0]));
    };

    std::vector<std::pair<double, double>> brackets;
    double step = (opts.s_max - opts.s_min) / opts.grid;
    double prev_s = opts.s_min;
    double prev_f = objective(prev_s);
    for (int i = 1; i <= opts.grid; ++i) {
        double cur_s = opts.s_min + i * step;
        double cur_f = objective(cur_s);
        if (std::isfinite(prev_f) && std::isfinite(cur_f) &&
            ((prev_f <= 0 && cur_f > 0) || (prev_f > 0 && cur_f <= 0)))
            brackets.emplace_back(prev_s, cur_s);
        prev_s = cur_s;
        prev_f = cur_f;
    }
    if (brackets.empty()) {
        std::ostringstream diag;
        diag << "no sign change on [" << opts.s_min << ", " << opts.s_max << "]; objective("
             << opts.s_min << ")=" << objective(opts.s_min) << ", objective(" << opts.s_max
             << ")=" << objective(opts.s_max);
        throw NumericRangeError("restriction solve found no bracket for s", diag.str());
    }

    for (auto [lo, hi] : brackets) {
        double flo = objective(lo);
        for (int it = 0; it < 200 && hi - lo > opts.refine_tol; ++it) {
            double mid = 0.5 * (lo + hi);
            double fmid = objective(mid);
            if ((flo <= 0) == (fmid <= 0)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
        RestrictionSolution sol;
        sol.s = 0.5 * (lo + hi);
        sol.q = q_at(sol.s);
        // theta/3 = arg(c_1) - arg(e^{-s/3} e^{-T} mult3), unique in R/6piZ.
        sol.theta = wrap(3.0 * std::arg(c[0] / mult3), 3.0 * kTwoPi);

        // Re-verification runs in the chart translated by the confluence
        // point of the solved punctures: the map depends on coordinate
        // differences only, and for s << 0 the recentered coordinates keep
        // the spread of the q's at full precision instead of losing it
        // against the common offset.
        CoverConfig<CD> cfg;
        for (const CD& pi : result.p) cfg.p.push_back(pi - q_const);
        for (int k = 2; k <= n - 2; ++k)
            cfg.q.push_back(std::exp(sol.s + big_t) * (p_nm1 - p_n) * c[k - 1] / slope);
        cfg.theta = sol.theta;
        cfg.big_t = big_t;
        AsymptoticData<CD> asym;
        asym.alpha.resize(n);
        for (int i = 0; i < n; ++i) asym.alpha[i] = {alpha1[i]};
        sol.mev_value = mev(cfg, asym, sol.s);
        sol.residual = 0.0;
        for (int k = 0; k < n - 2; ++k)
            sol.residual = std::max(sol.residual, relative_error(sol.mev_value[k], c[k]));
        if (sol.residual > opts.residual_tol) {
            std::ostringstream diag;
            diag << "solution at s=" << sol.s << " has residual " << sol.residual;
            throw NumericRangeError("restriction solution failed re-verification", diag.str());
        }
        result.solutions.push_back(std::move(sol));
    }
    result.parity = static_cast<int>(result.solutions.size() % 2);
    return result;
}

std::vector<std::pair<int, int>> perturbation_warnings(const AsymptoticData<CD>& asym,
                                                       double big_t) {
    std::vector<std::pair<int, int>> out;
    if (asym.d.empty()) return out;
    for (size_t i = 0; i < asym.alpha.size(); ++i)
        for (size_t l = 0; l < asym.d[i].size() && l < asym.alpha[i].size(); ++l) {
            double bound = std::abs(asym.alpha[i][l]) * std::exp(-static_cast<double>(l + 1) * big_t);
            if (std::abs(asym.d[i][l]) >= bound)
                out.push_back({static_cast<int>(i + 1), static_cast<int>(l + 1)});
        }
    return out;
}

double full_model_tail_estimate(const CoverConfig<CD>& cfg, const AsymptoticData<CD>& asym,
                                int truncation) {
    cfg.validate();
    if (truncation < 1) throw PreconditionViolated("truncation must be >= 1");
    asym.validate(cfg.n(), truncation);
    int n = cfg.n();
    double worst = 0.0;
    for (int k = 2; k <= n - 2; ++k) {
        CD qk = cfg.q[k - 2];
        double bk_qk = std::abs(prod_b_skip(cfg, k, qk));
        for (int i = 1; i <= n; ++i) {
            double ratio = std::abs(prod_b_skip(cfg, k, cfg.p[i - 1]) /
                                    prod_a_skip(cfg, i, cfg.p[i - 1])) *
                           std::exp(-cfg.big_t);
            double last = std::abs(prod_a_skip(cfg, i, qk)) *
                          std::pow(std::abs(prod_b_skip(cfg, k, cfg.p[i - 1]) /
                                            prod_a_skip(cfg, i, cfg.p[i - 1])),
                                   truncation) *
                          truncation *
                          (std::abs(asym.alpha[i - 1][truncation - 1]) *
                               std::exp(-truncation * cfg.big_t) +
                           std::abs(asym.perturbation(i - 1, truncation))) /
                          bk_qk;
            if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
            worst = std::max(worst, last * ratio / (1.0 - ratio));
        }
    }
    return worst;
}

double restriction_conditioning(const std::vector<CD>& c, const std::vector<CD>& alpha1, CD p_nm1,
                                CD p_n, double big_t) {
    int n = static_cast<int>(alpha1.size());
    if (n == 3) return std::numeric_limits<double>::infinity();
    CD slope = alpha1[n - 2] - alpha1[n - 1];
    if (slope == CD{0} || p_nm1 == p_n || c.empty() || c[0] == CD{0}) return 0.0;
    CD anchor = (p_n * alpha1[n - 2] - p_nm1 * alpha1[n - 1]) / slope;
    double mult3 = std::abs(slope / (p_nm1 - p_n));
    double s_root = 3.0 * (std::log(mult3) - std::log(std::abs(c[0]))) - 3.0 * big_t;
    double spread = std::numeric_limits<double>::infinity();
    for (int k = 1; k < n - 2; ++k)
        spread = std::min(spread,
                          std::exp(s_root + big_t) * std::abs((p_nm1 - p_n) * c[k] / slope));
    return spread / std::max(1.0, std::abs(anchor));
}

AuxGluingZeros aux_gluing_zeros(CD a1, CD a2) {
    CD delta = a2 - a1;
    if (delta == CD{0})
        throw DegenerateInput("equal coefficients make the auxiliary section vanish identically");
    // Re(delta e^{i theta/2}) = 0  <=>  theta = pi - 2 arg(delta) (mod 2pi).
    double base = wrap(std::numbers::pi - 2.0 * std::arg(delta), kTwoPi);
    AuxGluingZeros out;
    out.theta = {base, base + kTwoPi};
    return out;
}

bool winding_budget_check(int n, long zero_count, const std::vector<long>& k_pos,
                          const std::vector<long>& k_neg) {
    if (n < 3) throw PreconditionViolated("winding budget needs n >= 3");
    if (zero_count < 0) throw PreconditionViolated("zero count must be >= 0");
    long total = zero_count;
    for (long k : k_pos) total += k;
    for (long k : k_neg) total += k;
    return total <= n - 3;
}

long coker_rank(long branch_count) {
    if (branch_count < 0) throw PreconditionViolated("branch count must be >= 0");
    return branch_count;
}

long mn_rank(int n) {
    if (n < 3) throw PreconditionViolated("moduli rank needs n >= 3");
    return 2L * n - 4;
}

ReplacementSpaceDim replacement_space_dim(long g, long n, long k, long ell, int variant) {
    if (variant != 1 && variant != 2) throw PreconditionViolated("variant must be 1 or 2");
    if (g < 0 || n < 1 || k < 1 || ell < 0 || ell > k || ell >= n)
        throw PreconditionViolated("replacement space parameters out of range");
    if ((n - ell) % 2 != 0)
        throw InvalidConfiguration("odd-end count must match the parity of the total multiplicity");
    ReplacementSpaceDim out;
    out.dim = (n - ell) / 2 + k + g - 1 - (variant == 2 ? 1 : 0);
    out.codim = k - ell;
    if (out.dim < 0) throw InvalidConfiguration("replacement space is empty for these parameters");
    return out;
}

}  // namespace ech
