#include "ech/sampling.hpp"

#include <algorithm>

#include "ech/appendix.hpp"
#include "ech/errors.hpp"

namespace ech {

std::uint64_t Sampler::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

long Sampler::uniform(long lo, long hi) {
    if (hi < lo) throw PreconditionViolated("empty sampling range");
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % range);
}

double Sampler::uniform_real(double lo, double hi) {
    double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

Rational Sampler::rational() {
    return Rational(uniform(-100, 100), uniform(1, 100));
}

Rational Sampler::nonzero_rational() {
    for (;;) {
        Rational r = rational();
        if (r != 0) return r;
    }
}

ComplexQ Sampler::complex_rational() { return {rational(), rational()}; }

ComplexQ Sampler::nonzero_complex_rational() {
    for (;;) {
        ComplexQ z = complex_rational();
        if (!z.is_zero()) return z;
    }
}

ComplexQ Sampler::complex_int(long lo, long hi) {
    return {Rational(uniform(lo, hi)), Rational(uniform(lo, hi))};
}

ComplexQ Sampler::nonzero_complex_int(long lo, long hi) {
    for (;;) {
        ComplexQ z = complex_int(lo, hi);
        if (!z.is_zero()) return z;
    }
}

std::vector<long> Sampler::partition(long m) {
    std::vector<long> parts;
    long rest = m;
    long cap = m;
    while (rest > 0) {
        long part = uniform(1, std::min(rest, cap));
        parts.push_back(part);
        cap = part;
        rest -= part;
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

namespace {

bool contains(const std::vector<ComplexQ>& v, const ComplexQ& z) {
    return std::find(v.begin(), v.end(), z) != v.end();
}

}  // namespace

CoverConfig<ComplexQ> Sampler::cover_config(int n) {
    if (n < 3) throw PreconditionViolated("cover needs n >= 3");
    CoverConfig<ComplexQ> cfg;
    while (static_cast<int>(cfg.p.size()) < n) {
        ComplexQ z = complex_rational();
        if (!contains(cfg.p, z)) cfg.p.push_back(z);
    }
    while (static_cast<int>(cfg.q.size()) < n - 3) {
        ComplexQ z = complex_rational();
        if (!contains(cfg.p, z) && !contains(cfg.q, z)) cfg.q.push_back(z);
    }
    cfg.theta = uniform_real(0.0, 6.0 * 3.141592653589793);
    cfg.big_t = uniform_real(0.0, 4.0);
    return cfg;
}

AsymptoticData<ComplexQ> Sampler::asymptotic_data(int n, int m) {
    AsymptoticData<ComplexQ> asym;
    asym.alpha.assign(n, {});
    for (auto& row : asym.alpha) {
        row.reserve(m);
        for (int ell = 0; ell < m; ++ell) row.push_back(nonzero_complex_rational());
    }
    return asym;
}

std::pair<CoverConfig<ComplexQ>, AsymptoticData<ComplexQ>> Sampler::z1_config(int n, int m) {
    for (;;) {
        CoverConfig<ComplexQ> cfg = cover_config(n);
        // Leading coefficients affine in the punctures put the configuration
        // on the order-1 zero set; resample until all of them are nonzero.
        ComplexQ slope = nonzero_complex_rational();
        ComplexQ offset = complex_rational();
        AsymptoticData<ComplexQ> asym = asymptotic_data(n, m);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            asym.alpha[i][0] = slope * cfg.p[i] + offset;
            if (asym.alpha[i][0].is_zero()) ok = false;
        }
        if (!ok) continue;
        return {std::move(cfg), std::move(asym)};
    }
}

std::pair<CoverConfig<ComplexQ>, AsymptoticData<ComplexQ>> Sampler::zm_config(int n, int m) {
    auto [cfg, asym] = z1_config(n, m);
    if (m == 1) return {std::move(cfg), std::move(asym)};
    RCoefficients<ComplexQ> r = r_coefficients(cfg);
    std::vector<std::vector<ComplexQ>> blocks = model_block_matrix(cfg, m);
    int nn = cfg.n();
    for (int ell = 2; ell <= m; ++ell) {
        // One pole-equation block; its nullspace has dimension >= 2.
        std::vector<std::vector<ComplexQ>> a(nn - 2, std::vector<ComplexQ>(nn));
        for (int row = 0; row < nn - 2; ++row)
            for (int col = 0; col < nn; ++col) a[row][col] = blocks[row][(ell - 1) * nn + col];
        std::vector<std::vector<ComplexQ>> basis = nullspace_basis(std::move(a));
        if (basis.empty()) throw Error("pole-equation block has trivial nullspace");
        std::vector<ComplexQ> x(nn, ComplexQ{0});
        for (size_t b = 0; b < basis.size(); ++b) {
            ComplexQ weight = (b == 0) ? nonzero_complex_rational() : complex_rational();
            for (int i = 0; i < nn; ++i) x[i] += weight * basis[b][i];
        }
        for (int i = 0; i < nn; ++i)
            asym.alpha[i][ell - 1] = x[i] / pow_int(r.positive[i], static_cast<unsigned>(ell));
    }
    return {std::move(cfg), std::move(asym)};
}

}  // namespace ech
