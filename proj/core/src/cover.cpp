#include "ech/cover.hpp"

#include <cmath>

namespace ech {

CD cover_map_eval(const CoverConfig<CD>& cfg, CD z) {
    cfg.validate();
    CD denom = prod_a(cfg, z);
    if (denom == CD{0}) throw DegenerateInput("cover map has a pole at z");
    return std::polar(1.0, cfg.theta) * prod_b(cfg, z) / denom;
}

Markers markers(const CoverConfig<CD>& cfg) {
    cfg.validate();
    RCoefficients<CD> r = r_coefficients(cfg);
    Markers m;
    CD rot = std::polar(1.0, cfg.theta);
    m.tau_positive.reserve(r.positive.size());
    for (const CD& ri : r.positive) m.tau_positive.push_back(rot * ri / std::abs(ri));
    for (size_t j = 1; j < r.negative.size(); ++j)
        m.tau_negative.push_back(std::conj(rot) * r.negative[j] / std::abs(r.negative[j]));
    m.tau_neg1_cubed = std::conj(rot);
    return m;
}

CoverConfig<CD> to_float(const CoverConfig<ComplexQ>& cfg) {
    CoverConfig<CD> out;
    out.theta = cfg.theta;
    out.big_t = cfg.big_t;
    out.p.reserve(cfg.p.size());
    for (const auto& z : cfg.p) out.p.push_back(to_complex(z));
    out.q.reserve(cfg.q.size());
    for (const auto& z : cfg.q) out.q.push_back(to_complex(z));
    return out;
}

AsymptoticData<CD> to_float(const AsymptoticData<ComplexQ>& asym) {
    AsymptoticData<CD> out;
    auto conv = [](const std::vector<std::vector<ComplexQ>>& rows) {
        std::vector<std::vector<CD>> o;
        o.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<CD> r;
            r.reserve(row.size());
            for (const auto& z : row) r.push_back(to_complex(z));
            o.push_back(std::move(r));
        }
        return o;
    };
    out.alpha = conv(asym.alpha);
    out.d = conv(asym.d);
    return out;
}

}  // namespace ech
