#include "ech/index_calculus.hpp"

#include "ech/errors.hpp"

namespace ech {

long cz_index(const ReebOrbitSpec& orbit, long k) {
    if (k < 1) throw PreconditionViolated("cover multiplicity must be >= 1");
    if (orbit.hyperbolic()) return k * orbit.hyperbolic_rotation();
    // 2*floor(k*theta) + 1 with exact rational theta.
    Rational kt = Rational(k) * orbit.elliptic_rotation();
    BigInt num = numerator(kt);
    BigInt den = denominator(kt);
    if (num % den == 0)
        throw InvalidConfiguration("elliptic rotation hits an integer multiple at k=" +
                                   std::to_string(k));
    BigInt fl = num / den;
    if (num < 0 && num % den != 0) fl -= 1;
    return 2 * fl.convert_to<long>() + 1;
}

CzTotals cz_totals(const OrbitSet& orbits) {
    CzTotals t;
    for (const auto& e : orbits.entries) {
        t.mu += cz_index(e.orbit, e.multiplicity);
        for (long j = 1; j <= e.multiplicity; ++j) t.mu_i += cz_index(e.orbit, j);
    }
    return t;
}

namespace {

void require_hyperbolic_ends(const CurveData& curve) {
    for (const auto& e : curve.ends)
        if (!e.orbit.hyperbolic())
            throw PreconditionViolated("index calculus supports hyperbolic ends only");
}

}  // namespace

long fredholm_index(const CurveData& curve) {
    curve.validate();
    require_hyperbolic_ends(curve);
    long mu = 0;
    for (const auto& e : curve.ends) {
        long c = cz_index(e.orbit, e.multiplicity);
        mu += (e.sign == EndSign::positive) ? c : -c;
    }
    return -curve.euler_characteristic() + 2 * curve.rel_c1 + mu;
}

long ech_index(const CurveData& curve) {
    curve.validate();
    require_hyperbolic_ends(curve);
    long mu_i = cz_totals(curve.orbit_set(EndSign::positive)).mu_i -
                cz_totals(curve.orbit_set(EndSign::negative)).mu_i;
    return curve.rel_c1 + curve.rel_q + mu_i;
}

long cover_fredholm(long ind_v, long k, long b) {
    if (k < 1) throw PreconditionViolated("cover degree must be >= 1");
    if (b < 0) throw PreconditionViolated("branching order must be >= 0");
    return k * ind_v + b;
}

long degenerate_cover_index(long d) {
    if (d < 1) throw PreconditionViolated("cover degree must be >= 1");
    return -d * (d - 1) / 2;
}

long cover_index_lower_bound(long i_v, long d, long g_v, long ind_v, long h_v) {
    if (d < 1) throw PreconditionViolated("cover degree must be >= 1");
    long binom = d * (d - 1) / 2;
    return d * i_v + binom * (2 * g_v - 2 + ind_v + h_v);
}

long adjunction_c1(long chi, long q, long writhe, long delta) {
    return chi + q + writhe - 2 * delta;
}

CurveData retrivialize(const CurveData& curve, const std::string& orbit_id, long shift) {
    CurveData out = curve;
    long m_pos = 0, m_neg = 0;
    for (auto& e : out.ends) {
        if (e.orbit.id != orbit_id) continue;
        if (!e.orbit.hyperbolic())
            throw PreconditionViolated("trivialization shifts support hyperbolic orbits only");
        e.orbit.rotation = e.orbit.hyperbolic_rotation() + 2 * shift;
        (e.sign == EndSign::positive ? m_pos : m_neg) += e.multiplicity;
    }
    // Compensate so that ind and I are trivialization-independent.
    out.rel_c1 -= shift * (m_pos - m_neg);
    out.rel_q -= shift * (m_pos * m_pos - m_neg * m_neg);
    return out;
}

}  // namespace ech
