#pragma once

#include "ech/orbits.hpp"

namespace ech {

// Conley-Zehnder index of the k-fold cover in the stored trivialization:
// k*n for hyperbolic, 2*floor(k*theta)+1 for elliptic.
long cz_index(const ReebOrbitSpec& orbit, long k);

struct CzTotals {
    long mu = 0;    // sum of cz_index(alpha_i, m_i)
    long mu_i = 0;  // sum over i of sum_{j=1..m_i} cz_index(alpha_i, j)
};
CzTotals cz_totals(const OrbitSet& orbits);

// ind(u) = -chi + 2 c_1 + [mu of positive ends - mu of negative ends],
// each end of multiplicity q contributing cz_index(orbit, q).
long fredholm_index(const CurveData& curve);

// I(u) = c_1 + Q + mu^I(positive orbit set) - mu^I(negative orbit set).
long ech_index(const CurveData& curve);

// Degree-k branched cover with total branching order b: k*ind(v) + b.
long cover_fredholm(long ind_v, long k, long b);

// ECH index of a degree-d degenerate cover of an index-0 plane: -C(d,2).
long degenerate_cover_index(long d);

// Lower bound d*I(v) + C(d,2)(2g - 2 + ind(v) + h(v)) for a d-fold cover.
long cover_index_lower_bound(long i_v, long d, long g_v, long ind_v, long h_v);

// c_1 = chi + Q + writhe - 2*delta (relative adjunction bookkeeping).
long adjunction_c1(long chi, long q, long writhe, long delta);

// Shift the trivialization over one orbit: rotation moves by 2*shift per
// period and the relative Chern number follows the total end multiplicity,
// keeping ind and I unchanged.
CurveData retrivialize(const CurveData& curve, const std::string& orbit_id, long shift);

}  // namespace ech
