#include "ech/deficit.hpp"

#include <algorithm>
#include <numeric>

#include "ech/errors.hpp"
#include "ech/index_calculus.hpp"

namespace ech {

namespace {

void require_ends(const std::vector<long>& q) {
    if (q.empty()) throw PreconditionViolated("multiplicity list must be nonempty");
    for (long qi : q)
        if (qi < 1) throw PreconditionViolated("multiplicities must be >= 1");
}

}  // namespace

bool partition_check(OrbitKind kind, const std::vector<long>& multiplicities) {
    require_ends(multiplicities);
    if (kind == OrbitKind::elliptic)
        throw PreconditionViolated("partition conditions are modeled for hyperbolic orbits only");
    if (kind == OrbitKind::positive_hyperbolic) {
        return std::all_of(multiplicities.begin(), multiplicities.end(),
                           [](long q) { return q == 1; });
    }
    long m = std::accumulate(multiplicities.begin(), multiplicities.end(), 0L);
    long ones = 0;
    for (long q : multiplicities) {
        if (q == 1)
            ++ones;
        else if (q != 2)
            return false;
    }
    return (m % 2 == 0) ? ones == 0 : ones == 1;
}

long deficit_at_orbit(OrbitKind kind, const std::vector<long>& multiplicities) {
    require_ends(multiplicities);
    if (kind == OrbitKind::elliptic)
        throw PreconditionViolated("deficits are modeled for hyperbolic orbits only");
    if (kind == OrbitKind::positive_hyperbolic) {
        long d = 0;
        for (long q : multiplicities) d += q - 1;
        return d;
    }
    std::vector<long> odd, even;
    for (long q : multiplicities) (q % 2 ? odd : even).push_back(q);
    std::sort(odd.rbegin(), odd.rend());
    long d = 0;
    for (size_t i = 0; i < odd.size(); ++i) d += (odd[i] - 1) / 2 + static_cast<long>(i);
    for (long q : even) d += q / 2 - 1;
    return d;
}

long deficit_total(const CurveData& curve) {
    curve.validate();
    long total = 0;
    for (EndSign sign : {EndSign::positive, EndSign::negative}) {
        // Group end multiplicities by embedded orbit.
        std::map<std::string, std::pair<OrbitKind, std::vector<long>>> groups;
        for (const auto& e : curve.ends) {
            if (e.sign != sign) continue;
            auto& g = groups[e.orbit.id];
            g.first = e.orbit.kind;
            g.second.push_back(e.multiplicity);
        }
        for (const auto& [id, g] : groups) total += deficit_at_orbit(g.first, g.second);
    }
    return total;
}

IndexInequality index_inequality_check(const CurveData& curve) {
    IndexInequality r;
    r.slack = ech_index(curve) - fredholm_index(curve) - 2 * curve.delta - deficit_total(curve);
    r.holds = r.slack >= 0;
    return r;
}

WritheIdentitySides writhe_identity_sides(long m, const std::vector<long>& q) {
    require_ends(q);
    if (std::accumulate(q.begin(), q.end(), 0L) != m)
        throw PreconditionViolated("multiplicities must sum to m");

    size_t n = q.size();
    std::vector<long> rho(n);
    for (size_t i = 0; i < n; ++i) rho[i] = (q[i] + 1) / 2;  // ceil(q/2), mu(beta^q) = q

    WritheIdentitySides s;
    for (size_t i = 0; i < n; ++i) s.lhs += rho[i] * (q[i] - 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) s.lhs += std::min(q[i] * rho[j], q[j] * rho[i]);

    s.rhs = m * (m + 1) / 2 - m;
    std::vector<long> odd;
    for (long qi : q)
        if (qi % 2) odd.push_back(qi);
    std::sort(odd.rbegin(), odd.rend());
    for (size_t i = 0; i < odd.size(); ++i) s.rhs += (odd[i] - 1) / 2 + static_cast<long>(i);
    return s;
}

bool writhe_identity_check(long m, const std::vector<long>& q) {
    return writhe_identity_sides(m, q).equal();
}

bool BraidBoundsReport::all_hold() const {
    auto ok = [](Status s) { return s != Status::fails; };
    if (!std::all_of(winding.begin(), winding.end(), ok)) return false;
    if (!std::all_of(writhe.begin(), writhe.end(), ok)) return false;
    for (const auto& row : linking)
        if (!std::all_of(row.begin(), row.end(), ok)) return false;
    return true;
}

BraidBoundsReport braid_bounds_check(const BraidData& braid) {
    braid.validate();
    size_t n = braid.q.size();
    BraidBoundsReport rep;
    rep.winding.resize(n, BraidBoundsReport::Status::unchecked);
    rep.writhe.resize(n, BraidBoundsReport::Status::unchecked);
    rep.linking.assign(n, std::vector<BraidBoundsReport::Status>(
                              n, BraidBoundsReport::Status::unchecked));

    auto classify = [](long value, long bound) {
        if (value < bound) return BraidBoundsReport::Status::fails;
        return value == bound ? BraidBoundsReport::Status::equality
                              : BraidBoundsReport::Status::holds;
    };

    for (size_t i = 0; i < n; ++i) {
        long mu = cz_index(braid.orbit, braid.q[i]);
        long bound = (mu >= 0) ? (mu + 1) / 2 : -((-mu) / 2);  // ceil(mu/2)
        rep.winding[i] = classify(braid.rho[i], bound);
        if (braid.writhe) {
            long d = std::gcd(braid.q[i], std::abs(braid.rho[i]));
            rep.writhe[i] = classify((*braid.writhe)[i], braid.rho[i] * (braid.q[i] - 1) + d - 1);
        }
        if (braid.linking) {
            for (size_t j = i + 1; j < n; ++j) {
                long bound_l =
                    std::min(braid.q[i] * braid.rho[j], braid.q[j] * braid.rho[i]);
                rep.linking[i][j] = rep.linking[j][i] =
                    classify((*braid.linking)[i][j], bound_l);
            }
        }
    }
    return rep;
}

std::vector<std::vector<long>> partitions_of(long m) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long first = std::min(rest, maxpart); first >= 1; --first) {
            cur.push_back(first);
            self(self, rest - first, first);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

}  // namespace ech
