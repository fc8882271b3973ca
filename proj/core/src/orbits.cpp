#include "ech/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ech/errors.hpp"

namespace ech {

long ReebOrbitSpec::hyperbolic_rotation() const {
    if (!hyperbolic()) throw PreconditionViolated("orbit '" + id + "' is elliptic");
    return std::get<long>(rotation);
}

const Rational& ReebOrbitSpec::elliptic_rotation() const {
    if (hyperbolic()) throw PreconditionViolated("orbit '" + id + "' is hyperbolic");
    return std::get<Rational>(rotation);
}

void ReebOrbitSpec::validate() const {
    if (action <= 0.0) throw InvalidConfiguration("orbit '" + id + "' needs positive action");
    if (kind == OrbitKind::elliptic) {
        if (!std::holds_alternative<Rational>(rotation))
            throw InvalidConfiguration("elliptic orbit '" + id + "' needs rational rotation");
        const Rational& th = std::get<Rational>(rotation);
        if (th <= 0 || th >= 1)
            throw InvalidConfiguration("elliptic rotation of '" + id + "' must lie in (0,1)");
        return;
    }
    if (!std::holds_alternative<long>(rotation))
        throw InvalidConfiguration("hyperbolic orbit '" + id + "' needs integer rotation");
    long n = std::get<long>(rotation);
    bool even = (n % 2 == 0);
    if (kind == OrbitKind::positive_hyperbolic && !even)
        throw InvalidConfiguration("positive hyperbolic orbit '" + id + "' needs even rotation");
    if (kind == OrbitKind::negative_hyperbolic && even)
        throw InvalidConfiguration("negative hyperbolic orbit '" + id + "' needs odd rotation");
}

ReebOrbitSpec make_hyperbolic(std::string id, long rotation, double action) {
    ReebOrbitSpec o;
    o.id = std::move(id);
    o.kind = (rotation % 2 == 0) ? OrbitKind::positive_hyperbolic : OrbitKind::negative_hyperbolic;
    o.rotation = rotation;
    o.action = action;
    o.validate();
    return o;
}

ReebOrbitSpec make_elliptic(std::string id, Rational theta, double action) {
    ReebOrbitSpec o;
    o.id = std::move(id);
    o.kind = OrbitKind::elliptic;
    o.rotation = std::move(theta);
    o.action = action;
    o.validate();
    return o;
}

double OrbitSet::total_action() const {
    double a = 0.0;
    for (const auto& e : entries) a += static_cast<double>(e.multiplicity) * e.orbit.action;
    return a;
}

void OrbitSet::validate() const {
    std::set<std::string> seen;
    for (const auto& e : entries) {
        e.orbit.validate();
        if (e.multiplicity < 1)
            throw InvalidConfiguration("orbit set multiplicities must be >= 1");
        if (!seen.insert(e.orbit.id).second)
            throw InvalidConfiguration("orbit '" + e.orbit.id + "' repeated in orbit set");
    }
}

bool OrbitSet::ech_generator() const {
    for (const auto& e : entries)
        if (e.orbit.hyperbolic() && e.multiplicity != 1) return false;
    return true;
}

void CurveData::validate() const {
    if (genus < 0 || delta < 0 || components < 1)
        throw InvalidConfiguration("curve needs genus >= 0, delta >= 0, components >= 1");
    for (const auto& e : ends) {
        e.orbit.validate();
        if (e.multiplicity < 1) throw InvalidConfiguration("end multiplicities must be >= 1");
    }
}

OrbitSet CurveData::orbit_set(EndSign sign) const {
    std::map<std::string, OrbitSet::Entry> grouped;
    for (const auto& e : ends) {
        if (e.sign != sign) continue;
        auto [it, fresh] = grouped.try_emplace(e.orbit.id, OrbitSet::Entry{e.orbit, 0});
        it->second.multiplicity += e.multiplicity;
    }
    OrbitSet out;
    out.entries.reserve(grouped.size());
    for (auto& [id, entry] : grouped) out.entries.push_back(std::move(entry));
    return out;
}

CurveData disjoint_union(const CurveData& a, const CurveData& b) {
    CurveData u;
    u.genus = a.genus + b.genus;
    u.components = a.components + b.components;
    u.ends = a.ends;
    u.ends.insert(u.ends.end(), b.ends.begin(), b.ends.end());
    u.rel_c1 = a.rel_c1 + b.rel_c1;
    u.rel_q = a.rel_q + b.rel_q;
    u.delta = a.delta + b.delta;
    return u;
}

CurveData formal_glue(const CurveData& top, const CurveData& bottom) {
    std::multiset<std::pair<std::string, long>> below, above;
    for (const auto& e : top.ends)
        if (e.sign == EndSign::negative) below.insert({e.orbit.id, e.multiplicity});
    for (const auto& e : bottom.ends)
        if (e.sign == EndSign::positive) above.insert({e.orbit.id, e.multiplicity});
    if (below != above)
        throw InvalidConfiguration("glued ends must match orbit-by-orbit with equal multiplicities");

    CurveData g;
    long pairs = static_cast<long>(below.size());
    // chi adds when matching ends are capped off pairwise.
    long chi = top.euler_characteristic() + bottom.euler_characteristic();
    g.components = 1;
    for (const auto& e : top.ends)
        if (e.sign == EndSign::positive) g.ends.push_back(e);
    for (const auto& e : bottom.ends)
        if (e.sign == EndSign::negative) g.ends.push_back(e);
    g.genus = (2 * g.components - chi - static_cast<long>(g.ends.size())) / 2;
    if (2 * g.components - 2 * g.genus - static_cast<long>(g.ends.size()) != chi || g.genus < 0 ||
        pairs == 0)
        throw InvalidConfiguration("glued surface has inconsistent Euler characteristic");
    g.rel_c1 = top.rel_c1 + bottom.rel_c1;
    g.rel_q = top.rel_q + bottom.rel_q;
    g.delta = top.delta + bottom.delta;
    return g;
}

void BraidData::validate() const {
    orbit.validate();
    if (!orbit.hyperbolic()) throw PreconditionViolated("braid data needs a hyperbolic orbit");
    size_t n = q.size();
    if (n == 0) throw InvalidConfiguration("braid data needs at least one end");
    if (rho.size() != n) throw InvalidConfiguration("braid winding list length mismatch");
    for (long qi : q)
        if (qi < 1) throw InvalidConfiguration("braid multiplicities must be >= 1");
    if (writhe && writhe->size() != n)
        throw InvalidConfiguration("braid writhe list length mismatch");
    if (linking) {
        if (linking->size() != n) throw InvalidConfiguration("linking matrix size mismatch");
        for (size_t i = 0; i < n; ++i) {
            if ((*linking)[i].size() != n)
                throw InvalidConfiguration("linking matrix must be square");
            for (size_t j = 0; j < n; ++j)
                if ((*linking)[i][j] != (*linking)[j][i])
                    throw InvalidConfiguration("linking matrix must be symmetric");
        }
    }
}

}  // namespace ech
