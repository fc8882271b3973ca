#include "ech/chain.hpp"

#include <algorithm>
#include <map>

#include "ech/deficit.hpp"
#include "ech/errors.hpp"
#include "ech/index_calculus.hpp"

namespace ech {

namespace {

std::map<std::string, long> multiplicity_map(const OrbitSet& s) {
    std::map<std::string, long> m;
    for (const auto& e : s.entries) m[e.orbit.id] += e.multiplicity;
    return m;
}

bool same_orbit_set(const OrbitSet& a, const OrbitSet& b) {
    return multiplicity_map(a) == multiplicity_map(b);
}

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

ComplexReport verify_complex(const ChainComplexData& c) {
    ComplexReport rep;
    int n = static_cast<int>(c.generators.size());
    if (n > (1 << 16)) {
        rep.problems.push_back("generator count exceeds the 2^16 cap");
        return rep;
    }
    for (int i = 0; i < n; ++i) {
        const OrbitSet& g = c.generators[i];
        try {
            g.validate();
        } catch (const Error& e) {
            rep.problems.push_back("generator " + std::to_string(i) + ": " + e.what());
            continue;
        }
        if (!g.ech_generator())
            rep.problems.push_back("generator " + std::to_string(i) +
                                   ": hyperbolic orbit with multiplicity > 1");
        if (g.total_action() >= c.action_bound)
            rep.problems.push_back("generator " + std::to_string(i) +
                                   ": total action exceeds the bound");
    }
    for (const auto& [a, b] : c.diff) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            rep.problems.push_back("differential entry " + pair_str(a, b) + " out of range");
            continue;
        }
        if (c.generators[b].total_action() >= c.generators[a].total_action())
            rep.problems.push_back("differential entry " + pair_str(a, b) +
                                   " does not decrease action");
    }
    if (!rep.problems.empty()) return rep;

    // d^2 = 0 over Z/2: count two-step paths mod 2 for every (a, c) pair.
    std::map<std::pair<int, int>, int> square;
    for (const auto& [a, b] : c.diff)
        for (const auto& [b2, cc] : c.diff)
            if (b == b2) square[{a, cc}] ^= 1;
    for (const auto& [pair, coeff] : square)
        if (coeff) rep.d_squared_violations.push_back(pair);
    std::sort(rep.d_squared_violations.begin(), rep.d_squared_violations.end());
    return rep;
}

std::vector<int> cobordism_apply(const CobordismData& d, int generator) {
    int n_src = static_cast<int>(d.source.generators.size());
    int n_tgt = static_cast<int>(d.target.generators.size());
    if (generator < 0 || generator >= n_src) throw PreconditionViolated("unknown generator");
    double action = d.source.generators[generator].total_action();
    std::set<int> acc;
    auto flip = [&](const CountTable& table) {
        for (const auto& [a, b] : table) {
            if (a != generator) continue;
            if (b < 0 || b >= n_tgt) throw InvalidConfiguration("count entry out of range");
            if (d.target.generators[b].total_action() >= action)
                throw InvalidConfiguration("count entry " + pair_str(a, b) +
                                           " does not decrease action");
            if (!acc.insert(b).second) acc.erase(b);
        }
    };
    flip(d.direct);
    flip(d.building);
    return {acc.begin(), acc.end()};
}

namespace {

// Z/2 chain as a sorted index set.
std::set<int> apply_diff(const ChainComplexData& c, int gen) {
    std::set<int> out;
    for (const auto& [a, b] : c.diff)
        if (a == gen) out.insert(b);
    return out;
}

}  // namespace

ChainMapReport chain_map_check(const CobordismData& d) {
    ChainMapReport rep;
    for (const ChainComplexData* side : {&d.source, &d.target}) {
        ComplexReport cr = verify_complex(*side);
        for (const auto& pr : cr.problems) rep.problems.push_back(pr);
        for (const auto& viol : cr.d_squared_violations)
            rep.problems.push_back("d^2 violation at " + pair_str(viol.first, viol.second));
    }
    if (!rep.problems.empty()) return rep;

    int n_src = static_cast<int>(d.source.generators.size());
    for (int a = 0; a < n_src; ++a) {
        // Phi(d a): push the source differential through the map.
        std::set<int> lhs;
        for (int mid : apply_diff(d.source, a))
            for (int t : cobordism_apply(d, mid)) {
                if (!lhs.insert(t).second) lhs.erase(t);
            }
        // d(Phi a).
        std::set<int> rhs;
        for (int mid : cobordism_apply(d, a))
            for (int t : apply_diff(d.target, mid)) {
                if (!rhs.insert(t).second) rhs.erase(t);
            }
        for (int t : lhs)
            if (!rhs.count(t)) rep.violations.push_back({a, t});
        for (int t : rhs)
            if (!lhs.count(t)) rep.violations.push_back({a, t});
    }
    std::sort(rep.violations.begin(), rep.violations.end());
    rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()),
                         rep.violations.end());
    return rep;
}

std::vector<int> building_tables_agree(const CobordismData& d, const CountTable& other_building) {
    CobordismData alt = d;
    alt.building = other_building;
    std::vector<int> differing;
    for (int a = 0; a < static_cast<int>(d.source.generators.size()); ++a)
        if (cobordism_apply(d, a) != cobordism_apply(alt, a)) differing.push_back(a);
    return differing;
}

namespace {

// Multiset of end multiplicities of `curve` at one orbit on one side.
std::vector<long> partition_at(const CurveData& curve, const std::string& orbit_id, EndSign sign) {
    std::vector<long> q;
    for (const auto& e : curve.ends)
        if (e.sign == sign && e.orbit.id == orbit_id) q.push_back(e.multiplicity);
    std::sort(q.rbegin(), q.rend());
    return q;
}

}  // namespace

BuildingReport ech_building_check(const BuildingCandidate& b) {
    b.top.validate();
    b.bottom.validate();
    b.intermediate.validate();
    BuildingReport rep;
    rep.degenerate = b.exceptional.empty();

    rep.generators_ok = b.top.orbit_set(EndSign::positive).ech_generator() &&
                        b.bottom.orbit_set(EndSign::negative).ech_generator();

    OrbitSet top_neg = b.top.orbit_set(EndSign::negative);
    OrbitSet bottom_pos = b.bottom.orbit_set(EndSign::positive);
    rep.orbit_sets_match =
        same_orbit_set(top_neg, b.intermediate) && same_orbit_set(bottom_pos, b.intermediate);

    // Partitions coincide except at the exceptional orbits, where the top
    // level carries (3,1,...,1) over the bottom's (1,...,1).
    rep.partitions_ok = true;
    std::map<std::string, long> exceptional;
    for (const auto& exc : b.exceptional) {
        exceptional[exc.orbit_id] = exc.multiplicity;
        if (exc.multiplicity == 2) rep.no_evaluation_map = true;
    }
    for (const auto& entry : b.intermediate.entries) {
        const std::string& id = entry.orbit.id;
        std::vector<long> above = partition_at(b.top, id, EndSign::negative);
        std::vector<long> below = partition_at(b.bottom, id, EndSign::positive);
        auto it = exceptional.find(id);
        if (it == exceptional.end()) {
            if (above != below) rep.partitions_ok = false;
            continue;
        }
        long m = it->second;
        if (entry.orbit.kind != OrbitKind::negative_hyperbolic || m < 3) {
            rep.partitions_ok = false;
            continue;
        }
        std::vector<long> want_above(m - 2, 1);
        want_above[0] = 3;
        if (above != want_above) rep.partitions_ok = false;
        if (below != std::vector<long>(m, 1)) rep.partitions_ok = false;
    }

    long binom_sum = 0, ind_sum = 0;
    for (const auto& exc : b.exceptional) {
        binom_sum += exc.multiplicity * (exc.multiplicity - 1) / 2;
        ind_sum += 2 * exc.multiplicity - 4;
    }
    rep.bottom_indices_ok =
        fredholm_index(b.bottom) == 0 && ech_index(b.bottom) == -binom_sum;
    rep.top_indices_ok = fredholm_index(b.top) == ind_sum && ech_index(b.top) == binom_sum;
    return rep;
}

DegenerationClass degeneration_classify(const DegenerationCandidate& c) {
    long ind_top = fredholm_index(c.top);
    long ind_bottom = fredholm_index(c.bottom);
    if (ind_top != 1 || ind_bottom != 0)
        throw InvalidConfiguration("two-level degeneration needs ind(top) = 1 and ind(bottom) = 0");

    OrbitSet intermediate = c.top.orbit_set(EndSign::negative);
    if (!same_orbit_set(intermediate, c.bottom.orbit_set(EndSign::positive)))
        throw InvalidConfiguration("intermediate orbit sets of the two levels disagree");

    long i_top = ech_index(c.top);
    long i_bottom = ech_index(c.bottom);

    if (intermediate.ech_generator()) {
        if (i_bottom != 0 || i_top != 1)
            throw InvalidConfiguration(
                "generator intermediate set forces I(bottom) = 0 and I(top) = 1");
        return DegenerationClass::ech_generator_class;
    }

    if (!c.covers.empty()) {
        long binom_sum = 0;
        bool consistent = true;
        std::map<std::string, long> mult = multiplicity_map(intermediate);
        for (const auto& cover : c.covers) {
            binom_sum += cover.multiplicity * (cover.multiplicity - 1) / 2;
            auto it = mult.find(cover.orbit_id);
            if (it == mult.end() || it->second != cover.multiplicity) consistent = false;
            // The top level must meet the degenerate cover in simple ends.
            std::vector<long> above = partition_at(c.top, cover.orbit_id, EndSign::negative);
            if (above != std::vector<long>(cover.multiplicity, 1)) consistent = false;
        }
        if (consistent && i_bottom == -binom_sum && i_top == 1 + binom_sum && i_top > 1)
            return DegenerationClass::exceptional_class;
    }
    return DegenerationClass::canceling_pair_class;
}

}  // namespace ech
