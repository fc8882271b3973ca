#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ech/orbits.hpp"

namespace ech {

using CountTable = std::set<std::pair<int, int>>;  // sparse Z/2 counts; present = 1

// Filtered Z/2 chain complex from supplied curve counts. Generators are
// orbit sets with total action below the bound; the differential counts are
// inputs (the holomorphic counts are not desk-computable) and every
// algebraic consequence is verified here.
struct ChainComplexData {
    std::vector<OrbitSet> generators;
    double action_bound = 0.0;  // L
    CountTable diff;
};

struct ComplexReport {
    std::vector<std::string> problems;  // admissibility / filtration / bounds
    std::vector<std::pair<int, int>> d_squared_violations;
    bool ok() const { return problems.empty() && d_squared_violations.empty(); }
};
ComplexReport verify_complex(const ChainComplexData& c);

struct CobordismData {
    ChainComplexData source;
    ChainComplexData target;
    CountTable direct;    // index-(0,0) curve counts
    CountTable building;  // index-0 building counts
};

// Phi(generator) as a sorted list of target indices with coefficient 1:
// mod-2 sum of both count tables over targets of smaller action.
std::vector<int> cobordism_apply(const CobordismData& d, int generator);

struct ChainMapReport {
    std::vector<std::string> problems;
    std::vector<std::pair<int, int>> violations;  // (source gen, target gen)
    bool ok() const { return problems.empty() && violations.empty(); }
};
ChainMapReport chain_map_check(const CobordismData& d);

// Data-level counterpart of restriction independence: two building tables
// induce the same map. Returns the generators where the maps differ.
std::vector<int> building_tables_agree(const CobordismData& d, const CountTable& other_building);

// Candidate two-level building: a symplectization level above a cobordism
// level, with the supplied exceptional orbits where the end partitions may
// disagree.
struct ExceptionalOrbit {
    std::string orbit_id;
    long multiplicity = 3;
};

struct BuildingCandidate {
    CurveData top;     // symplectization level
    CurveData bottom;  // cobordism level
    OrbitSet intermediate;
    std::vector<ExceptionalOrbit> exceptional;
};

struct BuildingReport {
    bool generators_ok = false;      // outer orbit sets are chain-complex generators
    bool orbit_sets_match = false;   // intermediate set agrees on both levels
    bool partitions_ok = false;      // matched partitions away from the exceptional orbits,
                                     // (3,1,...,1) over (1,...,1) at them
    bool bottom_indices_ok = false;  // ind = 0 and I = -sum C(m_j,2)
    bool top_indices_ok = false;     // ind = sum (2 m_j - 4) and I = +sum C(m_j,2)
    bool degenerate = false;         // no exceptional orbits at all
    bool no_evaluation_map = false;  // some exceptional multiplicity is 2
    std::optional<bool> restriction_ok;  // solve-based check when model data is attached
    bool ok() const {
        return generators_ok && orbit_sets_match && partitions_ok && bottom_indices_ok &&
               top_indices_ok && restriction_ok.value_or(true);
    }
};
BuildingReport ech_building_check(const BuildingCandidate& b);

enum class DegenerationClass { canceling_pair_class, exceptional_class, ech_generator_class };

struct DegenerationCandidate {
    CurveData top;     // expected ind 1
    CurveData bottom;  // expected ind 0
    // Degenerate plane covers contained in the bottom level, if any.
    std::vector<ExceptionalOrbit> covers;
};
DegenerationClass degeneration_classify(const DegenerationCandidate& c);

}  // namespace ech
