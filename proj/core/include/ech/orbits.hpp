#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ech/rational.hpp"

namespace ech {

enum class OrbitKind { positive_hyperbolic, negative_hyperbolic, elliptic };

enum class EndSign { positive, negative };

// Combinatorial Reeb orbit. Hyperbolic orbits carry the integer rotation
// number n of the trivialized return map (Conley-Zehnder index of the k-fold
// cover is k*n); elliptic orbits carry an irrational-stand-in rotation
// theta in (0,1) with CZ index 2*floor(k*theta)+1.
struct ReebOrbitSpec {
    std::string id;
    OrbitKind kind = OrbitKind::positive_hyperbolic;
    std::variant<long, Rational> rotation = 0L;
    double action = 1.0;

    bool hyperbolic() const { return kind != OrbitKind::elliptic; }
    long hyperbolic_rotation() const;
    const Rational& elliptic_rotation() const;

    // Throws InvalidConfiguration on kind/rotation mismatch (positive
    // hyperbolic needs n even, negative hyperbolic n odd, elliptic needs
    // theta strictly inside (0,1)) or non-positive action.
    void validate() const;
};

ReebOrbitSpec make_hyperbolic(std::string id, long rotation, double action = 1.0);
ReebOrbitSpec make_elliptic(std::string id, Rational theta, double action = 1.0);

// Orbit set: embedded orbits with positive multiplicities.
struct OrbitSet {
    struct Entry {
        ReebOrbitSpec orbit;
        long multiplicity = 1;
    };
    std::vector<Entry> entries;

    double total_action() const;
    void validate() const;  // pairwise-distinct ids, multiplicities >= 1
    bool ech_generator() const;  // hyperbolic orbits all have multiplicity 1
};

struct EndSpec {
    ReebOrbitSpec orbit;
    long multiplicity = 1;
    EndSign sign = EndSign::positive;
};

// Combinatorial shadow of a punctured holomorphic curve. The relative
// invariants are inputs: they are exactly the data the index formulas
// consume. `components` extends chi-additivity to disjoint unions;
// chi = 2*components - 2*genus - #ends.
struct CurveData {
    long genus = 0;
    long components = 1;
    std::vector<EndSpec> ends;
    long rel_c1 = 0;  // c_1(u^* xi, tau)
    long rel_q = 0;   // Q_tau
    long delta = 0;   // singularity count, >= 0

    long euler_characteristic() const {
        return 2 * components - 2 * genus - static_cast<long>(ends.size());
    }
    void validate() const;

    OrbitSet orbit_set(EndSign sign) const;  // group ends by embedded orbit
};

// Disjoint union: ends concatenate, chi adds, relative data adds.
CurveData disjoint_union(const CurveData& a, const CurveData& b);

// Formal gluing of `top` below-ends onto `bottom` above-ends. Requires the
// multiset of (orbit, multiplicity) pairs on the glued ends to match 1-1.
CurveData formal_glue(const CurveData& top, const CurveData& bottom);

// Braid bookkeeping at a single embedded orbit: end multiplicities q_i,
// winding numbers rho_i, and optional writhes / pairwise linking numbers.
struct BraidData {
    ReebOrbitSpec orbit;
    std::vector<long> q;
    std::vector<long> rho;
    std::optional<std::vector<long>> writhe;
    std::optional<std::vector<std::vector<long>>> linking;  // symmetric

    void validate() const;
};

}  // namespace ech
