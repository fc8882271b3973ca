#pragma once

#include <optional>
#include <vector>

#include "ech/orbits.hpp"

namespace ech {

// Table of forced end-multiplicity patterns at a hyperbolic orbit:
// positive hyperbolic -> all ones; negative hyperbolic -> all twos when the
// total is even, twos plus a single one when the total is odd.
bool partition_check(OrbitKind kind, const std::vector<long>& multiplicities);

// Deficit of one group of ends at a hyperbolic orbit. For negative
// hyperbolic ends the odd multiplicities are taken first (the value only
// depends on the multiset):
//   sum_odd ((q_i - 1)/2 + i - 1) + sum_even (q_i/2 - 1).
// For positive hyperbolic ends it is sum (q_i - 1).
long deficit_at_orbit(OrbitKind kind, const std::vector<long>& multiplicities);

// Total deficit: group the curve's ends by embedded orbit and sign, sum
// deficit_at_orbit over all groups.
long deficit_total(const CurveData& curve);

struct IndexInequality {
    bool holds = false;
    long slack = 0;  // I - ind - 2*delta - Delta
};
IndexInequality index_inequality_check(const CurveData& curve);

// Both sides of the writhe/linking identity for a partition q of m at a
// negative hyperbolic orbit with mu(beta) = 1, so mu(beta^k) = k and
// rho_i = ceil(q_i / 2):
//   LHS = sum_i rho_i (q_i - 1) + sum_{i != j} min(q_i rho_j, q_j rho_i)
//   RHS = sum_{i=1..m} i - sum_i q_i + sum_{odd block desc} ((q_i-1)/2 + i-1)
struct WritheIdentitySides {
    long lhs = 0;
    long rhs = 0;
    bool equal() const { return lhs == rhs; }
};
WritheIdentitySides writhe_identity_sides(long m, const std::vector<long>& q);
bool writhe_identity_check(long m, const std::vector<long>& q);

// Per-bound report for the winding / writhe / linking inequalities at a
// negative end. Any bound whose data is missing is reported unchecked.
struct BraidBoundsReport {
    enum class Status { holds, equality, fails, unchecked };
    std::vector<Status> winding;                 // rho_i >= ceil(mu(beta^{q_i})/2)
    std::vector<Status> writhe;                  // w_i >= rho_i(q_i-1) + (gcd(q_i,rho_i)-1)
    std::vector<std::vector<Status>> linking;    // l_ij >= min(q_i rho_j, q_j rho_i), i<j
    bool all_hold() const;
};
BraidBoundsReport braid_bounds_check(const BraidData& braid);

// All partitions of m in weakly decreasing order.
std::vector<std::vector<long>> partitions_of(long m);

}  // namespace ech
