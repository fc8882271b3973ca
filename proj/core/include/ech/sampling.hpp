#pragma once

#include <cstdint>
#include <utility>

#include "ech/cover.hpp"
#include "ech/orbits.hpp"

namespace ech {

// Deterministic sampler (splitmix64) so that identical seeds reproduce
// identical trials on any platform. Rational magnitudes stay small: random
// numerators in [-100, 100] and denominators in [1, 100].
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    long uniform(long lo, long hi);  // inclusive bounds
    double uniform_real(double lo, double hi);

    Rational rational();
    Rational nonzero_rational();
    ComplexQ complex_rational();
    ComplexQ nonzero_complex_rational();
    // Gaussian integers in a box; the bounded log-magnitudes keep the
    // transcendental solves inside their bracketing window.
    ComplexQ complex_int(long lo, long hi);
    ComplexQ nonzero_complex_int(long lo, long hi);

    // Random partition of m (weakly decreasing parts).
    std::vector<long> partition(long m);

    // Generic cover configuration: distinct punctures, p and q disjoint.
    CoverConfig<ComplexQ> cover_config(int n);
    // Generic asymptotic data with all leading coefficients nonzero.
    AsymptoticData<ComplexQ> asymptotic_data(int n, int m);

    // Configuration on the order-1 zero set: leading coefficients affine in
    // the punctures; orders >= 2 random.
    std::pair<CoverConfig<ComplexQ>, AsymptoticData<ComplexQ>> z1_config(int n, int m);

    // Configuration in the order-m zero set: every order's coefficients are
    // drawn from the exact nullspace of the corresponding pole-equation block.
    std::pair<CoverConfig<ComplexQ>, AsymptoticData<ComplexQ>> zm_config(int n, int m);

private:
    std::uint64_t state_;
};

}  // namespace ech
