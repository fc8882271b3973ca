#include <benchmark/benchmark.h>

#include "ech/appendix.hpp"
#include "ech/deficit.hpp"
#include "ech/evaluation.hpp"
#include "ech/sampling.hpp"

namespace {

using namespace ech;

void BM_RowReduce(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int m = static_cast<int>(state.range(1));
    Sampler rng(1);
    CoverConfig<ComplexQ> cfg = rng.cover_config(n);
    for (auto _ : state) {
        RowReduceResult rr = row_reduce_appendix(cfg, m);
        benchmark::DoNotOptimize(rr.matches_derivative_blocks);
    }
}
BENCHMARK(BM_RowReduce)->Args({4, 1})->Args({6, 2})->Args({8, 3});

void BM_LinearizedSection(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int m = static_cast<int>(state.range(1));
    Sampler rng(2);
    CoverConfig<ComplexQ> cfg = rng.cover_config(n);
    AsymptoticData<ComplexQ> asym = rng.asymptotic_data(n, m);
    for (auto _ : state) {
        Graded<ComplexQ> g = linearized_section(cfg, asym, m);
        benchmark::DoNotOptimize(g.component.size());
    }
}
BENCHMARK(BM_LinearizedSection)->Args({4, 1})->Args({6, 3});

void BM_DetReduction(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Sampler rng(3);
    std::vector<ComplexQ> pts;
    while (static_cast<int>(pts.size()) < n) {
        ComplexQ z = rng.complex_rational();
        if (std::find(pts.begin(), pts.end(), z) == pts.end()) pts.push_back(z);
    }
    ComplexQ slope = rng.nonzero_complex_rational();
    ComplexQ offset = rng.complex_rational();
    std::vector<ComplexQ> alphas(n);
    for (int i = 0; i < n; ++i) alphas[i] = slope * pts[i] + offset;
    for (auto _ : state) {
        DetReductionResult res = det_reduction_check(pts, alphas, n - 2);
        benchmark::DoNotOptimize(res.match);
    }
}
BENCHMARK(BM_DetReduction)->Arg(4)->Arg(6)->Arg(8);

void BM_SolveRestriction(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Sampler rng(4);
    std::vector<CD> alpha;
    std::vector<CD> c;
    for (int k = 0; k < n - 2; ++k) c.push_back(CD{static_cast<double>(k + 1), 1.0});
    for (;;) {  // draw until the zero-set solve is nondegenerate
        alpha.clear();
        for (int i = 0; i < n; ++i) alpha.push_back(to_complex(rng.nonzero_complex_int(-9, 9)));
        if (alpha[n - 2] == alpha[n - 1]) continue;
        try {
            solve_restriction(c, alpha, CD{0, 0}, CD{1, 1}, 1.0);
            break;
        } catch (const Error&) {
        }
    }
    for (auto _ : state) {
        RestrictionSolveResult res = solve_restriction(c, alpha, CD{0, 0}, CD{1, 1}, 1.0);
        benchmark::DoNotOptimize(res.parity);
    }
}
BENCHMARK(BM_SolveRestriction)->Arg(4)->Arg(6);

void BM_DeficitExhaustive(benchmark::State& state) {
    long m = state.range(0);
    for (auto _ : state) {
        long total = 0;
        for (const auto& q : partitions_of(m))
            total += deficit_at_orbit(OrbitKind::negative_hyperbolic, q);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_DeficitExhaustive)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
