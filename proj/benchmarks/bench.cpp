// Micro-benchmarks for the exact-arithmetic paths that dominate the sweeps:
// bracket evaluation, Jacobi residuals, cocycle residuals, the left-symmetry
// sweep, coboundary membership, and the truncated cohomology ranks.

#include <benchmark/benchmark.h>

#include "hvloop/forms.hpp"
#include "hvloop/h2.hpp"
#include "hvloop/lsa.hpp"
#include "hvloop/membership.hpp"
#include "hvloop/structure_equations.hpp"

using namespace hvloop;

namespace {

const Window kBenchWindow{Rational(2), -1, 1, {Rational(1)}};  // 30 symbols

LsaParams bench_params() {
    return LsaParams{GaussianRational(Rational(2, 3)), GaussianRational(Rational(1)), CSign::plus,
                     BracketConvention::paper};
}

void BM_bracket_pairs(benchmark::State& state) {
    const std::vector<BasisIndex> basis = enumerate_basis(kBenchWindow);
    for (auto _ : state) {
        for (const BasisIndex& x : basis)
            for (const BasisIndex& y : basis) benchmark::DoNotOptimize(bracket(x, y));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(basis.size() * basis.size()));
}
BENCHMARK(BM_bracket_pairs);

void BM_jacobi_triples(benchmark::State& state) {
    const std::vector<BasisIndex> basis = enumerate_basis(kBenchWindow);
    for (auto _ : state) {
        for (const BasisIndex& x : basis)
            for (const BasisIndex& y : basis)
                for (const BasisIndex& z : basis) benchmark::DoNotOptimize(jacobi_residual(x, y, z));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(basis.size() * basis.size() * basis.size()));
}
BENCHMARK(BM_jacobi_triples);

void BM_cocycle_residuals(benchmark::State& state) {
    const std::vector<BasisIndex> basis = enumerate_basis(kBenchWindow);
    const BilinearForm psi = canonical_cocycle(0, 1).on(kBenchWindow);
    for (auto _ : state) {
        for (const BasisIndex& x : basis)
            for (const BasisIndex& y : basis)
                for (const BasisIndex& z : basis) {
                    if (!triple_closed(kBenchWindow, x, y, z)) continue;
                    benchmark::DoNotOptimize(cocycle_residual(psi, x, y, z));
                }
    }
}
BENCHMARK(BM_cocycle_residuals);

void BM_left_symmetry_sweep(benchmark::State& state) {
    const StructureFunctions f = structure_functions(bench_params());
    for (auto _ : state) benchmark::DoNotOptimize(left_symmetry_sweep(f, kBenchWindow));
}
BENCHMARK(BM_left_symmetry_sweep);

void BM_coboundary_membership(benchmark::State& state) {
    const BilinearForm phi = canonical_cocycle(0, 3).on(kBenchWindow);
    for (auto _ : state) benchmark::DoNotOptimize(is_coboundary(phi, kBenchWindow));
}
BENCHMARK(BM_coboundary_membership);

void BM_truncated_h2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(truncated_h2(kBenchWindow));
}
BENCHMARK(BM_truncated_h2);

}  // namespace

BENCHMARK_MAIN();
