#include <benchmark/benchmark.h>

#include <random>

#include "cupqec/code.hpp"
#include "cupqec/cupgate.hpp"
#include "cupqec/homology.hpp"
#include "cupqec/product.hpp"
#include "cupqec/simplicial.hpp"

using namespace cupqec;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

void BM_rank(benchmark::State& state) {
    std::size_t n = state.range(0);
    BitMatrix m = random_matrix(n, n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(128)->Arg(512)->Arg(1024);

void BM_kernel(benchmark::State& state) {
    std::size_t n = state.range(0);
    BitMatrix m = random_matrix(n / 2, n, 9);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_kernel)->Arg(256)->Arg(1024);

void BM_betti_t4(benchmark::State& state) {
    SimplicialComplex t4 = ordered_product(ordered_product(torus(3), circle(3)), circle(3));
    for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(t4));
}
BENCHMARK(BM_betti_t4)->Unit(benchmark::kMillisecond);

void BM_cup_pair_sum(benchmark::State& state) {
    SimplicialComplex t3 = ordered_product(torus(3), circle(3));
    CupTable table(t3, 1, 2);
    std::mt19937_64 rng(3);
    BitVector a(t3.num_cells(1)), b(t3.num_cells(2));
    for (std::size_t i = 0; i < a.size(); ++i) a.set(i, rng() & 1);
    for (std::size_t i = 0; i < b.size(); ++i) b.set(i, rng() & 1);
    for (auto _ : state) benchmark::DoNotOptimize(table.pair_sum(a, b));
}
BENCHMARK(BM_cup_pair_sum);

void BM_distance_t2(benchmark::State& state) {
    std::size_t len = state.range(0);
    CssCode code = css_from_complex(chain_complex_of(torus(len)), 1);
    for (auto _ : state) {
        DistanceReport r = distance(code, std::size_t{2} << 30, 7);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_distance_t2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_cross_bases_t3(benchmark::State& state) {
    SimplicialComplex t2 = torus(3);
    SimplicialComplex s1 = circle(3);
    SimplicialComplex t3 = ordered_product(t2, s1);
    std::vector<HomologyBasis> ba = dense_bases(t2);
    std::vector<HomologyBasis> bb = dense_bases(s1);
    for (auto _ : state) benchmark::DoNotOptimize(cross_bases(t2, s1, t3, ba, bb));
}
BENCHMARK(BM_cross_bases_t3)->Unit(benchmark::kMillisecond);

void BM_phase_check_t3(benchmark::State& state) {
    SimplicialComplex t3 = ordered_product(torus(3), circle(3));
    for (auto _ : state) {
        PhaseCheckReport r = phase_polynomial_check(t3, 1, 1, 1, 100, 7);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_phase_check_t3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
