#include "rig/embed.hpp"
#include "rig/rigidity.hpp"

#include <benchmark/benchmark.h>

using namespace rig;

namespace {

Matrix<Rational> dense_matrix(std::size_t rows, std::size_t cols) {
    Matrix<Rational> m(rows, cols);
    long v = 1;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            v = (v * 48271) % 2147483647;
            Rational q(v % 19 - 9, 1 + v % 7);
            q.canonicalize();
            m(i, j) = q;
        }
    return m;
}

void bm_rref(benchmark::State& state) {
    auto m = dense_matrix(state.range(0), state.range(0) + 8);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref)->Arg(16)->Arg(32)->Arg(64);

void bm_gamma(benchmark::State& state) {
    std::size_t n = state.range(0);
    auto h = plucker_reference_quadrics(n, 2);
    auto grams = GramPair::identity(2 * n, h.r);
    for (auto _ : state) benchmark::DoNotOptimize(gamma(h, h, grams));
}
BENCHMARK(bm_gamma)->Arg(2)->Arg(3)->Arg(4);

void bm_s1_reduce(benchmark::State& state) {
    std::size_t n = state.range(0);
    auto g = Matrix<GaussianRational>::identity(n);
    auto gen = s1_generator(n, g);
    HermitianPoly q(n, 2, 2);
    for (const auto& m : monomial_basis(n, 2, 2)) q.add_term(m, GaussianRational(1, 1));
    for (auto _ : state) benchmark::DoNotOptimize(s1_reduce(q, g));
}
BENCHMARK(bm_s1_reduce)->Arg(3)->Arg(5)->Arg(7);

void bm_bochner(benchmark::State& state) {
    std::size_t n = state.range(0);
    auto h = plucker_reference_quadrics(n, 2);
    auto grams = GramPair::identity(2 * n, h.r);
    for (auto _ : state) benchmark::DoNotOptimize(bochner_rigid(h, grams));
}
BENCHMARK(bm_bochner)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void bm_fundamental_forms(benchmark::State& state) {
    auto f = plucker(state.range(0), 2);
    auto p = base_point(f);
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_forms(f, p));
}
BENCHMARK(bm_fundamental_forms)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
