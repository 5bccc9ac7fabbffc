#include <benchmark/benchmark.h>

#include <random>

#include "sstar/capelli.hpp"
#include "sstar/parallel.hpp"

using namespace sstar;

namespace {

std::vector<EvalPoint> points(int n, int count) {
    std::mt19937_64 rng(42);
    std::vector<EvalPoint> out;
    for (int r = 0; r < count; ++r) {
        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.push_back(Rational(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 100) + 1));
        out.emplace_back(std::move(x));
    }
    return out;
}

ExecMode mode_of(const benchmark::State& state) { return state.range(0) ? ExecMode::Parallel : ExecMode::Serial; }

void BM_EvalGridDet(benchmark::State& state) {
    auto mus = partitions_up_to(5, 4);
    auto pts = points(4, 50);
    for (auto _ : state) benchmark::DoNotOptimize(eval_grid(mus, pts, Engine::Det, mode_of(state)));
}

void BM_EvalGridComb(benchmark::State& state) {
    auto mus = partitions_up_to(5, 4);
    auto pts = points(4, 50);
    for (auto _ : state) benchmark::DoNotOptimize(eval_grid(mus, pts, Engine::Comb, mode_of(state)));
}

void BM_CapelliOperator(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(capelli_operator({2, 1}, 3, 3, mode_of(state)));
}

void BM_SchurWeylLhs(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(schur_weyl_lhs(2, 4, {2, 1}, mode_of(state)));
}

}  // namespace

// Argument 0 runs the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_EvalGridDet)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalGridComb)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CapelliOperator)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SchurWeylLhs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
