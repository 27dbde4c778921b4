#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cg2/codes.hpp"
#include "cg2/curves.hpp"
#include "cg2/field.hpp"

using namespace cg2;

namespace {

std::vector<std::uint32_t> random_elems(const Field& F, std::size_t count, bool nonzero) {
    std::mt19937 rng(12345);
    std::vector<std::uint32_t> v(count);
    for (auto& x : v) {
        do {
            x = rng() % F.q();
        } while (nonzero && x == 0);
    }
    return v;
}

void BM_FieldConstruction(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Field F(m);
        benchmark::DoNotOptimize(F.q());
    }
}
BENCHMARK(BM_FieldConstruction)->Arg(8)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Mul(benchmark::State& state) {
    const Field F(static_cast<int>(state.range(0)));
    const auto xs = random_elems(F, 4096, true);
    std::size_t i = 0;
    for (auto _ : state) {
        const std::uint32_t a = xs[i & 4095], b = xs[(i + 1) & 4095];
        benchmark::DoNotOptimize(F.raw_mul(a, b));
        ++i;
    }
}
BENCHMARK(BM_Mul)->Arg(8)->Arg(13)->Arg(20);

void BM_Inv(benchmark::State& state) {
    const Field F(static_cast<int>(state.range(0)));
    const auto xs = random_elems(F, 4096, true);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(F.raw_inv(xs[i & 4095]));
        ++i;
    }
}
BENCHMARK(BM_Inv)->Arg(8)->Arg(13)->Arg(20);

void BM_Trace(benchmark::State& state) {
    const Field F(static_cast<int>(state.range(0)));
    const auto xs = random_elems(F, 4096, false);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(F.raw_trace(xs[i & 4095]));
        ++i;
    }
}
BENCHMARK(BM_Trace)->Arg(8)->Arg(13)->Arg(20);

void BM_ArtinSchreierSolve(benchmark::State& state) {
    const Field F(static_cast<int>(state.range(0)));
    const auto ps = random_elems(F, 4096, true);
    const auto rs = random_elems(F, 4096, false);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(F.solve_artin_schreier(F.elem(ps[i & 4095]),
                                                        F.elem(rs[(i + 1) & 4095])));
        ++i;
    }
}
BENCHMARK(BM_ArtinSchreierSolve)->Arg(8)->Arg(13)->Arg(16);

void BM_DualWordWeight(benchmark::State& state) {
    const Field F(static_cast<int>(state.range(0)));
    const auto as = random_elems(F, 64, true);
    std::size_t i = 0;
    for (auto _ : state) {
        const DualTriple t{F.elem(as[i & 63]), F.elem(as[(i + 1) & 63]),
                           F.elem(as[(i + 2) & 63])};
        benchmark::DoNotOptimize(dual_word_weight(t, F));
        ++i;
    }
}
BENCHMARK(BM_DualWordWeight)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_DualWeightDistribution(benchmark::State& state) {
    const Field F(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dual_weight_distribution(F));
    }
}
BENCHMARK(BM_DualWeightDistribution)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_XPoints(benchmark::State& state) {
    const Field F(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(x_points(F));
    }
}
BENCHMARK(BM_XPoints)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_MacWilliams(benchmark::State& state) {
    const Field F(static_cast<int>(state.range(0)));
    const WeightDistribution dist = dual_weight_distribution(F);
    const CyclicCode code = build_code(CodeId::C, F);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            macwilliams_transform(dist, code.n, code.generator.degree()));
    }
}
BENCHMARK(BM_MacWilliams)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
