#include <benchmark/benchmark.h>

#include "dgalg/hochschild.hpp"
#include "dgalg/models.hpp"

using namespace dgalg;

namespace {

std::shared_ptr<const DGAlgebra> poly_line(int top) {
    return std::make_shared<const DGAlgebra>(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, top, false));
}

void bm_bar_cohomology(benchmark::State& state) {
    auto a = std::make_shared<const DGAlgebra>(
        exterior_algebra(Field::rationals(), {{"a", -1}, {"b", -3}}));
    Window w{-static_cast<int>(state.range(0)), 0};
    for (auto _ : state) {
        BarComplex b = bar(nullptr, a, nullptr, w);
        benchmark::DoNotOptimize(cohomology(b.cx, w));
    }
}
BENCHMARK(bm_bar_cohomology)->Arg(6)->Arg(10)->Arg(14);

void bm_hochschild_complex(benchmark::State& state) {
    auto a = poly_line(2 * static_cast<int>(state.range(0)) + 4);
    auto m = std::make_shared<const DGBimodule>(
        truncate_module(DGBimodule::over_self(a), 2 * state.range(0)).module);
    for (auto _ : state)
        benchmark::DoNotOptimize(hochschild_complex(a, m, Window{-1, 4}));
}
BENCHMARK(bm_hochschild_complex)->Arg(2)->Arg(4)->Arg(6);

void bm_hh_ring(benchmark::State& state) {
    auto a = poly_line(2 * static_cast<int>(state.range(0)) + 4);
    auto m = std::make_shared<const DGBimodule>(
        truncate_module(DGBimodule::over_self(a), 2 * state.range(0)).module);
    for (auto _ : state)
        benchmark::DoNotOptimize(hh_cohomology(a, m, Window{-1, 4}));
}
BENCHMARK(bm_hh_ring)->Arg(2)->Arg(4)->Arg(6);

void bm_verify_s1(benchmark::State& state) {
    GroupModel g = model_group("s1", Field::rationals(), 8);
    Window w{-1, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem3(g, w));
}
BENCHMARK(bm_verify_s1)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
