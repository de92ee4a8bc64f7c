#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "degreelab/degree.hpp"
#include "degreelab/energy.hpp"
#include "degreelab/homology.hpp"
#include "degreelab/maps.hpp"
#include "degreelab/mesh.hpp"
#include "degreelab/young.hpp"

using namespace degreelab;

static void BM_MeshIntegrate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto mesh = ManifoldMesh::build(MeshKind::Sphere2, {n, 2 * n});
    for (auto _ : state) {
        double v = mesh.integrate_with([](const ChartSample& s) {
            return std::sin(3.0 * s.chart[1]) + 1.5;
        });
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(mesh.node_count()));
}
BENCHMARK(BM_MeshIntegrate)->RangeMultiplier(2)->Range(64, 1024);

static void BM_BubbleDegree(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto mesh = ManifoldMesh::build(MeshKind::Sphere2, {64 * k, 128 * k});
    const auto map = MapExpr::bubble(k);
    for (auto _ : state) {
        auto est = degree_by_jacobian(map, mesh, 4.0 * M_PI);
        benchmark::DoNotOptimize(est.raw);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(mesh.node_count()));
}
BENCHMARK(BM_BubbleDegree)->Arg(2)->Arg(8)->Arg(32);

static void BM_CompositeEnergy(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto mesh = ManifoldMesh::build(MeshKind::Torus2, {128 * k, 128 * k});
    const auto map = MapExpr::compose(
        {MapExpr::power_map(2), MapExpr::bubble(k), MapExpr::collapse()});
    const auto gauge = YoungFunction::power_log(2, 1);
    for (auto _ : state) {
        double v = orlicz_energy(map, mesh, gauge);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(mesh.node_count()));
}
BENCHMARK(BM_CompositeEnergy)->Arg(2)->Arg(4)->Arg(8);

static void BM_SmithNormalForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                entry(rng);
    for (auto _ : state) {
        auto copy = m;
        auto snf = smith_normal_form(std::move(copy));
        benchmark::DoNotOptimize(snf.rank);
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_LuxemburgNorm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> value(0.0, 10.0), weight(0.01, 2.0);
    WeightedField field;
    for (int i = 0; i < n; ++i) {
        field.values.push_back(value(rng));
        field.weights.push_back(weight(rng));
    }
    const auto gauge = YoungFunction::power_log(2, 1);
    for (auto _ : state) {
        double v = luxemburg_norm(field, gauge);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_LuxemburgNorm)->Range(256, 65536);

static void BM_DivergenceCheck(benchmark::State& state) {
    const auto gauge = YoungFunction::power_log(2, 1);
    for (auto _ : state) {
        auto v = check_divergence(gauge, 2);
        benchmark::DoNotOptimize(v.status);
    }
}
BENCHMARK(BM_DivergenceCheck);

BENCHMARK_MAIN();
