// Microbenchmarks for the paths the suites hammer: arrow composition,
// disintegration, blow-up nets and ergodic decomposition.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cxdyn/dynamics.hpp"
#include "cxdyn/groupoid.hpp"
#include "cxdyn/measure.hpp"
#include "cxdyn/tangent.hpp"

using namespace cxdyn;

namespace {

void bench_compose(benchmark::State& state) {
    const GroupoidInstance inst(default_groupoid_config(FiniteSpace(8)));
    const MaximalIdeal& ideal = inst.ideal();
    const Func& f = inst.ideal_sample().front();
    const Arrow a(ideal, f, inst.units()[1]);
    const Arrow b(ideal, a.target_func(), inst.units()[2]);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(bench_compose);

void bench_disintegrate(benchmark::State& state) {
    const FiniteSpace sp(static_cast<Point>(state.range(0)));
    std::mt19937_64 rng(5);
    std::vector<double> w(static_cast<std::size_t>(sp.size()));
    for (double& x : w)
        x = 0.25 * static_cast<double>(1 + rng() % 8);
    const Measure nu(sp, std::move(w));

    std::vector<Func> parts;
    const Point half = sp.size() / 2;
    std::vector<double> lo(static_cast<std::size_t>(sp.size()), 0.0);
    std::vector<double> hi(static_cast<std::size_t>(sp.size()), 0.0);
    for (Point x = 0; x < sp.size(); ++x)
        (x < half ? lo : hi)[static_cast<std::size_t>(x)] = 1.0;
    parts.emplace_back(sp, std::move(lo));
    parts.emplace_back(sp, std::move(hi));

    for (auto _ : state)
        benchmark::DoNotOptimize(disintegrate(nu, parts));
}
BENCHMARK(bench_disintegrate)->Arg(8)->Arg(32)->Arg(256);

void bench_tangent_net(benchmark::State& state) {
    const HybridMeasure mu({Atom{0.25, 0.5}},
                           PiecewiseDensity::linear({0.0, 0.5, 1.0}, {0.0, 2.0, 1.0}));
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(tangent_net(mu, 0.5, depth));
}
BENCHMARK(bench_tangent_net)->Arg(8)->Arg(24);

void bench_ergodic_decompose(benchmark::State& state) {
    const FiniteSpace sp(static_cast<Point>(state.range(0)));
    const Transformation rot = Transformation::rotation(sp, 2);
    std::vector<double> w(static_cast<std::size_t>(sp.size()));
    for (Point x = 0; x < sp.size(); ++x)
        w[static_cast<std::size_t>(x)] = x % 2 == 0 ? 1.5 : 0.5;
    const Measure mu(sp, std::move(w));
    for (auto _ : state)
        benchmark::DoNotOptimize(ergodic_decompose(mu, rot));
}
BENCHMARK(bench_ergodic_decompose)->Arg(8)->Arg(64)->Arg(512);

} // namespace

BENCHMARK_MAIN();
