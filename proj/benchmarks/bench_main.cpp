#include <benchmark/benchmark.h>

#include "milboost/boosting.hpp"
#include "milboost/milearn.hpp"
#include "milboost/oracle.hpp"
#include "milboost/synth.hpp"

using namespace milboost;

namespace {

MILDataset bench_dataset(int num_bags, int dimension, int max_bag_size) {
    SynthSpec spec;
    spec.regime = SynthRegime::HomogeneousDependent;
    spec.dimension = dimension;
    spec.max_bag_size = max_bag_size;
    spec.num_bags = num_bags;
    spec.seed = 42;
    return generate_synthetic(spec);
}

WeightedInstanceSample bench_sample(int num_bags, int dimension) {
    const MILDataset ds = bench_dataset(num_bags, dimension, 6);
    return lift_distribution(ds.bags, BagDistribution::uniform(ds.bags.size()),
                             LiftMode::PerInstance);
}

}  // namespace

static void BM_EnumerateStumps(benchmark::State& state) {
    const MILDataset ds = bench_dataset(static_cast<int>(state.range(0)), 4, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_stumps(ds));
    }
}
BENCHMARK(BM_EnumerateStumps)->Arg(50)->Arg(200);

static void BM_ErmStumps(benchmark::State& state) {
    const WeightedInstanceSample sample =
        bench_sample(static_cast<int>(state.range(0)), 4);
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(erm_stumps(sample, threads));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(sample.items.size()));
}
BENCHMARK(BM_ErmStumps)
    ->Args({100, 1})
    ->Args({100, 4})
    ->Args({500, 1})
    ->Args({500, 4});

static void BM_ErmOneSided(benchmark::State& state) {
    const WeightedInstanceSample sample =
        bench_sample(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(erm_one_sided(sample));
    }
}
BENCHMARK(BM_ErmOneSided)->Arg(100)->Arg(500);

static void BM_WeakLearn(benchmark::State& state) {
    const MILDataset ds = bench_dataset(static_cast<int>(state.range(0)), 4, 6);
    const BagDistribution dist = BagDistribution::uniform(ds.bags.size());
    for (auto _ : state) {
        benchmark::DoNotOptimize(milearn(ds.bags, dist, MILearnConfig{}));
    }
}
BENCHMARK(BM_WeakLearn)->Arg(100)->Arg(500);

static void BM_AdaBoost(benchmark::State& state) {
    const MILDataset ds = bench_dataset(200, 4, 6);
    const int rounds = static_cast<int>(state.range(0));
    const WeakLearner weak = [](std::span<const Bag> bags,
                                const BagDistribution& dist) {
        return milearn(bags, dist, MILearnConfig{});
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(adaboost(ds.bags, weak, rounds));
    }
}
BENCHMARK(BM_AdaBoost)->Arg(5)->Arg(20);

BENCHMARK_MAIN();
