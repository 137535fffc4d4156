#include "rectadd/bessel.hpp"
#include "rectadd/dunkl.hpp"
#include "rectadd/jack.hpp"
#include "rectadd/montecarlo.hpp"
#include "rectadd/qgamma.hpp"
#include "rectadd/rectconv.hpp"
#include "rectadd/set_partition.hpp"

#include <benchmark/benchmark.h>

using namespace rectadd;

namespace {

CumulantSeq bench_cumulants(int k) {
    CumulantSeq c;
    for (int i = 0; i < k; ++i) c.k.push_back(make_rat(2 * i + 1, i + 2));
    return c;
}

void BM_JackTableDegree(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        JackTable t(make_rat(3, 7), degree);
        for (const auto& l : enumerate_partitions(degree, degree))
            benchmark::DoNotOptimize(&t.jack(l));
    }
}
BENCHMARK(BM_JackTableDegree)->Arg(4)->Arg(6)->Arg(8);

void BM_BesselTrunc(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    std::vector<Rat> spec{Rat(2), Rat(1), make_rat(1, 2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_trunc(spec, make_rat(1, 2), 3, 4, order));
    }
}
BENCHMARK(BM_BesselTrunc)->Arg(3)->Arg(5);

void BM_DunklPowerSum(benchmark::State& state) {
    Rat theta = make_rat(1, 2);
    BesselTrunc b = bessel_trunc({Rat(2), Rat(1)}, theta, 2, 3, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dunkl_power_sum(2, b.poly, theta, 2, 3));
    }
}
BENCHMARK(BM_DunklPowerSum);

void BM_K2mOperator(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    HTParams p{Rat(2), make_rat(3, 2)};
    CumulantSeq c = bench_cumulants(k);
    for (auto _ : state) benchmark::DoNotOptimize(k2m_operator(c, p, k));
}
BENCHMARK(BM_K2mOperator)->Arg(4)->Arg(6)->Arg(8);

void BM_K2mPartitions(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    HTParams p{Rat(2), make_rat(3, 2)};
    CumulantSeq c = bench_cumulants(k);
    for (auto _ : state) benchmark::DoNotOptimize(k2m_partitions(c, p, k));
}
BENCHMARK(BM_K2mPartitions)->Arg(4)->Arg(6);

void BM_NoncrossingEvenEnumeration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            enumerate_set_partitions(n, SetPartitionFilter::noncrossing_even));
}
BENCHMARK(BM_NoncrossingEvenEnumeration)->Arg(8)->Arg(12);

void BM_ConvJackMoment(benchmark::State& state) {
    BetaParams p{2, 3, make_rat(1, 2)};
    Spectrum ra{{Rat(2), Rat(1)}}, rb{{make_rat(3, 2), make_rat(1, 2)}};
    for (auto _ : state)
        benchmark::DoNotOptimize(conv_jack_moment(Partition{2, 1}, ra, rb, p));
}
BENCHMARK(BM_ConvJackMoment);

void BM_MonteCarloBlock(benchmark::State& state) {
    mc::SampleConfig cfg;
    cfg.M = 2;
    cfg.N = 3;
    cfg.theta_case = mc::ThetaCase::one;
    cfg.spectraA = {2.0, 1.0};
    cfg.spectraB = {1.5, 0.5};
    cfg.samples = 4096;
    cfg.seed = 1;
    std::vector<Partition> stats{Partition{1}, Partition{2}};
    for (auto _ : state) benchmark::DoNotOptimize(mc::sample_sum_moments(cfg, stats));
    state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_MonteCarloBlock);

} // namespace

BENCHMARK_MAIN();
