#include <benchmark/benchmark.h>

#include <random>

#include "commdet/centrality.hpp"
#include "commdet/detect.hpp"
#include "commdet/eval.hpp"
#include "commdet/modularity.hpp"
#include "commdet/synth.hpp"

using namespace commdet;

namespace {

GeneratedNetwork lfr_instance(int n, double mu) {
    LfrParams params;
    params.n = n;
    params.mu = mu;
    return gen_lfr(params, 17);
}

void bm_lci_scores(benchmark::State& state) {
    auto [g, truth] = lfr_instance(static_cast<int>(state.range(0)), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(lci_scores(g));
    state.SetItemsProcessed(state.iterations() * g.node_count());
}
BENCHMARK(bm_lci_scores)->Arg(500)->Arg(2000);

void bm_f2_score(benchmark::State& state) {
    auto [g, truth] = lfr_instance(static_cast<int>(state.range(0)), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(f2_score(g, truth).value);
}
BENCHMARK(bm_f2_score)->Arg(500)->Arg(2000);

void bm_q_score(benchmark::State& state) {
    auto [g, truth] = lfr_instance(static_cast<int>(state.range(0)), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(q_score(g, truth).value);
}
BENCHMARK(bm_q_score)->Arg(500)->Arg(2000);

void bm_f2_delta(benchmark::State& state) {
    auto [g, truth] = lfr_instance(500, 0.3);
    CommunityState comm = CommunityState::seed(g, 0);
    NodeId candidate = g.neighbors(0).front();
    for (auto _ : state) benchmark::DoNotOptimize(f2_delta(comm, candidate, g));
}
BENCHMARK(bm_f2_delta);

void bm_detect(benchmark::State& state) {
    auto [g, truth] = lfr_instance(static_cast<int>(state.range(0)), 0.3);
    DetectionConfig cfg;
    cfg.restarts = 10;
    cfg.seed = 1;
    for (auto _ : state) {
        DetectionResult r = detect(g, cfg);
        benchmark::DoNotOptimize(r.partition.community_count());
    }
}
BENCHMARK(bm_detect)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void bm_detect_karate_like(benchmark::State& state) {
    auto [g, truth] = gen_ring_cliques(10, 5);
    DetectionConfig cfg;
    cfg.restarts = 10;
    cfg.seed = 1;
    for (auto _ : state) {
        DetectionResult r = detect(g, cfg);
        benchmark::DoNotOptimize(r.partition.community_count());
    }
}
BENCHMARK(bm_detect_karate_like);

void bm_nmi(benchmark::State& state) {
    auto [g, truth] = lfr_instance(2000, 0.3);
    DetectionConfig cfg;
    cfg.restarts = 2;
    cfg.seed = 1;
    Partition found = detect(g, cfg).partition;
    for (auto _ : state) benchmark::DoNotOptimize(nmi(truth, found));
}
BENCHMARK(bm_nmi);

void bm_gen_lfr(benchmark::State& state) {
    for (auto _ : state) {
        auto [g, truth] = lfr_instance(static_cast<int>(state.range(0)), 0.3);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(bm_gen_lfr)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
