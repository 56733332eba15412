// Serial vs OpenMP kernels for one walk step, plus a full sweep cell.

#include <benchmark/benchmark.h>

#include "lqw/walk_engine.hpp"

namespace {

void step_bench(benchmark::State& st, lqw::Backend backend) {
    const lqw::GridGeometry g(static_cast<int>(st.range(0)));
    const double l = lqw::preset_weight(lqw::WeightPreset::Proposed, g, 9);
    const lqw::StepConfig step(lqw::make_cluster(g, 9, {0, 0}), l, lqw::MarkedCoin::NegatedGrover, backend);
    auto state = lqw::new_uniform_state(g, l);
    for (auto _ : st) {
        lqw::walk_step(state, step);
        benchmark::DoNotOptimize(state.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(g.cell_count()));
    st.counters["threads"] = backend == lqw::Backend::OpenMP ? lqw::kernels::omp::max_threads() : 1;
}

void BM_StepSerial(benchmark::State& st) { step_bench(st, lqw::Backend::Serial); }
void BM_StepOpenMP(benchmark::State& st) { step_bench(st, lqw::Backend::OpenMP); }

void BM_EvolveToPeak(benchmark::State& st) {
    const lqw::GridGeometry g(static_cast<int>(st.range(0)));
    lqw::RunConfig run{lqw::make_cluster(g, 9, {0, 0}),
                       lqw::preset_weight(lqw::WeightPreset::Proposed, g, 9),
                       lqw::default_max_steps(g)};
    run.record_stride = run.max_steps;
    for (auto _ : st) benchmark::DoNotOptimize(lqw::evolve(run).peak_probability);
}

}  // namespace

BENCHMARK(BM_StepSerial)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_StepOpenMP)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_EvolveToPeak)->Arg(16)->Arg(30);

BENCHMARK_MAIN();
