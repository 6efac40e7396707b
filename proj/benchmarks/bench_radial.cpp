// Microbenchmarks for the radial evaluators, keyed on the gap n - m.

#include "zernike/bench.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace zernike;

void bm_eval(benchmark::State& state, AlgoId id)
{
    const int n = 28;
    const int m = n - static_cast<int>(state.range(0));
    const RadialIndex idx = make_index(n, m);
    const double rho = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_by_id(id, idx, rho));
    }
    state.SetLabel("n=28 m=" + std::to_string(m));
}

void register_all()
{
    for (const AlgoId id :
         {AlgoId::Bbtia, AlgoId::Bbtra, AlgoId::Kintner, AlgoId::Reference}) {
        auto* b = benchmark::RegisterBenchmark(
            ("eval/" + to_string(id)).c_str(),
            [id](benchmark::State& state) { bm_eval(state, id); });
        for (int diff = 0; diff <= 28; diff += 4) {
            b->Arg(diff);
        }
    }
    // The tree recursions explode with n, not n - m; keep them shallow.
    for (const AlgoId id : {AlgoId::PrataRuschOriginal, AlgoId::PrataRuschBeta,
                            AlgoId::ShakibaeiOriginal, AlgoId::ShakibaeiBeta}) {
        auto* b = benchmark::RegisterBenchmark(
            ("eval/" + to_string(id)).c_str(),
            [id](benchmark::State& state) { bm_eval(state, id); });
        for (int diff = 0; diff <= 12; diff += 4) {
            b->Arg(diff);
        }
    }
}

} // namespace

int main(int argc, char** argv)
{
    register_all();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
