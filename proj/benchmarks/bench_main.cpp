#include <benchmark/benchmark.h>

#include "ospchar/character_sum.hpp"
#include "ospchar/schur.hpp"
#include "ospchar/weyl.hpp"

namespace {

using namespace ospchar;

void BM_SchurExpansion(benchmark::State& state) {
    const Partition lambda({4, 3, 2, 1});
    for (auto _ : state) {
        MonomialExpansion e = schur_expansion(lambda, 4);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_SchurExpansion);

void BM_SuperSchurExpansion(benchmark::State& state) {
    const Partition lambda({3, 2, 2, 1});
    for (auto _ : state) {
        MonomialExpansion e = super_schur_expansion(lambda, 2, 2);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_SuperSchurExpansion);

void BM_WeylCharacterD4(benchmark::State& state) {
    const HalfWeight hw({3, 3, 3, 1});
    for (auto _ : state) {
        ShiftedCharacter c = weyl_character(WeylKind::D, 4, hw);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_WeylCharacterD4);

void BM_StripClassEnumeration(benchmark::State& state) {
    const RectBound bound{4, 4};
    for (auto _ : state) {
        std::vector<Partition> classes = doubled_plus_strip_in_rect(bound, 2);
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK(BM_StripClassEnumeration);

void BM_SuperdimSeries(benchmark::State& state) {
    for (auto _ : state) {
        CharacterSum sum = osp_odd_character(3, 1, 3, 12);
        TruncatedSeries series = t_series(sum, SeriesMode::Sdim, 12);
        benchmark::DoNotOptimize(series);
    }
}
BENCHMARK(BM_SuperdimSeries);

} // namespace

BENCHMARK_MAIN();
