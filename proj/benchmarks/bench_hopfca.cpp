#include <benchmark/benchmark.h>

#include "hopfca/homology.hpp"

using namespace hopfca;

static void BM_VerifyD1(benchmark::State& state) {
    HopfPtr d1 = appendix_d1();
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(*d1));
}
BENCHMARK(BM_VerifyD1);

static void BM_VerifyDPair25(benchmark::State& state) {
    HopfPtr d = d_pair(group_hopf(FieldSpec::prime(3), FiniteAbelianGroup({5})));
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(*d));
}
BENCHMARK(BM_VerifyDPair25);

static void BM_EndRingD1(benchmark::State& state) {
    HopfPtr d1 = appendix_d1();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_end_ring(d1));
}
BENCHMARK(BM_EndRingD1);

static void BM_GroupLikesD1(benchmark::State& state) {
    // enumerate without the metadata shortcut
    HopfPresentation stripped = *appendix_d1();
    stripped.metadata().known_group_likes.reset();
    HopfPtr h = std::make_shared<const HopfPresentation>(std::move(stripped));
    for (auto _ : state) benchmark::DoNotOptimize(group_likes(h));
}
BENCHMARK(BM_GroupLikesD1);

static void BM_HomologyRP2D1(benchmark::State& state) {
    HopfPtr d1 = appendix_d1();
    CWComplexData rp2 = builtin_space("RP2");
    for (auto _ : state) benchmark::DoNotOptimize(homology_all(rp2, d1));
}
BENCHMARK(BM_HomologyRP2D1);

static void BM_LesD2S1D1(benchmark::State& state) {
    HopfPtr d1 = appendix_d1();
    CWComplexData d2 = builtin_space("D2");
    for (auto _ : state) benchmark::DoNotOptimize(verify_les(d2, {{0}, {0}}, d1));
}
BENCHMARK(BM_LesD2S1D1);

static void BM_ExpCompareS1(benchmark::State& state) {
    ActionSpec spec = canonical_action(appendix_d1(), 5);
    FpChainComplex c = cw_to_fp_chain(builtin_space("S1"), 5);
    for (auto _ : state) benchmark::DoNotOptimize(exp_compare_at(spec, c, 1));
}
BENCHMARK(BM_ExpCompareS1);

BENCHMARK_MAIN();
