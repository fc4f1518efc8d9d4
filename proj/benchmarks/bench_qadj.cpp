#include <benchmark/benchmark.h>

#include "qadj/chevalley.hpp"
#include "qadj/verify.hpp"

using namespace qadj;

namespace {

void BM_root_closure(benchmark::State& state, const char* name) {
    CartanDatum d = CartanDatum::preset(name);
    for (auto _ : state) benchmark::DoNotOptimize(RootSystem::generate(d));
}
BENCHMARK_CAPTURE(BM_root_closure, G2, "G2");
BENCHMARK_CAPTURE(BM_root_closure, F4, "F4");
BENCHMARK_CAPTURE(BM_root_closure, E8, "E8");

void BM_relation_suite(benchmark::State& state, const char* name) {
    AdjointModule m(RootSystem::generate(CartanDatum::preset(name)));
    for (auto _ : state) benchmark::DoNotOptimize(check_relations(m));
}
BENCHMARK_CAPTURE(BM_relation_suite, A2, "A2");
BENCHMARK_CAPTURE(BM_relation_suite, F4, "F4");

void BM_gram_contract(benchmark::State& state, const char* name) {
    AdjointModule m(RootSystem::generate(CartanDatum::preset(name)));
    for (auto _ : state) benchmark::DoNotOptimize(gram_from_contract(m));
}
BENCHMARK_CAPTURE(BM_gram_contract, B2, "B2");
BENCHMARK_CAPTURE(BM_gram_contract, G2, "G2");

void BM_group_closure(benchmark::State& state, const char* name, std::uint32_t p) {
    AdjointModule m(RootSystem::generate(CartanDatum::preset(name)));
    auto gens = chevalley_generators(m, PrimeField(p));
    for (auto _ : state) benchmark::DoNotOptimize(group_closure(gens));
}
BENCHMARK_CAPTURE(BM_group_closure, A1_F3, "A1", 3);
BENCHMARK_CAPTURE(BM_group_closure, A2_F2, "A2", 2);

} // namespace

BENCHMARK_MAIN();
