#include <benchmark/benchmark.h>

#include "ratrel/buchi.hpp"
#include "ratrel/decomposition.hpp"
#include "ratrel/lasso.hpp"
#include "ratrel/transducer.hpp"
#include "ratrel/tree.hpp"

using namespace ratrel;

namespace {

// Root 1 whose left subtree alternates 0/1 and whose right subtree is 0.
RegularTree sample_tree() {
    return RegularTree({{"r", '1', 1, 3}, {"a", '0', 2, 2}, {"b", '1', 1, 1}, {"z", '0', 3, 3}}, 0);
}

void BM_BuchiMember(benchmark::State& state) {
    const auto b = b_automaton();
    const Alphabet bits("01");
    const auto len = static_cast<std::size_t>(state.range(0));
    const Lasso w(std::string(len, '0'), std::string(len - 1, '0') + "1", bits);
    for (auto _ : state)
        benchmark::DoNotOptimize(buchi_member(b, w));
}
BENCHMARK(BM_BuchiMember)->RangeMultiplier(8)->Range(8, 4096);

void BM_RelPairMember(benchmark::State& state) {
    const auto t = paper_transducer();
    const Alphabet code("01A");
    const Lasso in("10A", "0010A", code), out("", "0010A", code);
    for (auto _ : state)
        benchmark::DoNotOptimize(rel_pair_member(t, in, out));
}
BENCHMARK(BM_RelPairMember);

void BM_Encode(benchmark::State& state) {
    const auto t = sample_tree();
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(encode(t, k));
    state.SetLabel("sigma1 " + std::to_string(sigma1_length(k)) + " letters");
}
BENCHMARK(BM_Encode)->DenseRange(3, 9, 2);

void BM_MaxAcceptingVisits(benchmark::State& state) {
    const auto t = paper_transducer();
    const auto code = encode(sample_tree(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_accepting_visits(t, code.sigma1, code.sigma2));
    state.SetLabel("sigma1 " + std::to_string(code.sigma1.size()) + " letters");
}
BENCHMARK(BM_MaxAcceptingVisits)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_RDecomposition(benchmark::State& state) {
    const auto code = encode(sample_tree(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(r_decomposition_max_ones(code.sigma1, code.sigma2));
    state.SetLabel("sigma1 " + std::to_string(code.sigma1.size()) + " letters");
}
BENCHMARK(BM_RDecomposition)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_PathCheck(benchmark::State& state) {
    const auto t = sample_tree();
    const auto b = b_automaton();
    for (auto _ : state)
        benchmark::DoNotOptimize(path_check(t, b));
}
BENCHMARK(BM_PathCheck);

} // namespace
BENCHMARK_MAIN();
