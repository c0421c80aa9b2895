#include <benchmark/benchmark.h>

#include "nsct/catalog.hpp"
#include "nsct/chartab.hpp"
#include "nsct/cyclotomic.hpp"
#include "nsct/finest.hpp"
#include "nsct/lattice.hpp"
#include "nsct/theory.hpp"

using namespace nsct;

namespace {

const std::vector<catalog::Entry>& groups() {
    static const std::vector<catalog::Entry> g = catalog::standard();
    return g;
}

const Group& ut4() {
    static const Group g = build_unitriangular(4, 2);
    return g;
}

}  // namespace

static void BM_Dixon(benchmark::State& state) {
    const auto& e = groups()[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) benchmark::DoNotOptimize(dixon_character_table(e.group));
    state.SetLabel(e.name);
}
BENCHMARK(BM_Dixon)->DenseRange(0, 13)->Unit(benchmark::kMillisecond);

static void BM_AllNormalSubgroups(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(all_normal_subgroups(ut4()));
}
BENCHMARK(BM_AllNormalSubgroups)->Unit(benchmark::kMillisecond);

static void BM_ClosureUT4(benchmark::State& state) {
    const auto normals = all_normal_subgroups(ut4());
    for (auto _ : state) benchmark::DoNotOptimize(closure(ut4(), normals));
}
BENCHMARK(BM_ClosureUT4)->Unit(benchmark::kMillisecond);

static void BM_FinestTheoryUT4(benchmark::State& state) {
    const CharacterTable t = dixon_character_table(ut4(), 64);
    for (auto _ : state) benchmark::DoNotOptimize(finest_theory(ut4(), &t));
}
BENCHMARK(BM_FinestTheoryUT4)->Unit(benchmark::kMillisecond);

static void BM_FinestTheoryNoCharacters(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(finest_theory(ut4()));
}
BENCHMARK(BM_FinestTheoryNoCharacters)->Unit(benchmark::kMillisecond);

static void BM_CycMultiply(benchmark::State& state) {
    const unsigned m = static_cast<unsigned>(state.range(0));
    const CycNum a = root_of_unity(m, 1) + CycNum(Rational(1, 3)), b = root_of_unity(m, 2) - CycNum(2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMultiply)->Arg(3)->Arg(12)->Arg(60);

static void BM_ParseCyc(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parse_cyc("1/2 - 3*E(12)^5 + E(12)^7 - 2/3*E(12)"));
}
BENCHMARK(BM_ParseCyc);
BENCHMARK_MAIN();
