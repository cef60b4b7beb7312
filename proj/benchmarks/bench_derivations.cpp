#include <benchmark/benchmark.h>

#include "mocklie/derivations.hpp"

using namespace mocklie;

namespace {

void BM_DerivationBasis(benchmark::State& state)
{
    const Algebra& a = catalog()[static_cast<std::size_t>(state.range(0))];
    std::size_t dim = 0;
    for (auto _ : state) {
        dim = derivation_basis(a).dim();
        benchmark::DoNotOptimize(dim);
    }
    state.SetLabel(a.name + " der dim " + std::to_string(dim));
}
BENCHMARK(BM_DerivationBasis)->DenseRange(0, 11);

void BM_DerStructureConstants(benchmark::State& state)
{
    const Algebra& a = catalog_entry("A_{0,1}^4");
    for (auto _ : state) benchmark::DoNotOptimize(der_structure_constants(a));
}
BENCHMARK(BM_DerStructureConstants)->Unit(benchmark::kMillisecond);

// Brute-force count of derivations of A_{1,2} over GF(5).
void BM_ExhaustiveGF5(benchmark::State& state)
{
    const Field f = Field::prime(5);
    const Algebra a{"A_{1,2}", catalog_entry("A_{1,2}").tensor.to_field(f)};
    for (auto _ : state) {
        std::size_t matches = 0;
        Matrix d(f, 2, 2);
        for (int code = 0; code < 625; ++code) {
            int rest = code;
            for (std::size_t c = 0; c < 4; ++c, rest /= 5) d(c / 2, c % 2) = Scalar::from_int(f, rest % 5);
            matches += is_derivation(a, d);
        }
        benchmark::DoNotOptimize(matches);
    }
}
BENCHMARK(BM_ExhaustiveGF5)->Unit(benchmark::kMicrosecond);

void BM_VerifyCatalog(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(verify_catalog());
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

void BM_VerifyCatalogGFp(benchmark::State& state)
{
    const Field f = Field::prime(1000003);
    for (auto _ : state) benchmark::DoNotOptimize(verify_catalog(f));
}
BENCHMARK(BM_VerifyCatalogGFp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
