#include <benchmark/benchmark.h>

#include "holevo/evolution.hpp"
#include "holevo/hermitian_eig.hpp"
#include "holevo/information.hpp"
#include "holevo/interactions.hpp"
#include "holevo/random_gen.hpp"

using namespace holevo;

namespace {

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < d; ++j) {
            m(i, j) = Complex{rng.normal(), rng.normal()};
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

void BM_TensorProduct(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const ComplexMatrix a = random_hermitian(d, rng);
    const ComplexMatrix b = random_hermitian(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor_product(a, b));
    }
}
BENCHMARK(BM_TensorProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_HermitianEig(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const ComplexMatrix m = random_hermitian(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigendecomposition(m, 1e-8));
    }
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_EvolveShift(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const ComplexMatrix basis = random_unitary(d, rng);
    const DensityMatrix apparatus = density_from_eigensystem(random_distribution(d, rng), basis, 1e-8);
    const PureState system =
        pure_state_from_probabilities(random_distribution(d, rng), std::vector<double>(d, 0.0));
    const InteractionUnitary gate = shift_gate(d, basis);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(system, apparatus, gate));
    }
}
BENCHMARK(BM_EvolveShift)->Arg(2)->Arg(4)->Arg(8);

void BM_HolevoChi(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(4);
    const Ensemble e = random_ensemble(d, d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(holevo_chi(e));
    }
}
BENCHMARK(BM_HolevoChi)->Arg(2)->Arg(4)->Arg(8);

void BM_MutualInformation(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    const Ensemble e = random_ensemble(d, d, rng);
    const POVM m = random_povm(d, d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mutual_information(e, m));
    }
}
BENCHMARK(BM_MutualInformation)->Arg(2)->Arg(4)->Arg(8);

void BM_AccessibleSearch(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(6);
    const Ensemble e = random_ensemble(d, 2, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(accessible_information_search(e, 2, 7));
    }
}
BENCHMARK(BM_AccessibleSearch)->Arg(2)->Arg(3);

void BM_ProjectionSearchFamily(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            random_von_neumann_family(d, seed++, FamilySearchMethod::kProjectionSearch));
    }
}
BENCHMARK(BM_ProjectionSearchFamily)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
