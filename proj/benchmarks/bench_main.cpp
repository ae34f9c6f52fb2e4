#include <benchmark/benchmark.h>

#include <random>

#include "histoq/classify.hpp"
#include "histoq/complex_erf.hpp"
#include "histoq/quadrature.hpp"
#include "histoq/spin.hpp"

namespace {

void SpinClosedFormGrid(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        double accum = 0.0;
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                const auto p = histoq::spin_candidate_probabilities(
                    {M_PI * i / (n - 1.0), M_PI * (j + 1.0) / (n + 1.0)}, {M_PI / 2.0});
                accum += p[0];
            }
        }
        benchmark::DoNotOptimize(accum);
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(SpinClosedFormGrid)->Arg(50)->Arg(200);

void SpinMatrixGrid(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        double accum = 0.0;
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                const auto p = histoq::spin_candidate_probabilities_matrix(
                    {M_PI * i / (n - 1.0), M_PI * (j + 1.0) / (n + 1.0)}, {M_PI / 2.0});
                accum += p[0];
            }
        }
        benchmark::DoNotOptimize(accum);
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(SpinMatrixGrid)->Arg(50);

void ClassifyChainSet(benchmark::State& state) {
    const Eigen::Index dim = state.range(0);
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    histoq::CMatrix h_m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) h_m(i, j) = histoq::cdouble(gauss(rng), gauss(rng));
    const histoq::Hamiltonian h(histoq::CMatrix(0.5 * (h_m + h_m.adjoint().eval())));
    Eigen::HouseholderQR<histoq::CMatrix> qr(h_m);
    const histoq::CMatrix q = qr.householderQ();
    const auto dec = histoq::ProjectiveDecomposition::from_orthonormal_basis(q);
    histoq::CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = histoq::cdouble(gauss(rng), gauss(rng));
    const histoq::StateVector psi = histoq::StateVector::normalized(v);
    const auto set = histoq::full_chain_set({{&dec, 1.0}, {&dec, 2.0}}, h);
    for (auto _ : state) {
        const auto c = histoq::classify_set(psi, set);
        benchmark::DoNotOptimize(c.md_residual);
    }
}
BENCHMARK(ClassifyChainSet)->Arg(4)->Arg(8);

void ComplexErfThroughput(benchmark::State& state) {
    for (auto _ : state) {
        histoq::cdouble accum = 0.0;
        for (int i = 1; i <= 1000; ++i)
            accum += histoq::complex_erf(std::sqrt(M_PI) * histoq::cdouble(1.0, -1.0) * (i * 0.02));
        benchmark::DoNotOptimize(accum);
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(ComplexErfThroughput);

void OscillatoryQuadrature(benchmark::State& state) {
    for (auto _ : state) {
        const auto edges = histoq::equal_phase_breakpoints(0.0, 5.0, 0.0, 80.0);
        const auto r = histoq::integrate([](double x) { return std::cos(80.0 * x * x); }, 0.0, 5.0,
                                         {}, edges);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(OscillatoryQuadrature);

}  // namespace

BENCHMARK_MAIN();
