#include <benchmark/benchmark.h>

#include <random>

#include "isfsf/bessel.hpp"
#include "isfsf/feature_map.hpp"
#include "isfsf/fourier_features.hpp"
#include "isfsf/index_set.hpp"
#include "isfsf/normal.hpp"

namespace {

Eigen::MatrixXd sample_points(int n, int dimension) {
    std::mt19937_64 rng(1);
    Eigen::MatrixXd points(n, dimension);
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        for (int d = 0; d < dimension; ++d)
            points(i, d) = -2.0 + 4.0 * isfsf::uniform_unit(rng);
    return points;
}

void BM_index_set_generation(benchmark::State& state) {
    const auto refinement = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto set = isfsf::IndexSet::generate(isfsf::Family::Hyperbolic, 5, refinement);
        benchmark::DoNotOptimize(set.cardinality());
    }
}
BENCHMARK(BM_index_set_generation)->Arg(4)->Arg(10)->Arg(20);

void BM_scaled_bessel(benchmark::State& state) {
    const double x = 1.0 / (0.1 * 0.1);  // small lengthscale, deep recurrence
    for (auto _ : state) {
        auto values = isfsf::bessel_i_scaled_sequence(static_cast<int>(state.range(0)), x);
        benchmark::DoNotOptimize(values.back());
    }
}
BENCHMARK(BM_scaled_bessel)->Arg(8)->Arg(40);

void BM_sparse_expansion(benchmark::State& state) {
    const auto set = isfsf::IndexSet::generate(isfsf::Family::Hyperbolic, 5,
                                               static_cast<double>(state.range(0)));
    const auto hyper = isfsf::isotropic_hyperparams(5, 1.0, 1.0);
    std::vector<int> counts = set.bounding_box();
    for (int& c : counts) ++c;
    const auto coeffs = isfsf::CoefficientTable::periodic_se(hyper, counts);
    for (auto _ : state) {
        auto map = isfsf::expand_sparse(set, coeffs);
        benchmark::DoNotOptimize(map.term_count());
    }
}
BENCHMARK(BM_sparse_expansion)->Arg(6)->Arg(10);

void BM_feature_evaluation(benchmark::State& state) {
    const auto set = isfsf::IndexSet::generate(isfsf::Family::Hyperbolic, 3, 8.0);
    const auto hyper = isfsf::isotropic_hyperparams(3, 1.0, 1.0);
    std::vector<int> counts = set.bounding_box();
    for (int& c : counts) ++c;
    const auto map = isfsf::expand_sparse(set, isfsf::CoefficientTable::periodic_se(hyper, counts));
    const auto points = sample_points(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        auto features = map.evaluate(points);
        benchmark::DoNotOptimize(features.sum());
    }
    state.SetItemsProcessed(state.iterations() * points.rows() *
                            static_cast<std::int64_t>(map.term_count()));
}
BENCHMARK(BM_feature_evaluation)->Arg(128)->Arg(512);

void BM_rff_features(benchmark::State& state) {
    const auto hyper = isfsf::isotropic_hyperparams(3, 1.0, 1.0);
    const auto points = sample_points(256, 3);
    for (auto _ : state) {
        auto features = isfsf::rff_features(points, static_cast<int>(state.range(0)), hyper, 1);
        benchmark::DoNotOptimize(features.sum());
    }
}
BENCHMARK(BM_rff_features)->Arg(128)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
