#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bench/budget.hpp"
#include "bench/config.hpp"
#include "bench/metrics.hpp"
#include "bench/report.hpp"
#include "bench/runners.hpp"
#include "bench/surface.hpp"
#include "isfsf/coefficients.hpp"
#include "isfsf/feature_map.hpp"
#include "isfsf/normal.hpp"
#include "isfsf/periodic_kernel.hpp"

using namespace isfsf::bench;

TEST_SUITE_BEGIN("bench");

TEST_CASE("config parses keys, comments and lists") {
    const auto cfg = Config::from_string(
        "# comment\n"
        "dimension = 3\n"
        "lengthscale = 0.5,1.0 # trailing comment\n"
        "methods = enhc, rff\n"
        "\n");
    CHECK(cfg.get_int("dimension") == 3);
    CHECK(cfg.get_double_list("lengthscale") == std::vector<double>{0.5, 1.0});
    CHECK(cfg.get_string_list("methods") == std::vector<std::string>{"enhc", "rff"});
    CHECK(cfg.get_int("missing", 7) == 7);
    CHECK_THROWS_AS(cfg.get_string("missing"), std::runtime_error);
    CHECK_THROWS_AS(Config::from_string("no equals sign"), std::runtime_error);
}

TEST_CASE("report emits the fixed header and blank optionals") {
    BenchmarkReport report;
    ReportRow row;
    row.benchmark = "gram";
    row.method = "rff";
    row.dimension = 2;
    row.c_requested = 100;
    row.metric = "frobenius";
    row.value = 0.125;
    report.add(row);
    std::ostringstream out;
    report.write_csv(out);
    CHECK(out.str() ==
          "benchmark,method,family,D,R,gamma,zeta,C_requested,C_realized,"
          "lengthscale,period,seed,metric,value,wall_ms\n"
          "gram,rff,,2,,,,100,,,,,frobenius,0.125,0\n");
}

TEST_CASE("frobenius error definitions") {
    Eigen::MatrixXd truth(2, 2);
    truth << 1.0, 0.5, 0.5, 1.0;
    CHECK(frobenius_error(truth, truth) == 0.0);
    CHECK(frobenius_error(2.0 * truth, truth) == doctest::Approx(1.0).epsilon(1e-14));
    Eigen::MatrixXd perturbed = truth;
    perturbed(0, 1) += 0.01;
    CHECK(frobenius_error(perturbed, truth) == doctest::Approx(0.01 / truth.norm()).epsilon(1e-12));
    CHECK_THROWS_AS(frobenius_error(truth, Eigen::MatrixXd::Zero(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_error(truth, Eigen::MatrixXd::Ones(3, 3)), std::invalid_argument);
}

TEST_CASE("budget match maximizes within slack and reports realized counts") {
    const auto match = match_feature_budget(isfsf::Family::Hyperbolic, 2, 49, 8, {1.0, 1.0}, 0.0);
    REQUIRE(match.has_value());
    CHECK(match->realized <= 57);
    CHECK(match->realized > 1);
    CHECK(static_cast<long long>(isfsf::sparse_term_count(match->set)) == match->realized);
    // growing the budget never shrinks the realized count
    const auto larger = match_feature_budget(isfsf::Family::Hyperbolic, 2, 201, 8, {1.0, 1.0}, 0.0);
    REQUIRE(larger.has_value());
    CHECK(larger->realized >= match->realized);
}

TEST_CASE("tensor family at D=9 is infeasible for small budgets") {
    const auto match =
        match_feature_budget(isfsf::Family::Tensor, 9, 100, 8, std::vector<double>(9, 1.0), 0.0);
    CHECK_FALSE(match.has_value());
}

TEST_CASE("surface is deterministic with an exact mask geometry") {
    SurfaceSpec spec;
    spec.grid = 65;
    spec.modes = {{1.0, 0.5, 0.5, 0.0, 0.0}};
    spec.noise_std = 0.05;
    spec.mask_fraction = 0.25;
    const auto a = generate_surface_grid(spec, 9);
    const auto b = generate_surface_grid(spec, 9);
    CHECK(a.mask_count() == 1024);  // floor(65 sqrt(0.25)) = 32 per side
    CHECK((a.targets.array() == b.targets.array()).all());

    const auto data = generate_synthetic_surface(spec, 9);
    CHECK(data.test_points.rows() == 1024);
    CHECK(data.train_points.rows() == 65 * 65 - 1024);
}

TEST_CASE("noiseless single-mode surface is the exact sine product") {
    SurfaceSpec spec;
    spec.grid = 9;
    spec.modes = {{2.0, 0.5, 0.25, 0.3, 0.7}};
    spec.noise_std = 0.0;
    spec.mask_fraction = 0.0;
    const auto grid = generate_surface_grid(spec, 1);
    CHECK(grid.mask_count() == 0);
    for (Eigen::Index r = 0; r < grid.points.rows(); ++r) {
        const double expected = 2.0 *
                                std::sin(2.0 * std::numbers::pi * grid.points(r, 0) / 0.5 + 0.3) *
                                std::sin(2.0 * std::numbers::pi * grid.points(r, 1) / 0.25 + 0.7);
        CHECK(grid.targets[r] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("truncation runner reproduces the epsilon structure") {
    const auto cfg = Config::from_string(
        "dimensions = 2,12\n"
        "refinement_min = 1\n"
        "refinement_max = 10\n"
        "lengthscales = 0.3,1.0\n");
    const auto report = run_truncation_curve(cfg);
    // epsilon is non-increasing in R for every (D, l) cell, larger for
    // smaller l, and larger for bigger D
    double eps_d2_l1_r5 = -1, eps_d12_l1_r5 = -1, eps_d2_l03_r5 = -1;
    double previous = 2.0;
    for (const auto& row : report.rows()) {
        if (row.method != "isfsf") continue;
        const double r = *row.refinement;
        const int dim = *row.dimension;
        if (dim == 2 && row.lengthscale == "0.3") {
            CHECK(row.value <= previous + 1e-15);
            previous = row.value;
        }
        if (r == 5 && dim == 2 && row.lengthscale == "1") eps_d2_l1_r5 = row.value;
        if (r == 5 && dim == 12 && row.lengthscale == "1") eps_d12_l1_r5 = row.value;
        if (r == 5 && dim == 2 && row.lengthscale == "0.3") eps_d2_l03_r5 = row.value;
    }
    CHECK(eps_d2_l1_r5 > 0.0);
    CHECK(eps_d12_l1_r5 > eps_d2_l1_r5);
    CHECK(eps_d2_l03_r5 > eps_d2_l1_r5);
}

TEST_CASE("gram runner records realized counts satisfying the sparse formula") {
    const auto cfg = Config::from_string(
        "dimension = 2\n"
        "samples = 60\n"
        "lengthscale = 1.0\n"
        "period = 1.0\n"
        "domain = -2,2\n"
        "methods = enhc,rff,hal,ghal\n"
        "budgets = 50\n"
        "rff_seeds = 2\n"
        "seed = 3\n");
    const auto report = run_gram_benchmark(cfg);
    int isfsf_rows = 0, rff_rows = 0, aggregate_rows = 0;
    for (const auto& row : report.rows()) {
        if (row.method == "isfsf") {
            ++isfsf_rows;
            CHECK(*row.c_realized <= 58);
            CHECK(row.value > 0.0);
        }
        if (row.method == "rff" && row.metric == "frobenius") ++rff_rows;
        if (row.metric == "frobenius_mean" || row.metric == "frobenius_std") ++aggregate_rows;
    }
    CHECK(isfsf_rows == 1);
    CHECK(rff_rows == 2);
    CHECK(aggregate_rows == 2);
}

TEST_CASE("tight 1-D tensor refinement drives the gram error below 1e-4") {
    const auto hyper = isfsf::isotropic_hyperparams(1, 1.0, 1.0);
    const int refinement = 16;
    REQUIRE(isfsf::truncation_error(refinement, hyper) < 1e-8);
    const auto set = isfsf::IndexSet::generate(isfsf::Family::Tensor, 1, refinement);
    const auto map =
        isfsf::expand_sparse(set, isfsf::CoefficientTable::periodic_se(hyper, refinement));
    std::mt19937_64 rng(19);
    Eigen::MatrixXd points(200, 1);
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        points(i, 0) = -2.0 + 4.0 * isfsf::uniform_unit(rng);
    const Eigen::MatrixXd z = map.evaluate(points);
    CHECK(frobenius_error(z * z.transpose(), isfsf::periodic_se_gram(points, hyper)) < 1e-4);
}

TEST_CASE("noiseless representable surface is interpolated to machine precision") {
    const auto cfg = Config::from_string(
        "grid = 33\n"
        "domain = 0,1\n"
        "period = 0.25\n"
        "lengthscale = 0.5\n"
        "modes = 1.0:0.25:0.25:0.3:1.1; 0.5:0.125:0.125:2.0:0.4\n"
        "noise_std = 0\n"
        "mask_fraction = 0.25\n"
        "methods = enhc\n"
        "budgets = 49\n"
        "noise_variance = 1e-10\n"
        "prior_variance = 1.0\n"
        "repetitions = 1\n"
        "seed = 2\n");
    const auto report = run_regression_benchmark(cfg);
    bool seen = false;
    for (const auto& row : report.rows())
        if (row.metric == "rmse") {
            seen = true;
            CHECK(row.value < 1e-6);
        }
    CHECK(seen);
}

TEST_CASE("gram runner rejects an infeasible tensor request") {
    const auto cfg = Config::from_string(
        "dimension = 9\n"
        "samples = 10\n"
        "lengthscale = 1.0\n"
        "period = 1.0\n"
        "domain = -2,2\n"
        "methods = tensor\n"
        "budgets = 100\n"
        "seed = 3\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(run_gram_benchmark(cfg)),
                         doctest::Contains("infeasible feature budget"), std::runtime_error);
}

TEST_CASE("regression runner emits rmse and mnll per cell") {
    const auto cfg = Config::from_string(
        "grid = 17\n"
        "domain = 0,1\n"
        "period = 0.25\n"
        "lengthscale = 0.5\n"
        "modes = 1.0:0.25:0.25:0.3:1.1\n"
        "noise_std = 0.05\n"
        "mask_fraction = 0.25\n"
        "methods = enhc,rff\n"
        "budgets = 29\n"
        "noise_variance = 0.0025\n"
        "prior_variance = 1.0\n"
        "repetitions = 2\n"
        "seed = 5\n");
    const auto report = run_regression_benchmark(cfg);
    int rmse_rows = 0, mnll_rows = 0;
    for (const auto& row : report.rows()) {
        if (row.metric == "rmse") ++rmse_rows;
        if (row.metric == "mnll") ++mnll_rows;
        if (row.metric == "rmse" || row.metric == "mnll") {
            REQUIRE(row.seed.has_value());
            CHECK(row.value == row.value);  // never NaN
        }
    }
    CHECK(rmse_rows == 4);  // 2 methods x 1 budget x 2 repetitions
    CHECK(mnll_rows == 4);
}

TEST_SUITE_END();
