#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "isfsf/fourier_features.hpp"
#include "isfsf/halton.hpp"
#include "isfsf/normal.hpp"
#include "isfsf/periodic_kernel.hpp"

TEST_SUITE_BEGIN("baselines");

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

Eigen::MatrixXd random_points(std::mt19937_64& rng, int n, int dimension) {
    Eigen::MatrixXd points(n, dimension);
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        for (int d = 0; d < dimension; ++d)
            points(i, d) = -2.0 + 4.0 * isfsf::uniform_unit(rng);
    return points;
}

}  // namespace

TEST_CASE("inverse normal cdf hits the median and round-trips the cdf") {
    CHECK(isfsf::inverse_normal_cdf(0.5) == 0.0);
    for (double p : {1e-6, 1e-3, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0 - 1e-3, 1.0 - 1e-6}) {
        const double x = isfsf::inverse_normal_cdf(p);
        // Newton refinement from the implementation's own value stands in for
        // an exact inverse; one step moves less than 1e-9 if we are converged.
        const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
        const double refined = x - (normal_cdf(x) - p) / pdf;
        CHECK(std::abs(refined - x) < 1e-9);
    }
    CHECK(isfsf::inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    CHECK_THROWS_AS(isfsf::inverse_normal_cdf(0.0), std::invalid_argument);
    CHECK_THROWS_AS(isfsf::inverse_normal_cdf(1.0), std::invalid_argument);
}

TEST_CASE("halton radical inverse hand values") {
    const Eigen::MatrixXd points = isfsf::halton_sequence(3, 2, false, 0);
    // base 2: 1/2, 1/4, 3/4 ; base 3: 1/3, 2/3, 1/9
    CHECK(points(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(points(1, 0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(points(2, 0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(points(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(points(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("generalized halton with identity permutations is the standard sequence") {
    const auto identity = isfsf::identity_permutations(5);
    const Eigen::MatrixXd a = isfsf::halton_sequence(64, 5, identity, 0);
    const Eigen::MatrixXd b = isfsf::halton_sequence(64, 5, false, 0);
    CHECK((a.array() == b.array()).all());
}

TEST_CASE("scrambled permutations fix zero and stay in (0,1)") {
    const auto perms = isfsf::scrambled_permutations(10, 42);
    for (const auto& p : perms) {
        CHECK(p[0] == 0);
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == static_cast<int>(i));
    }
    const Eigen::MatrixXd points = isfsf::halton_sequence(512, 10, true, 42, 20);
    CHECK((points.array() > 0.0).all());
    CHECK((points.array() < 1.0).all());
}

TEST_CASE("halton rejects an oversized dimension and bad burn-in") {
    CHECK_THROWS_AS(isfsf::halton_sequence(4, 51, false, 0), std::invalid_argument);
    CHECK_THROWS_AS(isfsf::halton_sequence(4, 2, false, 0, -1), std::invalid_argument);
}

TEST_CASE("warp places coordinates on the unit circle and reproduces the distance identity") {
    std::mt19937_64 rng(2);
    const isfsf::PeriodicSeHyperparams hyper({0.8, 1.2}, {1.0, 0.5});
    const Eigen::MatrixXd points = random_points(rng, 20, 2);
    const Eigen::MatrixXd warped = isfsf::warp(points, hyper);
    REQUIRE(warped.cols() == 4);
    for (Eigen::Index i = 0; i < warped.rows(); ++i)
        for (int d = 0; d < 2; ++d)
            CHECK(warped(i, 2 * d) * warped(i, 2 * d) + warped(i, 2 * d + 1) * warped(i, 2 * d + 1) ==
                  doctest::Approx(1.0).epsilon(1e-12));

    const std::vector<double> w0 = hyper.fundamental_frequencies();
    for (Eigen::Index i = 0; i + 1 < points.rows(); ++i) {
        const Eigen::VectorXd x = points.row(i).transpose();
        const Eigen::VectorXd y = points.row(i + 1).transpose();
        double expected = 0.0;
        for (int d = 0; d < 2; ++d)
            expected += 2.0 * (1.0 - std::cos(w0[static_cast<std::size_t>(d)] * (x[d] - y[d])));
        CHECK(isfsf::warped_squared_distance(x, y, hyper) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("warped distance hand values") {
    const auto hyper1 = isfsf::isotropic_hyperparams(1, 1.0, 2.0 * std::numbers::pi);  // w0 = 1
    Eigen::VectorXd x(1), y(1);
    x << std::numbers::pi;
    y << 0.0;
    CHECK(isfsf::warped_squared_distance(x, y, hyper1) == doctest::Approx(4.0).epsilon(1e-12));

    const auto hyper2 = isfsf::isotropic_hyperparams(2, 1.0, 1.0);  // w0 = 2 pi
    Eigen::VectorXd a(2), b(2);
    a << 0.25, 0.0;
    b << 0.0, 0.0;
    CHECK(isfsf::warped_squared_distance(a, b, hyper2) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("SE kernel on warped inputs equals the analytic periodic SE kernel") {
    std::mt19937_64 rng(5);
    for (int dimension : {1, 2, 5}) {
        const auto hyper = isfsf::isotropic_hyperparams(dimension, 0.9, 0.8);
        const Eigen::MatrixXd points = random_points(rng, 40, dimension);
        for (Eigen::Index i = 0; i + 1 < points.rows(); i += 2) {
            const Eigen::VectorXd x = points.row(i).transpose();
            const Eigen::VectorXd y = points.row(i + 1).transpose();
            double dist_sq = 0.0;
            const Eigen::VectorXd u = isfsf::warp_point(x, hyper);
            const Eigen::VectorXd v = isfsf::warp_point(y, hyper);
            for (int d = 0; d < dimension; ++d) {
                const double l = hyper.lengthscales()[static_cast<std::size_t>(d)];
                const double du_cos = u[2 * d] - v[2 * d];
                const double du_sin = u[2 * d + 1] - v[2 * d + 1];
                dist_sq += (du_cos * du_cos + du_sin * du_sin) / (l * l);
            }
            CHECK(std::exp(-0.5 * dist_sq) ==
                  doctest::Approx(isfsf::periodic_se_kernel(x, y, hyper)).epsilon(1e-12));
        }
    }
}

TEST_CASE("rff feature rows have unit norm and a unit diagonal") {
    std::mt19937_64 rng(9);
    const auto hyper = isfsf::isotropic_hyperparams(3, 1.0, 1.0);
    const Eigen::MatrixXd points = random_points(rng, 15, 3);
    const Eigen::MatrixXd z = isfsf::rff_features(points, 32, hyper, 4);
    REQUIRE(z.cols() == 64);
    for (Eigen::Index i = 0; i < z.rows(); ++i)
        CHECK(z.row(i).squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rff mean gram entry converges to the kernel value") {
    const auto hyper = isfsf::isotropic_hyperparams(1, 1.0, 1.0);
    Eigen::MatrixXd pair(2, 1);
    pair << 0.0, 0.1;
    const double truth = isfsf::periodic_se_kernel(pair.row(0).transpose(),
                                                   pair.row(1).transpose(), hyper);
    double mean = 0.0;
    const int seeds = 50;
    for (int s = 0; s < seeds; ++s) {
        const Eigen::MatrixXd z = isfsf::rff_features(pair, 2000, hyper, static_cast<std::uint64_t>(s));
        mean += z.row(0).dot(z.row(1));
    }
    mean /= seeds;
    CHECK(std::abs(mean - truth) < 0.02);
}

TEST_CASE("rff features are deterministic per seed and differ across seeds") {
    std::mt19937_64 rng(13);
    const auto hyper = isfsf::isotropic_hyperparams(2, 1.0, 1.0);
    const Eigen::MatrixXd points = random_points(rng, 8, 2);
    const Eigen::MatrixXd a = isfsf::rff_features(points, 16, hyper, 7);
    const Eigen::MatrixXd b = isfsf::rff_features(points, 16, hyper, 7);
    const Eigen::MatrixXd c = isfsf::rff_features(points, 16, hyper, 8);
    CHECK((a.array() == b.array()).all());
    CHECK_FALSE((a.array() == c.array()).all());
}

TEST_CASE("qmc features are bit-deterministic and unit-diagonal") {
    std::mt19937_64 rng(21);
    const auto hyper = isfsf::isotropic_hyperparams(2, 1.0, 1.0);
    const Eigen::MatrixXd points = random_points(rng, 10, 2);
    const Eigen::MatrixXd a = isfsf::qmc_features(points, 64, hyper, true, 3, 20);
    const Eigen::MatrixXd b = isfsf::qmc_features(points, 64, hyper, true, 3, 20);
    CHECK((a.array() == b.array()).all());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        CHECK(a.row(i).squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("qmc gram beats rff on average at matched counts") {
    std::mt19937_64 rng(31);
    const auto hyper = isfsf::isotropic_hyperparams(3, 1.0, 1.0);
    const Eigen::MatrixXd points = random_points(rng, 80, 3);
    const Eigen::MatrixXd truth = isfsf::periodic_se_gram(points, hyper);
    const auto error = [&](const Eigen::MatrixXd& z) {
        return (z * z.transpose() - truth).norm() / truth.norm();
    };
    const double qmc = error(isfsf::qmc_features(points, 256, hyper, true, 1, 20));
    double rff_mean = 0.0;
    const int seeds = 12;
    for (int s = 0; s < seeds; ++s)
        rff_mean += error(isfsf::rff_features(points, 256, hyper, static_cast<std::uint64_t>(s)));
    rff_mean /= seeds;
    CHECK(qmc < rff_mean);
}

TEST_SUITE_END();
