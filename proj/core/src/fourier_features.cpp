#include "isfsf/fourier_features.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "isfsf/halton.hpp"
#include "isfsf/normal.hpp"

namespace isfsf {

namespace {

// Inverse lengthscale per warped coordinate; dimension d covers columns
// 2d (cos) and 2d+1 (sin).
Eigen::VectorXd warped_inverse_lengthscales(const PeriodicSeHyperparams& hyperparams) {
    const int D = hyperparams.dimension();
    Eigen::VectorXd inv(2 * D);
    for (int d = 0; d < D; ++d) {
        const double l = hyperparams.lengthscales()[static_cast<std::size_t>(d)];
        inv[2 * d] = 1.0 / l;
        inv[2 * d + 1] = 1.0 / l;
    }
    return inv;
}

Eigen::MatrixXd assemble_features(const Eigen::MatrixXd& phases) {
    const Eigen::Index n = phases.rows();
    const Eigen::Index c = phases.cols();
    const double scale = 1.0 / std::sqrt(static_cast<double>(c));
    Eigen::MatrixXd features(n, 2 * c);
    for (Eigen::Index j = 0; j < c; ++j) {
        features.col(2 * j) = phases.col(j).array().cos() * scale;
        features.col(2 * j + 1) = phases.col(j).array().sin() * scale;
    }
    return features;
}

}  // namespace

Eigen::MatrixXd warp(const Eigen::Ref<const Eigen::MatrixXd>& points,
                     const PeriodicSeHyperparams& hyperparams) {
    if (points.cols() != hyperparams.dimension())
        throw std::invalid_argument("warp: dimension mismatch");
    const std::vector<double> w0 = hyperparams.fundamental_frequencies();
    Eigen::MatrixXd warped(points.rows(), 2 * points.cols());
    for (int d = 0; d < hyperparams.dimension(); ++d) {
        const auto scaled = points.col(d).array() * w0[static_cast<std::size_t>(d)];
        warped.col(2 * d) = scaled.cos();
        warped.col(2 * d + 1) = scaled.sin();
    }
    return warped;
}

Eigen::VectorXd warp_point(const Eigen::Ref<const Eigen::VectorXd>& x,
                           const PeriodicSeHyperparams& hyperparams) {
    return warp(x.transpose(), hyperparams).row(0).transpose();
}

double warped_squared_distance(const Eigen::Ref<const Eigen::VectorXd>& x,
                               const Eigen::Ref<const Eigen::VectorXd>& y,
                               const PeriodicSeHyperparams& hyperparams) {
    return (warp_point(x, hyperparams) - warp_point(y, hyperparams)).squaredNorm();
}

Eigen::MatrixXd rff_features(const Eigen::Ref<const Eigen::MatrixXd>& points, int count,
                             const PeriodicSeHyperparams& hyperparams, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("rff_features: count must be >= 1");
    const Eigen::MatrixXd warped = warp(points, hyperparams);
    const Eigen::VectorXd inv_l = warped_inverse_lengthscales(hyperparams);

    // draw order: sample-major, coordinate-minor
    std::mt19937_64 engine(seed);
    Eigen::MatrixXd spectral(inv_l.size(), count);
    for (int c = 0; c < count; ++c)
        for (Eigen::Index i = 0; i < inv_l.size(); ++i)
            spectral(i, c) = standard_normal(engine) * inv_l[i];

    return assemble_features(warped * spectral);
}

Eigen::MatrixXd qmc_features(const Eigen::Ref<const Eigen::MatrixXd>& points, int count,
                             const PeriodicSeHyperparams& hyperparams, bool generalized,
                             std::uint64_t seed, int burn_in) {
    if (count < 1) throw std::invalid_argument("qmc_features: count must be >= 1");
    const Eigen::MatrixXd warped = warp(points, hyperparams);
    const Eigen::VectorXd inv_l = warped_inverse_lengthscales(hyperparams);

    const Eigen::MatrixXd unit = halton_sequence(count, static_cast<int>(inv_l.size()),
                                                 generalized, seed, burn_in);
    Eigen::MatrixXd spectral(inv_l.size(), count);
    for (int c = 0; c < count; ++c)
        for (Eigen::Index i = 0; i < inv_l.size(); ++i)
            spectral(i, c) = inverse_normal_cdf(unit(c, i)) * inv_l[i];

    return assemble_features(warped * spectral);
}

}  // namespace isfsf
