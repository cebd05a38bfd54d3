#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "isfsf/coefficients.hpp"

namespace isfsf {

// Embeds each coordinate on the unit circle:
//   u(x) = [cos(omega0_1 x_1), sin(omega0_1 x_1), ..., cos(omega0_D x_D), sin(omega0_D x_D)].
// Squared distances in warped space satisfy
//   ||u(x)-u(x')||^2 = sum_d 2 (1 - cos(omega0_d (x_d - x'_d))),
// so a stationary SE kernel on warped inputs is exactly the periodic SE kernel.
Eigen::MatrixXd warp(const Eigen::Ref<const Eigen::MatrixXd>& points,
                     const PeriodicSeHyperparams& hyperparams);
Eigen::VectorXd warp_point(const Eigen::Ref<const Eigen::VectorXd>& x,
                           const PeriodicSeHyperparams& hyperparams);

// Squared Euclidean distance between the warped images of x and x'.
double warped_squared_distance(const Eigen::Ref<const Eigen::VectorXd>& x,
                               const Eigen::Ref<const Eigen::VectorXd>& y,
                               const PeriodicSeHyperparams& hyperparams);

// Random Fourier features of the periodic SE kernel: C spectral vectors drawn
// from the Gaussian spectral density over warped space (lengthscale l_d applied
// to both warped coordinates of dimension d), then
//   (1/sqrt(C)) [cos(u . w_c), sin(u . w_c)]  per sample.
// Columns 2c, 2c+1 hold the cos/sin pair of sample c. Every feature row has
// unit norm by construction. Deterministic given the seed.
Eigen::MatrixXd rff_features(const Eigen::Ref<const Eigen::MatrixXd>& points, int count,
                             const PeriodicSeHyperparams& hyperparams, std::uint64_t seed);

// Same construction with spectral vectors from a (generalized) Halton sequence
// mapped through the inverse normal CDF. Fully deterministic given
// (count, generalized, seed, burn_in).
Eigen::MatrixXd qmc_features(const Eigen::Ref<const Eigen::MatrixXd>& points, int count,
                             const PeriodicSeHyperparams& hyperparams, bool generalized,
                             std::uint64_t seed, int burn_in = 0);

}  // namespace isfsf
