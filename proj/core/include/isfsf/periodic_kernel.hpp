#pragma once

#include <Eigen/Core>

#include "isfsf/coefficients.hpp"

namespace isfsf {

// Analytic periodic squared exponential kernel,
//   k(x, x') = prod_d exp((cos(omega0_d (x_d - x'_d)) - 1) / l_d^2),
// the stationary SE kernel evaluated on cos/sin-warped inputs. Unit value at
// zero lag; this is the ground truth every feature approximation is compared
// against.
double periodic_se_kernel(const Eigen::Ref<const Eigen::VectorXd>& x,
                          const Eigen::Ref<const Eigen::VectorXd>& y,
                          const PeriodicSeHyperparams& hyperparams);

// Symmetric unit-diagonal Gram matrix over the rows of `points`.
Eigen::MatrixXd periodic_se_gram(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                 const PeriodicSeHyperparams& hyperparams);

}  // namespace isfsf
