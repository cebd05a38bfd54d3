#pragma once

#include <Eigen/Core>

namespace isfsf::bench {

// Normalized Frobenius reconstruction error ||approx - truth||_F / ||truth||_F.
double frobenius_error(const Eigen::Ref<const Eigen::MatrixXd>& approx,
                       const Eigen::Ref<const Eigen::MatrixXd>& truth);

}  // namespace isfsf::bench
